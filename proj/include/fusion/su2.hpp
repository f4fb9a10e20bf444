#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fusion/algebra.hpp"

namespace fusion {

/// Irreducible representation pi_n of SU(2), of dimension n + 1.
struct Spin {
  std::uint32_t n = 0;
  auto operator<=>(const Spin&) const = default;
};

/// Rep(SU(2)) with the Clebsch-Gordan rule
///   pi_m * pi_n = pi_|m-n| + pi_|m-n|+2 + ... + pi_m+n.
/// The basis is infinite; basis(bound) returns pi_0 .. pi_bound.
class SU2Algebra {
 public:
  using Label = Spin;

  Spin unit() const { return Spin{0}; }
  bool contains(Spin) const { return true; }
  Spin conj(Spin x) const { return x; }
  Element<Spin> fuse(Spin x, Spin y) const;
  BigInt dim(Spin x) const { return BigInt(x.n) + 1; }
  std::vector<Spin> basis(std::size_t bound) const;
  bool is_finite() const { return false; }

  /// "pi3"
  std::string label_name(Spin x) const { return "pi" + std::to_string(x.n); }
  Spin parse_label(const std::string& text) const;
};

}  // namespace fusion
