#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fusion/algebra.hpp"

namespace fusion {

/// Index of an irreducible in a FiniteAlgebra. Indices follow the canonical
/// (dimension-sorted) basis order.
struct AtomId {
  std::uint32_t index = 0;
  auto operator<=>(const AtomId&) const = default;
};

/// Raw defining data of a finite fusion algebra, in any label order.
struct FiniteTableData {
  struct Constant {
    std::size_t x, y, z;
    BigInt multiplicity;
  };

  std::string name;
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> conj;
  std::vector<BigInt> dims;
  std::vector<Constant> constants;
};

/// Table-backed fusion algebra with finitely many irreducibles.
///
/// Construction checks only structural well-formedness (indices in range,
/// positive dimensions, usable names); the fusion axioms are checked by
/// verify_axioms. Immutable after construction.
class FiniteAlgebra {
 public:
  using Label = AtomId;

  explicit FiniteAlgebra(FiniteTableData data);

  const std::string& name() const { return name_; }
  std::size_t size() const { return names_.size(); }

  AtomId unit() const { return unit_; }
  bool contains(AtomId x) const { return x.index < names_.size(); }
  AtomId conj(AtomId x) const { return conj_.at(x.index); }
  const Element<AtomId>& fuse(AtomId x, AtomId y) const { return products_.at(x.index * size() + y.index); }
  const BigInt& dim(AtomId x) const { return dims_.at(x.index); }
  std::vector<AtomId> basis(std::size_t /*bound*/ = 0) const;
  bool is_finite() const { return true; }

  std::string label_name(AtomId x) const;
  AtomId parse_label(const std::string& text) const;
  std::optional<AtomId> find(const std::string& text) const;

  /// Original position of each label in the defining data.
  std::size_t source_index(AtomId x) const { return source_index_.at(x.index); }

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::map<std::string, AtomId> by_name_;
  AtomId unit_;
  std::vector<AtomId> conj_;
  std::vector<BigInt> dims_;
  std::vector<Element<AtomId>> products_;
  std::vector<std::size_t> source_index_;
};

/// Names usable inside word and element literals.
bool is_valid_label_name(const std::string& name);

}  // namespace fusion
