#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "fusion/bigint.hpp"

namespace fusion {

/// A finitely supported N-linear combination of irreducibles.
///
/// Stored as a sparse map ordered by the label's canonical order; zero
/// coefficients are never stored, so equality is structural.
template <typename Label>
class Element {
 public:
  using Terms = std::map<Label, BigInt>;
  using const_iterator = typename Terms::const_iterator;

  Element() = default;
  explicit Element(Label x) { terms_.emplace(std::move(x), BigInt(1)); }
  Element(Label x, BigInt multiplicity) { add(std::move(x), std::move(multiplicity)); }

  void add(const Label& x, const BigInt& multiplicity) {
    if (multiplicity.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, multiplicity);
    if (!inserted) it->second += multiplicity;
  }

  void add(Label&& x, const BigInt& multiplicity) {
    if (multiplicity.is_zero()) return;
    auto it = terms_.find(x);
    if (it == terms_.end())
      terms_.emplace(std::move(x), multiplicity);
    else
      it->second += multiplicity;
  }

  /// this += scale * other
  void add_scaled(const Element& other, const BigInt& scale) {
    if (scale.is_zero()) return;
    for (const auto& [x, m] : other.terms_) add(x, m * scale);
  }

  Element& operator+=(const Element& other) {
    for (const auto& [x, m] : other.terms_) add(x, m);
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }

  friend Element operator*(const BigInt& scale, const Element& a) {
    Element out;
    out.add_scaled(a, scale);
    return out;
  }

  BigInt coefficient(const Label& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Total multiplicity, i.e. the number of irreducibles counted with repetition.
  BigInt total_multiplicity() const {
    BigInt n = 0;
    for (const auto& [x, m] : terms_) n += m;
    return n;
  }

  /// The label if this element is a single irreducible with multiplicity one.
  std::optional<Label> as_irreducible() const {
    if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
    return terms_.begin()->first;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

}  // namespace fusion
