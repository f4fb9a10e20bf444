#pragma once

#include <sstream>
#include <string>

#include "fusion/algebra.hpp"

namespace fusion {

template <FusionAlgebra A>
void require_label(const A& alg, const LabelOf<A>& x) {
  if (!alg.contains(x)) throw ForeignLabel("label '" + alg.label_name(x) + "' does not belong to this algebra");
}

template <FusionAlgebra A>
void require_element(const A& alg, const ElementOf<A>& a) {
  for (const auto& [x, m] : a) require_label(alg, x);
}

/// Bilinear extension of `fuse`.
template <FusionAlgebra A>
ElementOf<A> multiply(const ElementOf<A>& a, const ElementOf<A>& b, const A& alg) {
  require_element(alg, a);
  require_element(alg, b);
  ElementOf<A> out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) out.add_scaled(alg.fuse(x, y), m * n);
  return out;
}

template <FusionAlgebra A>
ElementOf<A> conjugate(const ElementOf<A>& a, const A& alg) {
  require_element(alg, a);
  ElementOf<A> out;
  for (const auto& [x, m] : a) out.add(alg.conj(x), m);
  return out;
}

template <FusionAlgebra A>
BigInt dim(const ElementOf<A>& a, const A& alg) {
  require_element(alg, a);
  BigInt d = 0;
  for (const auto& [x, m] : a) d += m * BigInt(alg.dim(x));
  return d;
}

/// m(x,y;z): the coefficient of z in x*y.
template <FusionAlgebra A>
BigInt multiplicity(const LabelOf<A>& x, const LabelOf<A>& y, const LabelOf<A>& z, const A& alg) {
  require_label(alg, x);
  require_label(alg, y);
  require_label(alg, z);
  return ElementOf<A>(alg.fuse(x, y)).coefficient(z);
}

/// x is included in y iff y = x + z for some element z.
template <typename Label>
bool is_included(const Element<Label>& x, const Element<Label>& y) {
  for (const auto& [label, m] : x)
    if (y.coefficient(label) < m) return false;
  return true;
}

/// Inclusion restricted to one algebra; labels outside it make the answer
/// false and are described in `diagnostic` when given.
template <FusionAlgebra A>
bool is_included(const ElementOf<A>& x, const ElementOf<A>& y, const A& alg, std::string* diagnostic = nullptr) {
  for (const auto* e : {&x, &y})
    for (const auto& [label, m] : *e)
      if (!alg.contains(label)) {
        if (diagnostic) *diagnostic = "foreign label '" + alg.label_name(label) + "'";
        return false;
      }
  return is_included(x, y);
}

/// x x̄ = e.
template <FusionAlgebra A>
bool in_intrinsic_group(const LabelOf<A>& x, const A& alg) {
  require_label(alg, x);
  const ElementOf<A> p = alg.fuse(x, alg.conj(x));
  auto single = p.as_irreducible();
  return single && *single == LabelOf<A>(alg.unit());
}

/// "e + sgn + 2*std"; the zero element prints as "0".
template <FusionAlgebra A>
std::string format(const ElementOf<A>& a, const A& alg) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, m] : a) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << '*';
    os << alg.label_name(x);
  }
  return os.str();
}

}  // namespace fusion
