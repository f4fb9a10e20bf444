#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusion/finite_algebra.hpp"
#include "fusion/free_product.hpp"

namespace fusion {

/// An image letter, or a letter to be mapped, that lies outside the scope an
/// automorphism was built for.
class ScopeExhausted : public FusionError {
 public:
  using FusionError::FusionError;
};

template <typename L>
using LabelMap = std::map<L, L>;

/// N[Γ] * A with Γ a finite group (factor 0) and A a fusion algebra (factor 1).
template <FusionAlgebra A>
using GroupFreeProduct = FreeProduct<FiniteAlgebra, A>;

/// A letter-level description of an automorphism of N[Γ] * A.
///
/// `forward` and `backward` give the images of the in-scope letters under the
/// map and its inverse: every non-unit element of Γ, and the non-unit labels
/// of A.basis(scope_bound). Images are extended to words by multiplicativity.
/// Construction checks only that both maps cover the scope with valid words;
/// coherence and dimension preservation are separate predicates.
template <FusionAlgebra A>
class Automorphism {
 public:
  using Algebra = GroupFreeProduct<A>;
  using Word = typename Algebra::Label;
  using Letter = typename Algebra::Letter;
  using LetterMap = std::map<Letter, Word>;

  Automorphism(std::shared_ptr<const Algebra> alg, std::size_t scope_bound, LetterMap forward, LetterMap backward)
      : alg_(std::move(alg)), bound_(scope_bound), forward_(std::move(forward)), backward_(std::move(backward)) {
    letters_ = alg_->nonunit_letters0(bound_);
    const auto l1 = alg_->nonunit_letters1(bound_);
    letters_.insert(letters_.end(), l1.begin(), l1.end());
    for (const auto* m : {&forward_, &backward_}) {
      if (m->size() != letters_.size()) throw ValidationError("letter map does not cover exactly the in-scope letters");
      for (const auto& l : letters_) {
        auto it = m->find(l);
        if (it == m->end()) throw ValidationError("no image for letter '" + alg_->letter_name(l) + "'");
        if (!alg_->contains(it->second))
          throw ValidationError("image of '" + alg_->letter_name(l) + "' is not an irreducible word");
      }
    }
  }

  const Algebra& algebra() const { return *alg_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return alg_; }
  std::size_t scope_bound() const { return bound_; }
  const std::vector<Letter>& letters() const { return letters_; }
  const LetterMap& forward() const { return forward_; }
  const LetterMap& backward() const { return backward_; }

  const Word& image(const Letter& l) const { return lookup(forward_, l); }
  const Word& preimage(const Letter& l) const { return lookup(backward_, l); }

 private:
  const Word& lookup(const LetterMap& m, const Letter& l) const {
    auto it = m.find(l);
    if (it == m.end()) throw ScopeExhausted("letter '" + alg_->letter_name(l) + "' is outside the automorphism's scope");
    return it->second;
  }

  std::shared_ptr<const Algebra> alg_;
  std::size_t bound_;
  std::vector<Letter> letters_;
  LetterMap forward_;
  LetterMap backward_;
};

namespace detail {

/// Image of a word under a letter map, extended multiplicatively.
template <FusionAlgebra A, typename Lookup>
Element<typename GroupFreeProduct<A>::Label> map_word(const GroupFreeProduct<A>& alg, const typename GroupFreeProduct<A>::Label& w,
                                                      Lookup&& lookup) {
  using E = Element<typename GroupFreeProduct<A>::Label>;
  E acc{alg.unit()};
  for (const auto& l : w.letters) {
    const auto& img = lookup(l);
    E next;
    for (const auto& [t, m] : acc) next.add_scaled(alg.fuse(t, img), m);
    acc = std::move(next);
  }
  return acc;
}

template <FusionAlgebra A>
typename GroupFreeProduct<A>::Label single_word(const GroupFreeProduct<A>& alg, const Element<typename GroupFreeProduct<A>::Label>& e,
                                                const std::string& what) {
  auto w = e.as_irreducible();
  if (!w) throw ValidationError(what + " is not irreducible: " + format(e, alg));
  return *w;
}

}  // namespace detail

/// Extends the letter images multiplicatively and additively.
template <FusionAlgebra A>
Element<typename GroupFreeProduct<A>::Label> apply(const Automorphism<A>& alpha, const Element<typename GroupFreeProduct<A>::Label>& a) {
  Element<typename GroupFreeProduct<A>::Label> out;
  for (const auto& [w, m] : a) {
    if (!alpha.algebra().contains(w)) throw MalformedWord("malformed word '" + alpha.algebra().label_name(w) + "'");
    out.add_scaled(detail::map_word<A>(alpha.algebra(), w, [&](const auto& l) -> const auto& { return alpha.image(l); }), m);
  }
  return out;
}

template <FusionAlgebra A>
Element<typename GroupFreeProduct<A>::Label> apply(const Automorphism<A>& alpha, const typename GroupFreeProduct<A>::Label& w) {
  return apply(alpha, Element<typename GroupFreeProduct<A>::Label>(w));
}

template <FusionAlgebra A>
Automorphism<A> identity_automorphism(std::shared_ptr<const GroupFreeProduct<A>> alg, std::size_t scope_bound) {
  typename Automorphism<A>::LetterMap m;
  for (const auto& l : alg->nonunit_letters0(scope_bound)) m[l] = GroupFreeProduct<A>::word_of(l);
  for (const auto& l : alg->nonunit_letters1(scope_bound)) m[l] = GroupFreeProduct<A>::word_of(l);
  return Automorphism<A>(std::move(alg), scope_bound, m, m);
}

/// All letters of u lie in the factors' intrinsic groups.
template <FusionAlgebra A>
bool is_intrinsic_word(const GroupFreeProduct<A>& alg, const typename GroupFreeProduct<A>::Label& u) {
  if (!alg.contains(u)) return false;
  for (const auto& l : u.letters)
    if (!alg.letter_intrinsic(l)) return false;
  return true;
}

/// Ad u: x -> u x conj(u), for an intrinsic word u.
template <FusionAlgebra A>
Automorphism<A> ad(std::shared_ptr<const GroupFreeProduct<A>> alg, const typename GroupFreeProduct<A>::Label& u, std::size_t scope_bound) {
  using W = typename GroupFreeProduct<A>::Label;
  if (!is_intrinsic_word(*alg, u))
    throw ValidationError("Ad(" + alg->label_name(u) + ") is not an automorphism: the word is not intrinsic");
  const W ubar = alg->conj(u);
  auto conjugate_by = [&](const W& c, const W& cbar, const W& x) {
    Element<W> out;
    for (const auto& [t, m] : alg->fuse(c, x)) out.add_scaled(alg->fuse(t, cbar), m);
    return detail::single_word(*alg, out, "u x conj(u)");
  };
  typename Automorphism<A>::LetterMap fwd, bwd;
  auto letters = alg->nonunit_letters0(scope_bound);
  const auto l1 = alg->nonunit_letters1(scope_bound);
  letters.insert(letters.end(), l1.begin(), l1.end());
  for (const auto& l : letters) {
    const W x = GroupFreeProduct<A>::word_of(l);
    fwd[l] = conjugate_by(u, ubar, x);
    bwd[l] = conjugate_by(ubar, u, x);
  }
  return Automorphism<A>(std::move(alg), scope_bound, std::move(fwd), std::move(bwd));
}

/// Throws ValidationError unless `alpha0` is an automorphism of the group
/// whose group algebra is `g`.
inline void validate_group_automorphism(const FiniteAlgebra& g, const LabelMap<AtomId>& alpha0) {
  const std::size_t n = g.size();
  if (alpha0.size() != n) throw ValidationError("group map must be defined on every element");
  std::vector<bool> hit(n);
  for (const auto& [s, t] : alpha0) {
    if (!g.contains(s) || !g.contains(t)) throw ValidationError("group map uses an unknown element");
    if (hit[t.index]) throw ValidationError("group map is not injective at '" + g.label_name(t) + "'");
    hit[t.index] = true;
  }
  for (const auto& [s, as] : alpha0)
    for (const auto& [t, at] : alpha0) {
      const auto st = g.fuse(s, t).as_irreducible();
      const auto image = g.fuse(as, at).as_irreducible();
      if (!st || !image) throw ValidationError("factor 0 is not a group algebra");
      if (alpha0.at(*st) != *image)
        throw ValidationError("group map is not multiplicative at (" + g.label_name(s) + ", " + g.label_name(t) + ")");
    }
}

/// Throws ValidationError (with a witness) unless `alpha1` is a dimension
/// preserving fusion automorphism on alg.basis(scope_bound).
template <FusionAlgebra A>
void validate_fusion_automorphism(const A& alg, const LabelMap<LabelOf<A>>& alpha1, std::size_t scope_bound) {
  using L = LabelOf<A>;
  const std::vector<L> scope = alg.basis(scope_bound);
  if (alpha1.size() != scope.size()) throw ValidationError("fusion map must be defined on exactly the in-scope labels");
  std::map<L, L> inverse;
  for (const auto& x : scope) {
    auto it = alpha1.find(x);
    if (it == alpha1.end()) throw ValidationError("fusion map has no image for '" + alg.label_name(x) + "'");
    if (!alpha1.count(it->second)) throw ValidationError("fusion map sends '" + alg.label_name(x) + "' out of scope");
    if (!inverse.emplace(it->second, x).second) throw ValidationError("fusion map is not injective");
    if (BigInt(alg.dim(it->second)) != BigInt(alg.dim(x)))
      throw ValidationError("fusion map changes the dimension of '" + alg.label_name(x) + "' (" + BigInt(alg.dim(x)).str() + " -> " +
                            BigInt(alg.dim(it->second)).str() + ")");
  }
  if (!(alpha1.at(alg.unit()) == L(alg.unit()))) throw ValidationError("fusion map does not fix the unit");
  for (const auto& x : scope)
    if (!(alpha1.at(alg.conj(x)) == L(alg.conj(alpha1.at(x)))))
      throw ValidationError("fusion map does not commute with conjugation at '" + alg.label_name(x) + "'");
  for (const auto& x : scope)
    for (const auto& y : scope) {
      const Element<L> xy = alg.fuse(x, y);
      const Element<L> image = alg.fuse(alpha1.at(x), alpha1.at(y));
      for (const auto& z : scope)
        if (xy.coefficient(z) != image.coefficient(alpha1.at(z)))
          throw ValidationError("fusion map breaks m(" + alg.label_name(x) + ", " + alg.label_name(y) + "; " + alg.label_name(z) + ")");
    }
}

/// alpha0 * alpha1: acts letterwise.
template <FusionAlgebra A>
Automorphism<A> free_product_automorphism(std::shared_ptr<const GroupFreeProduct<A>> alg, const LabelMap<AtomId>& alpha0,
                                          const LabelMap<LabelOf<A>>& alpha1, std::size_t scope_bound) {
  using FP = GroupFreeProduct<A>;
  validate_group_automorphism(alg->factor0(), alpha0);
  validate_fusion_automorphism(alg->factor1(), alpha1, scope_bound);
  typename Automorphism<A>::LetterMap fwd, bwd;
  for (const auto& [s, t] : alpha0) {
    if (s == alg->factor0().unit()) continue;
    fwd[FP::letter0(s)] = FP::word_of(FP::letter0(t));
    bwd[FP::letter0(t)] = FP::word_of(FP::letter0(s));
  }
  for (const auto& [x, y] : alpha1) {
    if (x == LabelOf<A>(alg->factor1().unit())) continue;
    fwd[FP::letter1(x)] = FP::word_of(FP::letter1(y));
    bwd[FP::letter1(y)] = FP::word_of(FP::letter1(x));
  }
  return Automorphism<A>(std::move(alg), scope_bound, std::move(fwd), std::move(bwd));
}

/// alpha ∘ beta. Throws ScopeExhausted when an image of beta leaves alpha's scope.
template <FusionAlgebra A>
Automorphism<A> compose(const Automorphism<A>& alpha, const Automorphism<A>& beta) {
  if (&alpha.algebra() != &beta.algebra()) throw ValidationError("automorphisms act on different algebras");
  if (alpha.scope_bound() != beta.scope_bound()) throw ValidationError("automorphisms have different scopes");
  const auto& alg = alpha.algebra();
  typename Automorphism<A>::LetterMap fwd, bwd;
  for (const auto& l : alpha.letters()) {
    fwd[l] = detail::single_word(alg, detail::map_word<A>(alg, beta.image(l), [&](const auto& x) -> const auto& { return alpha.image(x); }),
                                 "composite image of '" + alg.letter_name(l) + "'");
    bwd[l] = detail::single_word(alg, detail::map_word<A>(alg, alpha.preimage(l), [&](const auto& x) -> const auto& { return beta.preimage(x); }),
                                 "composite preimage of '" + alg.letter_name(l) + "'");
  }
  return Automorphism<A>(alpha.algebra_ptr(), alpha.scope_bound(), std::move(fwd), std::move(bwd));
}

template <FusionAlgebra A>
Automorphism<A> inverse(const Automorphism<A>& alpha) {
  return Automorphism<A>(alpha.algebra_ptr(), alpha.scope_bound(), alpha.backward(), alpha.forward());
}

/// Same image on every in-scope letter.
template <FusionAlgebra A>
bool equal_on_letters(const Automorphism<A>& alpha, const Automorphism<A>& beta) {
  return alpha.forward() == beta.forward();
}

/// d(alpha(w)) = d(w) for every letter and every word of length <= bound
/// over the in-scope letters.
template <FusionAlgebra A>
bool is_dimension_preserving(const Automorphism<A>& alpha, std::size_t bound) {
  const auto& alg = alpha.algebra();
  for (const auto& l : alpha.letters())
    if (alg.dim(alpha.image(l)) != alg.letter_dim(l)) return false;
  for (const auto& w : alg.words(bound, alpha.scope_bound()))
    if (dim(apply(alpha, w), alg) != alg.dim(w)) return false;
  return true;
}

/// First coherence violation, if any: letter images irreducible, backward
/// inverts forward on letters, conjugation respected, and multiplicativity on
/// products of two in-scope letters whose result stays in scope.
template <FusionAlgebra A>
std::optional<std::string> coherence_violation(const Automorphism<A>& alpha) {
  using W = typename GroupFreeProduct<A>::Label;
  using E = Element<W>;
  const auto& alg = alpha.algebra();
  const auto inv = inverse(alpha);
  auto scoped = [&](const W& w) {
    for (const auto& l : w.letters)
      if (!alpha.forward().count(l)) return false;
    return true;
  };
  try {
    for (const auto& l : alpha.letters()) {
      const W x = GroupFreeProduct<A>::word_of(l);
      if (apply(inv, apply(alpha, x)) != E(x)) return "backward does not invert forward at '" + alg.letter_name(l) + "'";
      if (apply(alpha, apply(inv, x)) != E(x)) return "forward does not invert backward at '" + alg.letter_name(l) + "'";
      if (apply(alpha, alg.conj(x)) != E(alg.conj(alpha.image(l))))
        return "conjugation not respected at '" + alg.letter_name(l) + "'";
    }
    for (const auto& a : alpha.letters())
      for (const auto& b : alpha.letters()) {
        const W wa = GroupFreeProduct<A>::word_of(a), wb = GroupFreeProduct<A>::word_of(b);
        const E prod = alg.fuse(wa, wb);
        bool all_scoped = true;
        for (const auto& [t, m] : prod) all_scoped = all_scoped && scoped(t);
        if (!all_scoped) continue;
        E lhs = apply(alpha, prod), rhs;
        for (const auto& [t, m] : alg.fuse(alpha.image(a), alpha.image(b))) rhs.add(t, m);
        if (lhs != rhs) return "not multiplicative at (" + alg.letter_name(a) + ", " + alg.letter_name(b) + ")";
      }
  } catch (const ScopeExhausted& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

}  // namespace fusion
