#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fusion/automorphism.hpp"
#include "fusion/verify.hpp"

namespace fusion {

enum class KuroshFailure {
  InvalidInput,            // hypotheses on Γ or A not met
  GroupCase,               // A has no irreducible outside its intrinsic group in scope
  NotDimensionPreserving,  // letter map changes dimensions
  DecompositionFailed,     // a verification step failed
  ScopeExhausted,          // an image letter left the validated scope
};

inline const char* to_string(KuroshFailure f) {
  switch (f) {
    case KuroshFailure::InvalidInput: return "InvalidInput";
    case KuroshFailure::GroupCase: return "GroupCase";
    case KuroshFailure::NotDimensionPreserving: return "NotDimensionPreserving";
    case KuroshFailure::DecompositionFailed: return "DecompositionFailed";
    case KuroshFailure::ScopeExhausted: return "ScopeExhausted";
  }
  return "?";
}

class KuroshError : public FusionError {
 public:
  KuroshError(KuroshFailure kind, int stage, const std::string& witness)
      : FusionError(std::string(to_string(kind)) + (stage > 0 ? " (stage " + std::to_string(stage) + ")" : "") + ": " + witness),
        kind_(kind),
        stage_(stage),
        witness_(witness) {}

  KuroshFailure kind() const { return kind_; }
  int stage() const { return stage_; }
  const std::string& witness() const { return witness_; }

 private:
  KuroshFailure kind_;
  int stage_;
  std::string witness_;
};

/// alpha = (Ad u) ∘ (alpha0 * alpha1).
template <FusionAlgebra A>
struct KuroshFactorization {
  typename GroupFreeProduct<A>::Label u;
  LabelMap<AtomId> alpha0;
  LabelMap<LabelOf<A>> alpha1;

  friend bool operator==(const KuroshFactorization&, const KuroshFactorization&) = default;
};

template <FusionAlgebra A>
Automorphism<A> recompose(std::shared_ptr<const GroupFreeProduct<A>> alg, const KuroshFactorization<A>& f, std::size_t scope_bound) {
  return compose(ad<A>(alg, f.u, scope_bound), free_product_automorphism<A>(alg, f.alpha0, f.alpha1, scope_bound));
}

namespace detail {

template <FusionAlgebra A>
bool is_lambda_letter(const GroupFreeProduct<A>& alg, const typename GroupFreeProduct<A>::Letter& l) {
  return l.index() == 1 && alg.letter_dim(l) == 1;
}

template <FusionAlgebra A>
bool is_single_letter(const typename GroupFreeProduct<A>::Label& w, std::size_t factor) {
  return w.size() == 1 && w[0].index() == factor;
}

}  // namespace detail

/// Factors a dimension-preserving automorphism of N[Γ] * A as
/// (Ad u) ∘ (alpha0 * alpha1), with u an intrinsic word, alpha0 ∈ Aut(Γ) and
/// alpha1 a dimension-preserving automorphism of A.
///
/// Requires Γ finite and nontrivial, A commutative in scope and not a group
/// in scope. Every step is verified; the result is checked by recomposition.
template <FusionAlgebra A>
KuroshFactorization<A> kurosh_decompose(const Automorphism<A>& input) {
  using FP = GroupFreeProduct<A>;
  using W = typename FP::Label;
  using Letter = typename FP::Letter;
  using E = Element<W>;
  const FP& alg = input.algebra();
  const auto alg_ptr = input.algebra_ptr();
  const std::size_t bound = input.scope_bound();
  const A& a = alg.factor1();
  const FiniteAlgebra& gamma = alg.factor0();

  auto fail = [](KuroshFailure kind, int stage, const std::string& what) { throw KuroshError(kind, stage, what); };
  auto name = [&](const auto& w) { return alg.label_name(w); };

  // Hypotheses.
  if (gamma.size() < 2) fail(KuroshFailure::InvalidInput, 0, "the group factor is trivial");
  for (const auto& s : gamma.basis())
    if (!in_intrinsic_group(s, gamma)) fail(KuroshFailure::InvalidInput, 0, "factor 0 is not a group algebra");
  const auto scope = a.basis(bound);
  for (const auto& x : scope)
    for (const auto& y : scope)
      if (!(Element<LabelOf<A>>(a.fuse(x, y)) == Element<LabelOf<A>>(a.fuse(y, x))))
        fail(KuroshFailure::InvalidInput, 0, "factor 1 is not commutative at (" + a.label_name(x) + ", " + a.label_name(y) + ")");

  // Step 1: lambda^2 = min d(x)^2 over G \ Λ; the basis is dimension-sorted so
  // the first such label is a minimizer.
  std::optional<LabelOf<A>> x_min;
  for (const auto& x : scope)
    if (BigInt(a.dim(x)) > 1) {
      x_min = x;
      break;
    }
  if (!x_min) fail(KuroshFailure::GroupCase, 0, "every in-scope irreducible of factor 1 lies in its intrinsic group");

  for (const auto& l : input.letters())
    if (alg.dim(input.image(l)) != alg.letter_dim(l) || alg.dim(input.preimage(l)) != alg.letter_dim(l))
      fail(KuroshFailure::NotDimensionPreserving, 0, "letter '" + alg.letter_name(l) + "' maps to '" + name(input.image(l)) + "'");
  if (auto why = coherence_violation(input)) fail(KuroshFailure::InvalidInput, 0, *why);

  try {
    Automorphism<A> alpha = input;
    W u_total;
    auto absorb = [&](const W& c) {
      // alpha <- Ad(conj c) ∘ alpha, so that input = Ad(u_total c) ∘ alpha.
      alpha = compose(ad<A>(alg_ptr, alg.conj(c), bound), alpha);
      u_total = detail::single_word<A>(alg, alg.fuse(u_total, c), "accumulated conjugator");
    };

    // Step 2: alpha(x) = u y conj(v) with exactly one letter y outside Λ. In
    // reduced form the neighbours of y are Γ-letters, so u and v are empty
    // or end with a Γ-letter.
    const Letter x_letter = FP::letter1(*x_min);
    const W wx = alpha.image(x_letter);
    std::vector<std::size_t> heavy;
    for (std::size_t k = 0; k < wx.size(); ++k)
      if (wx[k].index() == 1 && alg.letter_dim(wx[k]) > 1) heavy.push_back(k);
    if (heavy.size() != 1)
      fail(KuroshFailure::DecompositionFailed, 2,
           "image of " + alg.letter_name(x_letter) + " is " + name(wx) + ", with " + std::to_string(heavy.size()) + " letters outside Λ");
    const std::size_t pos = heavy.front();
    const W u(std::vector<Letter>(wx.letters.begin(), wx.letters.begin() + std::ptrdiff_t(pos)));
    const W q(std::vector<Letter>(wx.letters.begin() + std::ptrdiff_t(pos) + 1, wx.letters.end()));
    const W v = alg.conj(q);

    // Step 3: alpha(x) and alpha(conj x) commute, forcing u = v.
    const W wxbar = alpha.image(FP::letter1(a.conj(*x_min)));
    if (!(E(alg.fuse(wx, wxbar)) == E(alg.fuse(wxbar, wx))))
      fail(KuroshFailure::DecompositionFailed, 2, "images of x and conj(x) do not commute: " + name(wx) + ", " + name(wxbar));
    if (!(u == v)) fail(KuroshFailure::DecompositionFailed, 2, "u = " + name(u) + " differs from v = " + name(v));

    // Step 4.
    absorb(u);

    // Step 5: Λ into Λ, Γ into Δ.
    for (const auto& l : alpha.letters()) {
      const W& img = alpha.image(l);
      if (detail::is_lambda_letter<A>(alg, l) && !(img.size() == 1 && detail::is_lambda_letter<A>(alg, img[0])))
        fail(KuroshFailure::DecompositionFailed, 5, "Λ-letter " + alg.letter_name(l) + " maps to " + name(img));
      if (l.index() == 0 && !is_intrinsic_word(alg, img))
        fail(KuroshFailure::DecompositionFailed, 5, "Γ-letter " + alg.letter_name(l) + " maps outside Δ: " + name(img));
    }

    // Step 6: strip a residual conjugator common to all Γ-letter images.
    const std::size_t cap = std::max<std::size_t>(bound, 1);
    for (std::size_t iteration = 0;; ++iteration) {
      bool all_single = true;
      for (const auto& l : alpha.letters())
        if (l.index() == 0 && !detail::is_single_letter<A>(alpha.image(l), 0)) all_single = false;
      if (all_single) break;
      if (iteration == cap) fail(KuroshFailure::DecompositionFailed, 6, "conjugator strip exceeded " + std::to_string(cap) + " iterations");
      std::optional<Letter> head;
      for (const auto& l : alpha.letters()) {
        if (l.index() != 0) continue;
        const W& img = alpha.image(l);
        if (img.size() < 3 || (head && !(img[0] == *head)) || !(img.letters.back() == alg.letter_conj(img[0])))
          fail(KuroshFailure::DecompositionFailed, 6, "Γ-letter images share no common conjugator (" + alg.letter_name(l) + " -> " + name(img) + ")");
        head = img[0];
      }
      absorb(FP::word_of(*head));
    }

    // Step 7: letters of each kind go to single letters of the same kind,
    // both ways.
    for (const auto& l : alpha.letters())
      for (const W* img : {&alpha.image(l), &alpha.preimage(l)}) {
        const bool ok = l.index() == 0 ? detail::is_single_letter<A>(*img, 0)
                                       : detail::is_single_letter<A>(*img, 1) && alg.letter_dim((*img)[0]) == alg.letter_dim(l);
        if (!ok) fail(KuroshFailure::DecompositionFailed, 7, alg.letter_name(l) + " does not map to a single letter: " + name(*img));
      }

    // Step 8: read off alpha0, alpha1 and check the recomposition.
    KuroshFactorization<A> out;
    out.u = u_total;
    for (const auto& s : gamma.basis()) out.alpha0[s] = s;
    for (const auto& x : scope) out.alpha1[x] = x;
    for (const auto& l : alpha.letters()) {
      const Letter& img = alpha.image(l)[0];
      if (l.index() == 0)
        out.alpha0[std::get<0>(l)] = std::get<0>(img);
      else
        out.alpha1[std::get<1>(l)] = std::get<1>(img);
    }
    Automorphism<A> rebuilt = [&] {
      try {
        return recompose<A>(alg_ptr, out, bound);
      } catch (const ValidationError& e) {
        fail(KuroshFailure::DecompositionFailed, 8, e.what());
        throw;
      }
    }();
    if (!equal_on_letters(rebuilt, input))
      fail(KuroshFailure::DecompositionFailed, 8, "recomposition differs from the input");
    return out;
  } catch (const ScopeExhausted& e) {
    throw KuroshError(KuroshFailure::ScopeExhausted, 0, e.what());
  }
}

// ---------------------------------------------------------------------------
// Enumeration and uniqueness

/// All automorphisms of the group underlying a group algebra.
inline std::vector<LabelMap<AtomId>> group_automorphisms(const FiniteAlgebra& g) {
  const auto elements = g.basis();
  const std::size_t n = elements.size();
  std::vector<std::size_t> order(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    AtomId p = elements[i];
    std::size_t k = 1;
    while (!(p == g.unit())) {
      p = *g.fuse(p, elements[i]).as_irreducible();
      ++k;
    }
    order[i] = k;
  }
  std::vector<LabelMap<AtomId>> out;
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      LabelMap<AtomId> m;
      for (std::size_t k = 0; k < n; ++k) m[elements[k]] = elements[image[k]];
      try {
        validate_group_automorphism(g, m);
        out.push_back(std::move(m));
      } catch (const ValidationError&) {
      }
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || order[t] != order[i]) continue;
      if ((elements[i] == g.unit()) != (elements[t] == g.unit())) continue;
      used[t] = true;
      image[i] = t;
      self(self, i + 1);
      used[t] = false;
    }
  };
  search(search, 0);
  return out;
}

/// All dimension-preserving fusion automorphisms of a finite algebra.
inline std::vector<LabelMap<AtomId>> fusion_automorphisms(const FiniteAlgebra& alg) {
  const auto labels = alg.basis();
  const std::size_t n = labels.size();
  std::vector<LabelMap<AtomId>> out;
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      LabelMap<AtomId> m;
      for (std::size_t k = 0; k < n; ++k) m[labels[k]] = labels[image[k]];
      try {
        validate_fusion_automorphism(alg, m, 0);
        out.push_back(std::move(m));
      } catch (const ValidationError&) {
      }
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || alg.dim(labels[t]) != alg.dim(labels[i])) continue;
      if ((labels[i] == alg.unit()) != (labels[t] == alg.unit())) continue;
      used[t] = true;
      image[i] = t;
      self(self, i + 1);
      used[t] = false;
    }
  };
  search(search, 0);
  return out;
}

struct UniquenessReport {
  std::size_t tuples = 0;
  std::size_t collisions = 0;
  std::vector<std::string> witnesses;
  bool unique() const { return collisions == 0; }
};

/// Brute force over all (u, alpha0, alpha1) with len(u) <= bound: distinct
/// tuples must give automorphisms that differ on some letter.
inline UniquenessReport uniqueness_check(std::shared_ptr<const GroupFreeProduct<FiniteAlgebra>> alg, std::size_t bound) {
  using FP = GroupFreeProduct<FiniteAlgebra>;
  using W = FP::Label;
  const auto words = intrinsic_words(*alg, bound, 0);
  const auto aut0 = group_automorphisms(alg->factor0());
  const auto aut1 = fusion_automorphisms(alg->factor1());
  auto letters = alg->nonunit_letters0(0);
  const auto l1 = alg->nonunit_letters1(0);
  letters.insert(letters.end(), l1.begin(), l1.end());

  UniquenessReport report;
  std::map<std::vector<W>, std::string> seen;
  for (std::size_t i0 = 0; i0 < aut0.size(); ++i0)
    for (std::size_t i1 = 0; i1 < aut1.size(); ++i1) {
      std::vector<W> base;
      for (const auto& l : letters)
        base.push_back(FP::word_of(l.index() == 0 ? FP::letter0(aut0[i0].at(std::get<0>(l))) : FP::letter1(aut1[i1].at(std::get<1>(l)))));
      for (const auto& u : words) {
        const W ubar = alg->conj(u);
        std::vector<W> signature;
        signature.reserve(base.size());
        for (const auto& b : base) {
          Element<W> img;
          for (const auto& [t, m] : alg->fuse(u, b)) img.add_scaled(alg->fuse(t, ubar), m);
          signature.push_back(*img.as_irreducible());
        }
        ++report.tuples;
        const std::string tag = "(u = " + alg->label_name(u) + ", alpha0 #" + std::to_string(i0) + ", alpha1 #" + std::to_string(i1) + ")";
        auto [it, inserted] = seen.emplace(std::move(signature), tag);
        if (!inserted && report.collisions++ < kMaxWitnesses) report.witnesses.push_back(tag + " acts like " + it->second);
      }
    }
  return report;
}

struct CommutationReport {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;
};

/// For intrinsic words x (length <= bound) and letters y of A outside Λ:
/// xy = yx only when x is empty or a single Λ-letter.
template <FusionAlgebra A>
CommutationReport commuting_intrinsic_words(const GroupFreeProduct<A>& alg, std::size_t bound, std::size_t factor_bound) {
  using FP = GroupFreeProduct<A>;
  using W = typename FP::Label;
  CommutationReport report;
  const auto xs = intrinsic_words(alg, bound, factor_bound);
  for (const auto& l : alg.nonunit_letters1(factor_bound)) {
    if (alg.letter_dim(l) == 1) continue;
    const W y = FP::word_of(l);
    for (const auto& x : xs) {
      ++report.pairs;
      if (!(Element<W>(alg.fuse(x, y)) == Element<W>(alg.fuse(y, x)))) continue;
      const bool allowed = x.empty() || (x.size() == 1 && x[0].index() == 1);
      if (!allowed && report.violations++ < kMaxWitnesses)
        report.witnesses.push_back(alg.label_name(x) + " commutes with " + alg.label_name(y));
    }
  }
  return report;
}

}  // namespace fusion
