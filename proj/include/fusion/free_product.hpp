#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fusion/core.hpp"

namespace fusion {

/// An alternating word in the irreducibles of two fusion algebras.
/// The letter's variant index is its factor. The empty word is the unit.
///
/// Words order by length, then lexicographically by (factor, label); this
/// is the canonical basis order of a free product.
template <typename L0, typename L1>
struct Word {
  using Letter = std::variant<L0, L1>;

  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end());
  }
};

/// A word that is not an alternating word of non-unit letters of its algebra.
class MalformedWord : public ForeignLabel {
 public:
  using ForeignLabel::ForeignLabel;
};

/// The free product A0 * A1: irreducibles are alternating words with letters
/// from the non-unit irreducibles of the factors.
template <FusionAlgebra A0, FusionAlgebra A1>
class FreeProduct {
 public:
  using Factor0 = A0;
  using Factor1 = A1;
  using Label = Word<LabelOf<A0>, LabelOf<A1>>;
  using Letter = typename Label::Letter;

  FreeProduct(std::shared_ptr<const A0> f0, std::shared_ptr<const A1> f1) : f0_(std::move(f0)), f1_(std::move(f1)) {}

  const A0& factor0() const { return *f0_; }
  const A1& factor1() const { return *f1_; }
  std::shared_ptr<const A0> factor0_ptr() const { return f0_; }
  std::shared_ptr<const A1> factor1_ptr() const { return f1_; }

  static Letter letter0(LabelOf<A0> x) { return Letter(std::in_place_index<0>, std::move(x)); }
  static Letter letter1(LabelOf<A1> x) { return Letter(std::in_place_index<1>, std::move(x)); }
  static Label word_of(Letter l) { return Label({std::move(l)}); }

  // -- letters

  bool letter_valid(const Letter& l) const {
    if (l.index() == 0) return f0_->contains(std::get<0>(l)) && !(std::get<0>(l) == LabelOf<A0>(f0_->unit()));
    return f1_->contains(std::get<1>(l)) && !(std::get<1>(l) == LabelOf<A1>(f1_->unit()));
  }
  Letter letter_conj(const Letter& l) const {
    if (l.index() == 0) return letter0(f0_->conj(std::get<0>(l)));
    return letter1(f1_->conj(std::get<1>(l)));
  }
  BigInt letter_dim(const Letter& l) const {
    return l.index() == 0 ? BigInt(f0_->dim(std::get<0>(l))) : BigInt(f1_->dim(std::get<1>(l)));
  }
  std::string letter_name(const Letter& l) const {
    return std::to_string(l.index()) + ":" +
           (l.index() == 0 ? f0_->label_name(std::get<0>(l)) : f1_->label_name(std::get<1>(l)));
  }
  /// The letter's factor's intrinsic group contains it.
  bool letter_intrinsic(const Letter& l) const {
    return l.index() == 0 ? in_intrinsic_group(std::get<0>(l), *f0_) : in_intrinsic_group(std::get<1>(l), *f1_);
  }

  // -- FusionAlgebra

  Label unit() const { return Label{}; }

  bool contains(const Label& w) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!letter_valid(w[k])) return false;
      if (k > 0 && w[k].index() == w[k - 1].index()) return false;
    }
    return true;
  }

  Label conj(const Label& w) const {
    Label out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(letter_conj(*it));
    return out;
  }

  BigInt dim(const Label& w) const {
    BigInt d = 1;
    for (const auto& l : w.letters) d *= letter_dim(l);
    return d;
  }

  /// Reduction product of two valid words; no validation (see word_multiply).
  ///
  /// With a = u·x and b = y·v where x, y share a factor:
  ///   a·b = sum_{z != e} m(x,y;z) u·z·v + m(x,y;e) (u·v)
  /// The unit term recurses on the new boundary, so the loop walks inward
  /// once and distributes all other terms immediately.
  Element<Label> fuse(const Label& a, const Label& b) const {
    Element<Label> out;
    std::size_t i = a.size(), j = 0;
    BigInt scale = 1;
    while (true) {
      if (i == 0 || j == b.size() || a[i - 1].index() != b[j].index()) {
        out.add(splice(a, i, nullptr, b, j), scale);
        return out;
      }
      BigInt unit_coefficient = 0;
      auto distribute = [&](const auto& factor, const auto& x, const auto& y, auto make_letter) {
        const auto unit = factor.unit();
        for (const auto& [z, m] : factor.fuse(x, y)) {
          if (z == unit) {
            unit_coefficient = m;
            continue;
          }
          const Letter middle = make_letter(z);
          out.add(splice(a, i - 1, &middle, b, j + 1), m * scale);
        }
      };
      if (b[j].index() == 0)
        distribute(*f0_, std::get<0>(a[i - 1]), std::get<0>(b[j]), [](const auto& z) { return letter0(z); });
      else
        distribute(*f1_, std::get<1>(a[i - 1]), std::get<1>(b[j]), [](const auto& z) { return letter1(z); });
      if (unit_coefficient.is_zero()) return out;
      scale *= unit_coefficient;
      --i;
      ++j;
    }
  }

  std::vector<Label> basis(std::size_t bound) const { return words(bound, bound); }

  /// Words of length <= max_len over the factors' basis(factor_bound), in
  /// canonical order.
  std::vector<Label> words(std::size_t max_len, std::size_t factor_bound) const {
    return enumerate_words(nonunit_letters0(factor_bound), nonunit_letters1(factor_bound), max_len);
  }

  bool is_finite() const {
    const bool trivial0 = f0_->is_finite() && f0_->basis(0).size() == 1;
    const bool trivial1 = f1_->is_finite() && f1_->basis(0).size() == 1;
    return (trivial0 && f1_->is_finite()) || (trivial1 && f0_->is_finite());
  }

  /// "0:g;1:std;0:g"; the unit word prints as "e".
  std::string label_name(const Label& w) const {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0) out += ';';
      out += letter_name(w[k]);
    }
    return out;
  }

  /// Accepts "" or "e" for the unit, otherwise ';'-separated "factor:label".
  Label parse_label(const std::string& text) const {
    Label w;
    if (text.empty() || text == "e") return w;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(';', start), text.size());
      const std::string item = text.substr(start, end - start);
      const std::size_t colon = item.find(':');
      if (colon == std::string::npos || colon == 0)
        throw ValidationError("malformed letter '" + item + "' (expected factor:label)");
      const std::string factor = item.substr(0, colon), name = item.substr(colon + 1);
      if (factor == "0")
        w.letters.push_back(letter0(f0_->parse_label(name)));
      else if (factor == "1")
        w.letters.push_back(letter1(f1_->parse_label(name)));
      else
        throw ValidationError("factor index must be 0 or 1 in '" + item + "'");
      start = end + 1;
    }
    if (!contains(w)) throw ValidationError("'" + text + "' is not an alternating word of non-unit letters");
    return w;
  }

  std::vector<Letter> nonunit_letters0(std::size_t factor_bound) const {
    std::vector<Letter> out;
    for (const auto& x : f0_->basis(factor_bound))
      if (!(x == LabelOf<A0>(f0_->unit()))) out.push_back(letter0(x));
    return out;
  }
  std::vector<Letter> nonunit_letters1(std::size_t factor_bound) const {
    std::vector<Letter> out;
    for (const auto& x : f1_->basis(factor_bound))
      if (!(x == LabelOf<A1>(f1_->unit()))) out.push_back(letter1(x));
    return out;
  }

  /// All alternating words of length <= max_len over the given letters of
  /// factor 0 and factor 1, in canonical order.
  static std::vector<Label> enumerate_words(const std::vector<Letter>& letters0, const std::vector<Letter>& letters1,
                                            std::size_t max_len) {
    std::vector<Label> out{Label{}};
    std::vector<Letter> current;
    auto extend = [&](auto&& self, std::size_t length) -> void {
      if (current.size() == length) {
        out.emplace_back(current);
        return;
      }
      const bool after0 = !current.empty() && current.back().index() == 0;
      const bool after1 = !current.empty() && current.back().index() == 1;
      if (!after0)
        for (const auto& l : letters0) {
          current.push_back(l);
          self(self, length);
          current.pop_back();
        }
      if (!after1)
        for (const auto& l : letters1) {
          current.push_back(l);
          self(self, length);
          current.pop_back();
        }
    };
    for (std::size_t length = 1; length <= max_len; ++length) extend(extend, length);
    return out;
  }

 private:
  /// a[0..i) + middle + b[j..)
  static Label splice(const Label& a, std::size_t i, const Letter* middle, const Label& b, std::size_t j) {
    Label w;
    w.letters.reserve(i + (middle ? 1 : 0) + (b.size() - j));
    w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.begin() + std::ptrdiff_t(i));
    if (middle) w.letters.push_back(*middle);
    w.letters.insert(w.letters.end(), b.letters.begin() + std::ptrdiff_t(j), b.letters.end());
    return w;
  }

  std::shared_ptr<const A0> f0_;
  std::shared_ptr<const A1> f1_;
};

template <FusionAlgebra A0, FusionAlgebra A1>
FreeProduct<A0, A1> free_product(std::shared_ptr<const A0> a0, std::shared_ptr<const A1> a1) {
  return FreeProduct<A0, A1>(std::move(a0), std::move(a1));
}

template <FusionAlgebra A0, FusionAlgebra A1>
FreeProduct<A0, A1> free_product(A0 a0, A1 a1) {
  return FreeProduct<A0, A1>(std::make_shared<const A0>(std::move(a0)), std::make_shared<const A1>(std::move(a1)));
}

/// Product of two words; throws MalformedWord on a non-alternating word or
/// a unit letter.
template <FusionAlgebra A0, FusionAlgebra A1>
Element<typename FreeProduct<A0, A1>::Label> word_multiply(const typename FreeProduct<A0, A1>::Label& w1,
                                                           const typename FreeProduct<A0, A1>::Label& w2,
                                                           const FreeProduct<A0, A1>& alg) {
  for (const auto* w : {&w1, &w2})
    if (!alg.contains(*w)) throw MalformedWord("malformed word '" + alg.label_name(*w) + "'");
  return alg.fuse(w1, w2);
}

/// Words of length <= max_len whose letters lie in the factors' intrinsic
/// groups (restricted to basis(factor_bound)); the intrinsic group of the
/// free product.
template <FusionAlgebra A0, FusionAlgebra A1>
std::vector<typename FreeProduct<A0, A1>::Label> intrinsic_words(const FreeProduct<A0, A1>& alg, std::size_t max_len,
                                                                 std::size_t factor_bound) {
  using Letter = typename FreeProduct<A0, A1>::Letter;
  auto keep = [&](std::vector<Letter> letters) {
    std::erase_if(letters, [&](const Letter& l) { return !alg.letter_intrinsic(l); });
    return letters;
  };
  return FreeProduct<A0, A1>::enumerate_words(keep(alg.nonunit_letters0(factor_bound)),
                                              keep(alg.nonunit_letters1(factor_bound)), max_len);
}

// ---------------------------------------------------------------------------
// Freeness of two subalgebras

template <typename SourceLabel, typename AmbientLabel>
using Embedding = std::map<SourceLabel, AmbientLabel>;

struct FreenessVerdict {
  bool free = true;
  std::size_t max_len = 0;
  std::size_t factor_bound = 0;
  std::size_t products_checked = 0;
  /// First failing alternating sequence, as "i:label" items.
  std::vector<std::string> witness;
  /// Its product in the ambient algebra.
  std::string witness_product;

  std::string witness_literal() const {
    std::string out;
    for (std::size_t k = 0; k < witness.size(); ++k) out += (k ? ";" : "") + witness[k];
    return out;
  }
};

/// Checks that every alternating product of non-unit irreducibles of the two
/// embedded subalgebras (up to length max_len, factors truncated to
/// basis(factor_bound)) is a single irreducible different from e.
template <FusionAlgebra Ambient, FusionAlgebra S0, FusionAlgebra S1>
FreenessVerdict check_freeness(const Ambient& ambient, const S0& s0, const Embedding<LabelOf<S0>, LabelOf<Ambient>>& embed0,
                               const S1& s1, const Embedding<LabelOf<S1>, LabelOf<Ambient>>& embed1, std::size_t max_len,
                               std::size_t factor_bound) {
  using AL = LabelOf<Ambient>;
  if (max_len < 1) throw ValidationError("max_len must be at least 1");
  const AL ambient_unit = ambient.unit();

  struct Generator {
    std::size_t factor;
    std::string name;
    AL image;
  };
  auto collect = [&](const auto& source, const auto& embed, std::size_t factor) {
    using SL = std::decay_t<decltype(source.unit())>;
    const SL source_unit = source.unit();
    std::vector<Generator> out;
    if (auto it = embed.find(source_unit); it != embed.end() && !(it->second == ambient_unit))
      throw ValidationError("embedding " + std::to_string(factor) + " does not send the unit to the unit");
    for (const auto& x : source.basis(factor_bound)) {
      if (x == source_unit) continue;
      auto it = embed.find(x);
      if (it == embed.end())
        throw ValidationError("embedding " + std::to_string(factor) + " has no image for '" + source.label_name(x) + "'");
      if (!ambient.contains(it->second))
        throw ValidationError("image of '" + source.label_name(x) + "' is not an irreducible of the ambient algebra");
      out.push_back({factor, std::to_string(factor) + ":" + source.label_name(x), it->second});
    }
    return out;
  };
  const std::vector<Generator> gens[2] = {collect(s0, embed0, 0), collect(s1, embed1, 1)};

  FreenessVerdict verdict;
  verdict.max_len = max_len;
  verdict.factor_bound = factor_bound;

  struct Partial {
    std::vector<std::size_t> path;  // indices into gens[factor], factors alternate
    std::size_t first_factor;
    std::size_t last_factor;
    AL product;
  };
  auto fail = [&](const Partial& p, const Generator& g, const std::string& product) {
    verdict.free = false;
    for (std::size_t k = 0; k < p.path.size(); ++k) verdict.witness.push_back(gens[(p.first_factor + k) % 2][p.path[k]].name);
    verdict.witness.push_back(g.name);
    verdict.witness_product = product;
  };

  std::vector<Partial> frontier;
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t k = 0; k < gens[f].size(); ++k) {
      ++verdict.products_checked;
      const Generator& g = gens[f][k];
      if (g.image == ambient_unit) {
        fail(Partial{{}, f, f, ambient_unit}, g, ambient.label_name(ambient_unit));
        return verdict;
      }
      frontier.push_back({{k}, f, f, g.image});
    }

  for (std::size_t length = 2; length <= max_len; ++length) {
    std::vector<Partial> next;
    for (const auto& p : frontier) {
      const std::size_t f = 1 - p.last_factor;
      for (std::size_t k = 0; k < gens[f].size(); ++k) {
        ++verdict.products_checked;
        const Generator& g = gens[f][k];
        const Element<AL> prod = ambient.fuse(p.product, g.image);
        const auto single = prod.as_irreducible();
        if (!single || *single == ambient_unit) {
          fail(p, g, format(prod, ambient));
          return verdict;
        }
        if (length < max_len) {
          Partial q{p.path, p.first_factor, f, *single};
          q.path.push_back(k);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return verdict;
}

/// The canonical embeddings of the factors into their free product.
template <FusionAlgebra A0, FusionAlgebra A1>
std::pair<Embedding<LabelOf<A0>, typename FreeProduct<A0, A1>::Label>, Embedding<LabelOf<A1>, typename FreeProduct<A0, A1>::Label>>
canonical_embeddings(const FreeProduct<A0, A1>& alg, std::size_t factor_bound) {
  using FP = FreeProduct<A0, A1>;
  std::pair<Embedding<LabelOf<A0>, typename FP::Label>, Embedding<LabelOf<A1>, typename FP::Label>> out;
  for (const auto& x : alg.factor0().basis(factor_bound))
    out.first[x] = x == LabelOf<A0>(alg.factor0().unit()) ? typename FP::Label{} : FP::word_of(FP::letter0(x));
  for (const auto& x : alg.factor1().basis(factor_bound))
    out.second[x] = x == LabelOf<A1>(alg.factor1().unit()) ? typename FP::Label{} : FP::word_of(FP::letter1(x));
  return out;
}

}  // namespace fusion
