#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <variant>

#include "json.hpp"

#include "fusion/automorphism.hpp"
#include "fusion/finite_algebra.hpp"
#include "fusion/free_product.hpp"
#include "fusion/generators.hpp"
#include "fusion/su2.hpp"

namespace fusion {

using FreeFF = FreeProduct<FiniteAlgebra, FiniteAlgebra>;
using FreeFS = FreeProduct<FiniteAlgebra, SU2Algebra>;
using FreeSF = FreeProduct<SU2Algebra, FiniteAlgebra>;
using FreeSS = FreeProduct<SU2Algebra, SU2Algebra>;

/// Factors of a free product are finite algebras or Rep(SU(2)).
using LoadedFactor = std::variant<std::shared_ptr<const FiniteAlgebra>, std::shared_ptr<const SU2Algebra>>;

using LoadedAlgebra = std::variant<std::shared_ptr<const FiniteAlgebra>, std::shared_ptr<const SU2Algebra>,
                                   std::shared_ptr<const FreeFF>, std::shared_ptr<const FreeFS>,
                                   std::shared_ptr<const FreeSF>, std::shared_ptr<const FreeSS>>;

/// Reads a JSON document; ValidationError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Builds an algebra from a description. Relative paths inside the
/// description resolve against base_dir. With checked = false, explicit
/// tables skip the axiom check (the verifier reports on them instead).
LoadedAlgebra algebra_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir, bool checked = true);
LoadedAlgebra load_algebra(const std::filesystem::path& path, bool checked = true);

/// A factor description: an inline object or a path string.
LoadedFactor factor_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

std::string kind_name(const LoadedAlgebra& a);

/// Parses "2*x + y" style literals; "0" is the zero element.
template <FusionAlgebra A>
ElementOf<A> parse_element(const std::string& text, const A& alg) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
  };
  ElementOf<A> out;
  const std::string whole = trim(text);
  if (whole == "0") return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = whole.find('+', start);
    std::string term = trim(whole.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    if (term.empty()) throw ValidationError("empty term in element literal '" + text + "'");
    BigInt coefficient = 1;
    if (const auto star = term.find('*'); star != std::string::npos) {
      const std::string digits = trim(term.substr(0, star));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("bad coefficient '" + digits + "' in element literal '" + text + "'");
      coefficient = BigInt(digits);
      term = trim(term.substr(star + 1));
    }
    out.add(alg.parse_label(term), coefficient);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

/// Reads an automorphism description against a given ℕ[Γ] * A.
///
///   {"kind": "automorphism", "scope_bound": 0,
///    "images": {"0:g": "0:g", "1:std": "0:g;1:std;0:g"},
///    "inverse": {...}}
///
/// Letters missing from "images" are fixed. Without "inverse", inverse
/// images are found by search over words up to the longest image length.
template <FusionAlgebra A>
Automorphism<A> automorphism_from_json(const nlohmann::json& j, std::shared_ptr<const GroupFreeProduct<A>> alg) {
  using FP = GroupFreeProduct<A>;
  using W = typename FP::Label;
  using LetterMap = typename Automorphism<A>::LetterMap;
  if (!j.is_object() || j.value("kind", "") != "automorphism") throw ValidationError("expected an object with kind \"automorphism\"");
  const std::size_t bound = j.value("scope_bound", std::size_t{0});
  auto letters = alg->nonunit_letters0(bound);
  for (const auto& l : alg->nonunit_letters1(bound)) letters.push_back(l);

  auto read_map = [&](const nlohmann::json& m, const char* field) {
    if (!m.is_object()) throw ValidationError(std::string("\"") + field + "\" must be an object");
    LetterMap out;
    for (const auto& l : letters) out[l] = FP::word_of(l);
    for (const auto& [key, value] : m.items()) {
      const W source = alg->parse_label(key);
      if (source.size() != 1) throw ValidationError(std::string("key '") + key + "' in \"" + field + "\" is not a letter");
      if (!out.count(source[0])) throw ValidationError(std::string("letter '") + key + "' is outside the scope");
      if (!value.is_string()) throw ValidationError(std::string("image of '") + key + "' must be a word literal");
      out[source[0]] = alg->parse_label(value.template get<std::string>());
    }
    return out;
  };
  if (!j.contains("images")) throw ValidationError("automorphism has no \"images\"");
  const LetterMap fwd = read_map(j.at("images"), "images");
  if (j.contains("inverse")) return Automorphism<A>(alg, bound, fwd, read_map(j.at("inverse"), "inverse"));

  constexpr std::size_t kSearchLimit = 200000;
  std::size_t max_len = 1;
  for (const auto& [l, w] : fwd) max_len = std::max(max_len, w.size());
  const Automorphism<A> probe(alg, bound, fwd, fwd);
  const auto candidates = alg->words(max_len, bound);
  if (candidates.size() > kSearchLimit)
    throw ValidationError("inverse search space exceeds " + std::to_string(kSearchLimit) + " words; supply \"inverse\"");
  LetterMap bwd;
  for (const auto& w : candidates) {
    const auto img = apply(probe, w).as_irreducible();
    if (img && img->size() == 1 && fwd.count((*img)[0]) && !bwd.count((*img)[0])) bwd[(*img)[0]] = w;
    if (bwd.size() == letters.size()) break;
  }
  for (const auto& l : letters)
    if (!bwd.count(l))
      throw ValidationError("no preimage of letter '" + alg->letter_name(l) + "' among words of length <= " + std::to_string(max_len));
  return Automorphism<A>(alg, bound, fwd, bwd);
}

}  // namespace fusion
