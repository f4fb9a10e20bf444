#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/core.hpp"

namespace fusion {

inline constexpr std::size_t kMaxWitnesses = 5;

struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return failures == 0; }

  void record(bool ok, const auto& describe) {
    ++checked;
    if (ok) return;
    if (failures++ < kMaxWitnesses) witnesses.push_back(describe());
  }
};

struct AxiomReport {
  std::size_t scope_size = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  const CheckResult& check(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no check named " + std::string(name));
  }
};

namespace check_names {
inline constexpr std::string_view kUnitLaws = "unit_laws";
inline constexpr std::string_view kConjInvolutive = "conjugation_involutive";
inline constexpr std::string_view kFrobenius = "frobenius_reciprocity";
inline constexpr std::string_view kUnitCoefficient = "unit_coefficient";
inline constexpr std::string_view kAssociativity = "associativity";
inline constexpr std::string_view kAntiMultiplicative = "conjugation_anti_multiplicative";
inline constexpr std::string_view kDimUnit = "dim_unit";
inline constexpr std::string_view kDimConjugation = "dim_conjugation";
inline constexpr std::string_view kDimMultiplicative = "dim_multiplicative";
inline constexpr std::string_view kDimLowerBound = "dim_at_least_one";
inline constexpr std::string_view kIntrinsicGroup = "intrinsic_group_iff_dim_one";
inline constexpr std::string_view kSqrtTwoBound = "dim_squared_at_least_two";
}  // namespace check_names

/// Checks the fusion-algebra axioms and the dimension-function laws on every
/// label of `alg.basis(bound)` (pairs and triples drawn from that scope).
/// Violations are reported, never thrown.
template <FusionAlgebra A>
AxiomReport verify_axioms(const A& alg, std::size_t bound) {
  using L = LabelOf<A>;
  using E = ElementOf<A>;
  constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  const std::vector<L> scope = alg.basis(bound);
  const std::size_t n = scope.size();
  const L unit = alg.unit();

  std::map<L, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(scope[i], i);
  auto index_of = [&](const L& x) {
    auto it = index.find(x);
    return it == index.end() ? npos : it->second;
  };
  auto name = [&](const L& x) { return alg.label_name(x); };

  std::vector<E> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = alg.fuse(scope[i], scope[j]);
  auto prod = [&](std::size_t i, std::size_t j) -> const E& { return products[i * n + j]; };

  std::vector<L> conj(n);
  std::vector<std::size_t> conj_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    conj[i] = alg.conj(scope[i]);
    conj_index[i] = index_of(conj[i]);
  }

  AxiomReport report;
  report.scope_size = n;
  auto new_check = [&](std::string_view check_name) -> CheckResult& {
    report.checks.emplace_back();
    report.checks.back().name = std::string(check_name);
    return report.checks.back();
  };

  {
    auto& c = new_check(check_names::kUnitLaws);
    for (std::size_t i = 0; i < n; ++i) {
      const E single(scope[i]);
      c.record(E(alg.fuse(unit, scope[i])) == single && E(alg.fuse(scope[i], unit)) == single,
               [&] { return "e*" + name(scope[i]) + " or " + name(scope[i]) + "*e differs from " + name(scope[i]); });
    }
  }

  {
    auto& c = new_check(check_names::kConjInvolutive);
    for (std::size_t i = 0; i < n; ++i)
      c.record(L(alg.conj(conj[i])) == scope[i], [&] { return "conj(conj(" + name(scope[i]) + ")) != " + name(scope[i]); });
  }

  {
    // m(x,y;z) = m(x̄,z;y) for all in-scope triples. Only triples where one
    // side is nonzero can fail, so both supports are walked; the count
    // reports every triple covered.
    auto& c = new_check(check_names::kFrobenius);
    auto describe = [&](std::size_t i, std::size_t j, std::size_t k, const BigInt& lhs, const BigInt& rhs) {
      return "m(" + name(scope[i]) + ", " + name(scope[j]) + "; " + name(scope[k]) + ") = " + lhs.str() + " but m(" +
             name(conj[i]) + ", " + name(scope[k]) + "; " + name(scope[j]) + ") = " + rhs.str();
    };
    std::size_t failures = 0;
    auto fail = [&](std::size_t i, std::size_t j, std::size_t k, const BigInt& lhs, const BigInt& rhs) {
      if (failures++ < kMaxWitnesses) c.witnesses.push_back(describe(i, j, k, lhs, rhs));
    };
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<E> conj_row;
      if (conj_index[i] == npos) {
        conj_row.reserve(n);
        for (std::size_t k = 0; k < n; ++k) conj_row.push_back(alg.fuse(conj[i], scope[k]));
      }
      auto rhs_product = [&](std::size_t k) -> const E& {
        return conj_index[i] == npos ? conj_row[k] : prod(conj_index[i], k);
      };
      // Pass 1: triples with m(x,y;z) != 0.
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [z, m] : prod(i, j)) {
          const std::size_t k = index_of(z);
          if (k == npos) continue;
          const BigInt rhs = rhs_product(k).coefficient(scope[j]);
          if (rhs != m) fail(i, j, k, m, rhs);
        }
      // Pass 2: triples with m(x̄,z;y) != 0 but m(x,y;z) == 0.
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [y, m] : rhs_product(k)) {
          const std::size_t j = index_of(y);
          if (j == npos) continue;
          if (prod(i, j).coefficient(scope[k]).is_zero()) fail(i, j, k, BigInt(0), m);
        }
    }
    c.checked = n * n * n;
    c.failures = failures;
  }

  {
    auto& c = new_check(check_names::kUnitCoefficient);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const BigInt expected = scope[j] == conj[i] ? 1 : 0;
        const BigInt got = prod(i, j).coefficient(unit);
        c.record(got == expected,
                 [&] { return "m(" + name(scope[i]) + ", " + name(scope[j]) + "; e) = " + got.str() + ", expected " + expected.str(); });
      }
  }

  {
    auto& c = new_check(check_names::kAssociativity);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const E& xy = prod(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          E lhs, rhs;
          for (const auto& [t, m] : xy) lhs.add_scaled(alg.fuse(t, scope[k]), m);
          for (const auto& [t, m] : prod(j, k)) rhs.add_scaled(alg.fuse(scope[i], t), m);
          c.record(lhs == rhs, [&] {
            return "(" + name(scope[i]) + "*" + name(scope[j]) + ")*" + name(scope[k]) + " = " + format(lhs, alg) +
                   " but " + name(scope[i]) + "*(" + name(scope[j]) + "*" + name(scope[k]) + ") = " + format(rhs, alg);
          });
        }
      }
  }

  {
    auto& c = new_check(check_names::kAntiMultiplicative);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        E lhs;
        for (const auto& [t, m] : prod(i, j)) lhs.add(alg.conj(t), m);
        const E rhs = alg.fuse(conj[j], conj[i]);
        c.record(lhs == rhs, [&] { return "conj(" + name(scope[i]) + "*" + name(scope[j]) + ") = " + format(lhs, alg) +
                                          " but conj(y)*conj(x) = " + format(rhs, alg); });
      }
  }

  {
    auto& c = new_check(check_names::kDimUnit);
    c.record(BigInt(alg.dim(unit)) == 1, [&] { return "d(e) = " + BigInt(alg.dim(unit)).str(); });
  }

  {
    auto& c = new_check(check_names::kDimConjugation);
    for (std::size_t i = 0; i < n; ++i)
      c.record(BigInt(alg.dim(conj[i])) == BigInt(alg.dim(scope[i])), [&] { return "d(conj(" + name(scope[i]) + ")) != d(" + name(scope[i]) + ")"; });
  }

  {
    auto& c = new_check(check_names::kDimMultiplicative);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt d = 0;
        for (const auto& [t, m] : prod(i, j)) d += m * BigInt(alg.dim(t));
        const BigInt expected = BigInt(alg.dim(scope[i])) * BigInt(alg.dim(scope[j]));
        c.record(d == expected, [&] { return "d(" + name(scope[i]) + "*" + name(scope[j]) + ") = " + d.str() + ", expected " + expected.str(); });
      }
  }

  {
    auto& c = new_check(check_names::kDimLowerBound);
    for (std::size_t i = 0; i < n; ++i)
      c.record(BigInt(alg.dim(scope[i])) >= 1, [&] { return "d(" + name(scope[i]) + ") < 1"; });
  }

  std::vector<bool> intrinsic(n);
  for (std::size_t i = 0; i < n; ++i) {
    const E xx = conj_index[i] == npos ? E(alg.fuse(scope[i], conj[i])) : prod(i, conj_index[i]);
    const auto single = xx.as_irreducible();
    intrinsic[i] = single && *single == unit;
  }

  {
    auto& c = new_check(check_names::kIntrinsicGroup);
    for (std::size_t i = 0; i < n; ++i) {
      const bool dim_one = BigInt(alg.dim(scope[i])) == 1;
      c.record(intrinsic[i] == dim_one, [&] {
        return name(scope[i]) + (intrinsic[i] ? " satisfies x*conj(x) = e" : " has x*conj(x) != e") + " but d = " +
               BigInt(alg.dim(scope[i])).str();
      });
    }
  }

  {
    auto& c = new_check(check_names::kSqrtTwoBound);
    for (std::size_t i = 0; i < n; ++i) {
      if (intrinsic[i]) continue;
      const BigInt d = alg.dim(scope[i]);
      c.record(d * d >= 2, [&] { return name(scope[i]) + " is outside the intrinsic group but d^2 = " + BigInt(d * d).str(); });
    }
  }

  return report;
}

}  // namespace fusion
