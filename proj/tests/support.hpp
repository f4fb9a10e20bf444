#pragma once

#include <memory>
#include <random>
#include <string>

#include "fusion/io.hpp"
#include "fusion/kurosh.hpp"

namespace fusion::testing {

inline std::string data_path(const std::string& relative) { return std::string(FUSION_DATA_DIR) + "/" + relative; }

inline std::shared_ptr<const FiniteAlgebra> finite(const std::string& relative) {
  return std::get<std::shared_ptr<const FiniteAlgebra>>(load_algebra(data_path(relative)));
}

inline std::shared_ptr<const FreeFF> free_ff(const std::string& group, const std::string& other) {
  return std::make_shared<const FreeFF>(finite(group), finite(other));
}

inline AtomId label(const FiniteAlgebra& alg, const std::string& name) { return alg.parse_label(name); }

template <FusionAlgebra A>
ElementOf<A> elem(const A& alg, const std::string& literal) {
  return parse_element(literal, alg);
}

/// Random element with support in basis(bound) and coefficients in [0, max_coeff].
template <FusionAlgebra A>
ElementOf<A> random_element(const A& alg, std::size_t bound, std::mt19937_64& rng, unsigned max_coeff = 3) {
  ElementOf<A> out;
  for (const auto& x : alg.basis(bound)) out.add(x, BigInt(rng() % (max_coeff + 1)));
  return out;
}

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

/// A random (u, alpha0, alpha1) with len(u) <= max_u_len, and the automorphism
/// (Ad u) o (alpha0 * alpha1) it defines.
struct RandomAutomorphism {
  KuroshFactorization<FiniteAlgebra> tuple;
  Automorphism<FiniteAlgebra> alpha;
};

class AutomorphismSampler {
 public:
  AutomorphismSampler(std::shared_ptr<const FreeFF> alg, std::size_t max_u_len)
      : alg_(std::move(alg)),
        words_(intrinsic_words(*alg_, max_u_len, 0)),
        aut0_(group_automorphisms(alg_->factor0())),
        aut1_(fusion_automorphisms(alg_->factor1())) {}

  RandomAutomorphism draw(std::mt19937_64& rng) const {
    KuroshFactorization<FiniteAlgebra> t{pick(words_, rng), pick(aut0_, rng), pick(aut1_, rng)};
    return {t, recompose<FiniteAlgebra>(alg_, t, 0)};
  }

  std::size_t group_automorphism_count() const { return aut0_.size(); }
  std::size_t fusion_automorphism_count() const { return aut1_.size(); }

 private:
  std::shared_ptr<const FreeFF> alg_;
  std::vector<FreeFF::Label> words_;
  std::vector<LabelMap<AtomId>> aut0_;
  std::vector<LabelMap<AtomId>> aut1_;
};

}  // namespace fusion::testing
