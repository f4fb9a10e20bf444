#include "fusion/cocycle.hpp"

#include <sstream>

namespace fusion {

CocycleSampler::CocycleSampler(const SamplingOptions& options)
    : options_(options), rng_(options.seed) {
  if (options.entry_bound < 0) throw ValidationError("entry bound must be nonnegative");
}

// Draws use explicit modular reduction rather than std distributions, whose
// output is implementation-defined; reports must be identical across builds.
namespace {
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}
}  // namespace

IntPair CocycleSampler::pair() {
  IntPair v;
  for (int i = 0; i < 3; ++i) v.x[i] = draw(rng_, -options_.entry_bound, options_.entry_bound);
  for (int i = 0; i < 3; ++i) v.y[i] = draw(rng_, -options_.entry_bound, options_.entry_bound);
  return v;
}

IntSL3 CocycleSampler::matrix() {
  IntSL3 a;
  const auto length = static_cast<std::size_t>(draw(rng_, 0, static_cast<std::int64_t>(options_.elementary_length)));
  for (std::size_t k = 0; k < length; ++k) {
    const int i = static_cast<int>(draw(rng_, 0, 2));
    const int j = (i + 1 + static_cast<int>(draw(rng_, 0, 1))) % 3;
    const int sign = draw(rng_, 0, 1) == 0 ? -1 : 1;
    a = a * IntSL3::elementary(i, j, sign);
  }
  return a;
}

IntGamma1 CocycleSampler::element() {
  IntPair v = pair();
  return {std::move(v), matrix()};
}

IdentityReport verify_cocycle_identity(const std::vector<Gamma1Triple>& samples) {
  IdentityReport r{"cocycle_identity"};
  for (const auto& [g, h, k] : samples) {
    ++r.checked;
    const BigInt lhs = omega_tilde(g, h) + omega_tilde(gamma1_multiply(g, h), k);
    const BigInt rhs = omega_tilde(g, gamma1_multiply(h, k)) + omega_tilde(h, k);
    if (lhs != rhs && r.failures++ == 0)
      r.first_witness = "g = " + to_string(g) + ", h = " + to_string(h) + ", k = " + to_string(k) + ": " + to_string(lhs) +
                        " != " + to_string(rhs);
  }
  return r;
}

IdentityReport verify_invariance(const std::vector<InvarianceSample>& samples) {
  IdentityReport r{"invariance"};
  for (const auto& [a, v, w] : samples) {
    ++r.checked;
    const BigInt lhs = omega(sl3_action(a, v), sl3_action(a, w));
    const BigInt rhs = omega(v, w);
    if (lhs != rhs && r.failures++ == 0)
      r.first_witness = "A = " + to_string(a) + ", v = " + to_string(v) + ", w = " + to_string(w);
  }
  return r;
}

IdentityReport verify_antisymmetry(const std::vector<IntPair>& samples) {
  IdentityReport r{"antisymmetry"};
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    ++r.checked;
    const auto& v = samples[i];
    const auto& w = samples[i + 1];
    if (omega(v, w) + omega(w, v) != 0 && r.failures++ == 0) r.first_witness = "v = " + to_string(v) + ", w = " + to_string(w);
  }
  return r;
}

IdentityReport verify_biadditivity(const std::vector<IntPair>& samples) {
  IdentityReport r{"biadditivity"};
  for (std::size_t i = 0; i + 2 < samples.size(); i += 3) {
    ++r.checked;
    const auto& v = samples[i];
    const auto& v2 = samples[i + 1];
    const auto& w = samples[i + 2];
    if (omega(v + v2, w) != omega(v, w) + omega(v2, w) && r.failures++ == 0)
      r.first_witness = "v = " + to_string(v) + ", v' = " + to_string(v2) + ", w = " + to_string(w);
  }
  return r;
}

namespace {
std::string vec_string(const Vec3<BigInt>& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}
}  // namespace

std::string to_string(const IntPair& v) { return "(" + vec_string(v.x) + "," + vec_string(v.y) + ")"; }

std::string to_string(const IntSL3& a) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < 3; ++i) {
    if (i) out << ";";
    for (int j = 0; j < 3; ++j) out << (j ? "," : "") << to_string(a.matrix()[i][j]);
  }
  out << "]";
  return out.str();
}

std::string to_string(const IntGamma1& g) { return "(" + to_string(g.v) + ", " + to_string(g.a) + ")"; }

}  // namespace fusion
