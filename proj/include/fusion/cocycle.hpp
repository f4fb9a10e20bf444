#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <array>

#include "fusion/algebra.hpp"
#include "fusion/bigint.hpp"

namespace fusion {

template <typename Scalar>
using Vec3 = std::array<Scalar, 3>;

/// Row-major 3x3 matrix.
template <typename Scalar>
using Mat3 = std::array<Vec3<Scalar>, 3>;

template <typename Scalar>
Vec3<Scalar> operator+(const Vec3<Scalar>& a, const Vec3<Scalar>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <typename Scalar>
Vec3<Scalar> operator-(const Vec3<Scalar>& a) {
  return {-a[0], -a[1], -a[2]};
}

template <typename Scalar>
Scalar dot(const Vec3<Scalar>& a, const Vec3<Scalar>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <typename Scalar>
Mat3<Scalar> identity3() {
  Mat3<Scalar> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Scalar(i == j ? 1 : 0);
  return m;
}

template <typename Scalar>
Mat3<Scalar> transpose(const Mat3<Scalar>& m) {
  Mat3<Scalar> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

template <typename Scalar>
Vec3<Scalar> operator*(const Mat3<Scalar>& m, const Vec3<Scalar>& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

template <typename Scalar>
Mat3<Scalar> operator*(const Mat3<Scalar>& a, const Mat3<Scalar>& b) {
  Mat3<Scalar> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

/// (x, y) in Z^3 + Z^3.
template <typename Scalar = BigInt>
struct VecPair {
  Vec3<Scalar> x{};
  Vec3<Scalar> y{};

  VecPair() = default;
  VecPair(Vec3<Scalar> x_, Vec3<Scalar> y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend VecPair operator+(const VecPair& a, const VecPair& b) { return {a.x + b.x, a.y + b.y}; }
  friend VecPair operator-(const VecPair& a) { return {-a.x, -a.y}; }
  friend bool operator==(const VecPair& a, const VecPair& b) { return a.x == b.x && a.y == b.y; }
};

template <typename Scalar>
Scalar determinant3(const Mat3<Scalar>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Transposed cofactor matrix; equals the inverse when det = 1.
template <typename Scalar>
Mat3<Scalar> adjugate3(const Mat3<Scalar>& m) {
  Mat3<Scalar> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return adj;
}

/// Integer 3x3 matrix with determinant exactly 1.
template <typename Scalar = BigInt>
class SL3Matrix {
 public:
  SL3Matrix() : m_(identity3<Scalar>()), inv_(identity3<Scalar>()) {}
  explicit SL3Matrix(Mat3<Scalar> m) : m_(std::move(m)) {
    if (determinant3(m_) != Scalar(1)) throw ValidationError("matrix determinant is not 1");
    inv_ = adjugate3(m_);
  }

  static SL3Matrix identity() { return SL3Matrix(); }
  /// I + sign * E_ij, i != j.
  static SL3Matrix elementary(int i, int j, int sign) {
    Mat3<Scalar> m = identity3<Scalar>();
    m[i][j] = Scalar(sign);
    return SL3Matrix(m);
  }

  const Mat3<Scalar>& matrix() const { return m_; }
  const Mat3<Scalar>& inverse_matrix() const { return inv_; }
  SL3Matrix inverse() const { return SL3Matrix(inv_, m_); }

  friend SL3Matrix operator*(const SL3Matrix& a, const SL3Matrix& b) {
    return SL3Matrix(a.m_ * b.m_, b.inv_ * a.inv_);
  }
  friend bool operator==(const SL3Matrix& a, const SL3Matrix& b) { return a.m_ == b.m_; }

 private:
  SL3Matrix(Mat3<Scalar> m, Mat3<Scalar> inv) : m_(std::move(m)), inv_(std::move(inv)) {}
  Mat3<Scalar> m_;
  Mat3<Scalar> inv_;
};

/// ((x, y), A) in SL(3,Z) ⋉ (Z^3 + Z^3).
template <typename Scalar = BigInt>
struct Gamma1Element {
  VecPair<Scalar> v;
  SL3Matrix<Scalar> a;
  friend bool operator==(const Gamma1Element&, const Gamma1Element&) = default;
};

/// Exponent n of the phase e^{ikn}. Since k/2π is irrational, phases are equal
/// exactly when exponents are.
using PhaseExponent = BigInt;

template <typename Scalar>
Scalar omega(const VecPair<Scalar>& v, const VecPair<Scalar>& w) {
  return dot(v.x, w.y) - dot(v.y, w.x);
}

/// A·(x, y) = (Ax, (A^-1)^t y).
template <typename Scalar>
VecPair<Scalar> sl3_action(const SL3Matrix<Scalar>& a, const VecPair<Scalar>& v) {
  return {a.matrix() * v.x, transpose(a.inverse_matrix()) * v.y};
}

template <typename Scalar>
Scalar omega_tilde(const Gamma1Element<Scalar>& g, const Gamma1Element<Scalar>& h) {
  return omega(g.v, sl3_action(g.a, h.v));
}

template <typename Scalar>
Gamma1Element<Scalar> gamma1_multiply(const Gamma1Element<Scalar>& g, const Gamma1Element<Scalar>& h) {
  return {g.v + sl3_action(g.a, h.v), g.a * h.a};
}

template <typename Scalar>
Gamma1Element<Scalar> gamma1_inverse(const Gamma1Element<Scalar>& g) {
  const SL3Matrix<Scalar> inv = g.a.inverse();
  return {-sl3_action(inv, g.v), inv};
}

template <typename Scalar>
Gamma1Element<Scalar> gamma1_identity() {
  return {};
}

// ---------------------------------------------------------------------------
// Sampling and verification (BigInt instantiation)

using IntPair = VecPair<BigInt>;
using IntSL3 = SL3Matrix<BigInt>;
using IntGamma1 = Gamma1Element<BigInt>;

struct SamplingOptions {
  std::uint64_t seed = 1;
  std::int64_t entry_bound = 5;      // vector entries in [-bound, bound]
  std::size_t elementary_length = 6;  // matrices are products of <= this many E_ij(±1)
};

class CocycleSampler {
 public:
  explicit CocycleSampler(const SamplingOptions& options);
  IntPair pair();
  IntSL3 matrix();
  IntGamma1 element();

 private:
  SamplingOptions options_;
  std::mt19937_64 rng_;
};

struct IdentityReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_witness;
  bool passed() const { return failures == 0; }
};

struct Gamma1Triple {
  IntGamma1 g, h, k;
};
struct InvarianceSample {
  IntSL3 a;
  IntPair v, w;
};

/// n(g,h) + n(gh,k) = n(g,hk) + n(h,k) for each triple.
IdentityReport verify_cocycle_identity(const std::vector<Gamma1Triple>& samples);
/// omega(Av, Aw) = omega(v, w) for each sample.
IdentityReport verify_invariance(const std::vector<InvarianceSample>& samples);
/// omega(v, w) + omega(w, v) = 0 on consecutive sample pairs.
IdentityReport verify_antisymmetry(const std::vector<IntPair>& samples);
/// omega(v + v', w) = omega(v, w) + omega(v', w) on consecutive sample triples.
IdentityReport verify_biadditivity(const std::vector<IntPair>& samples);

std::string to_string(const IntPair& v);
std::string to_string(const IntSL3& a);
std::string to_string(const IntGamma1& g);

}  // namespace fusion
