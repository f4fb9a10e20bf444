#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "fusion/verify.hpp"
#include "support.hpp"

using namespace fusion;
using namespace fusion::testing;

namespace {

// Character table of S4 (classes 1, (12), (12)(34), (123), (1234) with sizes
// 1, 6, 3, 8, 6), rows e, sgn, rho, v, vsgn. All characters are real.
constexpr std::array<int, 5> kS4ClassSizes{1, 6, 3, 8, 6};
constexpr std::array<std::array<int, 5>, 5> kS4Chars{{
    {1, 1, 1, 1, 1},
    {1, -1, 1, 1, -1},
    {2, 0, 2, -1, 0},
    {3, 1, -1, 0, -1},
    {3, -1, -1, 0, 1},
}};
const std::array<std::string, 5> kS4Names{"e", "sgn", "rho", "v", "vsgn"};

long s4_oracle(int x, int y, int z) {
  long sum = 0;
  for (int c = 0; c < 5; ++c) sum += kS4ClassSizes[c] * kS4Chars[x][c] * kS4Chars[y][c] * kS4Chars[z][c];
  return sum / 24;
}

}  // namespace

TEST_CASE("element stores no zero coefficients and compares structurally") {
  auto s3 = finite("characters/rep_s3.json");
  Element<AtomId> a;
  a.add(label(*s3, "std"), 0);
  CHECK(a.is_zero());
  a.add(label(*s3, "std"), 2);
  a.add(label(*s3, "sgn"), 1);
  Element<AtomId> b;
  b.add(label(*s3, "sgn"), 1);
  b.add(label(*s3, "std"), 2);
  CHECK(a == b);
  CHECK(a.size() == 2);
  CHECK(format(a, *s3) == "sgn + 2*std");
}

TEST_CASE("multiply: unit law, Rep(S3) std*std, Z/2 g*g") {
  auto s3 = finite("characters/rep_s3.json");
  for (const auto& x : s3->basis()) CHECK(multiply(Element<AtomId>(s3->unit()), Element<AtomId>(x), *s3) == Element<AtomId>(x));
  CHECK(format(multiply(elem(*s3, "std"), elem(*s3, "std"), *s3), *s3) == "e + sgn + std");
  auto z2 = finite("groups/z2.json");
  CHECK(multiply(elem(*z2, "g"), elem(*z2, "g"), *z2) == elem(*z2, "e"));
}

TEST_CASE("multiply rejects foreign labels") {
  auto s3 = finite("characters/rep_s3.json");
  Element<AtomId> foreign(AtomId{17});
  CHECK_THROWS_AS(multiply(foreign, elem(*s3, "e"), *s3), ForeignLabel);
  CHECK_THROWS_AS(conjugate(foreign, *s3), ForeignLabel);
  CHECK_THROWS_AS(dim(foreign, *s3), ForeignLabel);
  CHECK_THROWS_AS(multiplicity(AtomId{17}, s3->unit(), s3->unit(), *s3), ForeignLabel);
}

TEST_CASE("conjugate") {
  auto s3 = finite("characters/rep_s3.json");
  auto z3 = finite("groups/z3.json");
  CHECK(conjugate(elem(*s3, "e"), *s3) == elem(*s3, "e"));
  CHECK(conjugate(elem(*z3, "g"), *z3) == elem(*z3, "g2"));
  CHECK(conjugate(elem(*s3, "std"), *s3) == elem(*s3, "std"));
}

TEST_CASE("dim") {
  auto s3 = finite("characters/rep_s3.json");
  auto s4 = finite("characters/rep_s4.json");
  CHECK(dim(elem(*s3, "e"), *s3) == 1);
  CHECK(dim(elem(*s3, "std + std"), *s3) == 4);
  CHECK(dim(elem(*s4, "e + sgn + rho + v + vsgn"), *s4) == 10);
}

TEST_CASE("multiplicity agrees with the S4 character oracle") {
  auto s4 = finite("characters/rep_s4.json");
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z)
        CHECK(multiplicity(label(*s4, kS4Names[x]), label(*s4, kS4Names[y]), label(*s4, kS4Names[z]), *s4) == s4_oracle(x, y, z));
}

TEST_CASE("unit coefficient is 1 exactly at the conjugate") {
  auto s4 = finite("characters/rep_s4.json");
  for (const auto& x : s4->basis())
    for (const auto& y : s4->basis()) CHECK(multiplicity(x, y, s4->unit(), *s4) == (y == s4->conj(x) ? 1 : 0));
  auto s3 = finite("characters/rep_s3.json");
  CHECK(multiplicity(label(*s3, "std"), label(*s3, "std"), label(*s3, "std"), *s3) == 1);
}

TEST_CASE("is_included") {
  auto s3 = finite("characters/rep_s3.json");
  for (const auto& x : s3->basis()) {
    CHECK(is_included(Element<AtomId>(x), Element<AtomId>(x)));
    CHECK(is_included(Element<AtomId>(s3->unit()), Element<AtomId>(s3->fuse(x, s3->conj(x)))));
  }
  CHECK_FALSE(is_included(elem(*s3, "2*sgn"), multiply(elem(*s3, "std"), elem(*s3, "std"), *s3)));
  std::string why;
  CHECK_FALSE(is_included(Element<AtomId>(AtomId{9}), elem(*s3, "e"), *s3, &why));
  CHECK(why.find("foreign") != std::string::npos);
}

TEST_CASE("in_intrinsic_group") {
  auto s3 = finite("characters/rep_s3.json");
  CHECK(in_intrinsic_group(s3->unit(), *s3));
  CHECK(in_intrinsic_group(label(*s3, "sgn"), *s3));
  CHECK_FALSE(in_intrinsic_group(label(*s3, "std"), *s3));
  auto s3g = finite("groups/s3.json");
  for (const auto& s : s3g->basis()) CHECK(in_intrinsic_group(s, *s3g));
}

TEST_CASE("verify_axioms on Rep(S4), Z/6 and a corrupted table") {
  auto s4 = finite("characters/rep_s4.json");
  const AxiomReport r = verify_axioms(*s4, 0);
  CHECK(r.passed());
  CHECK(r.check(check_names::kFrobenius).checked == 125);

  auto z6 = finite("groups/z6.json");
  CHECK(verify_axioms(*z6, 0).passed());
  for (const auto& x : z6->basis()) CHECK(in_intrinsic_group(x, *z6));

  const auto bad = std::get<std::shared_ptr<const FiniteAlgebra>>(load_algebra(data_path("tables/rep_s3_corrupted.json"), false));
  const AxiomReport rb = verify_axioms(*bad, 0);
  CHECK_FALSE(rb.passed());
  const CheckResult& frob = rb.check(check_names::kFrobenius);
  REQUIRE(frob.failures > 0);
  bool names_triple = false;
  for (const auto& w : frob.witnesses) names_triple = names_triple || w.find("m(std, std; sgn) = 2") != std::string::npos;
  CHECK(names_triple);
}

TEST_CASE("property: dimension is multiplicative and inclusion is compatible with addition") {
  auto s4 = finite("characters/rep_s4.json");
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(*s4, 0, rng);
    const auto b = random_element(*s4, 0, rng);
    const auto c = random_element(*s4, 0, rng);
    CHECK(dim(multiply(a, b, *s4), *s4) == dim(a, *s4) * dim(b, *s4));
    CHECK(multiply(multiply(a, b, *s4), c, *s4) == multiply(a, multiply(b, c, *s4), *s4));
    CHECK(conjugate(multiply(a, b, *s4), *s4) == multiply(conjugate(b, *s4), conjugate(a, *s4), *s4));
    CHECK(is_included(a, a + b));
    if (is_included(a, b)) CHECK(is_included(a + c, b + c));
    if (is_included(a, b) && is_included(b, a)) CHECK(a == b);
    if (is_included(a, b) && is_included(b, c)) CHECK(is_included(a, c));
  }
}

TEST_CASE("property: intrinsic group, d = 1 and the square-root-two bound agree") {
  for (const char* path : {"characters/rep_s4.json", "characters/rep_a5.json", "characters/rep_q8.json", "groups/d4.json"}) {
    auto alg = finite(path);
    for (const auto& x : alg->basis()) {
      const bool intrinsic = in_intrinsic_group(x, *alg);
      CHECK(intrinsic == (alg->dim(x) == 1));
      if (!intrinsic) CHECK(alg->dim(x) * alg->dim(x) >= 2);
    }
  }
}
