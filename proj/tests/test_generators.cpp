#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>

#include "fusion/verify.hpp"
#include "support.hpp"

using namespace fusion;
using namespace fusion::testing;

namespace {

using Perm = std::array<int, 3>;

// Composition st: apply t first, then s.
Perm compose(const Perm& s, const Perm& t) { return {s[t[0] - 1], s[t[1] - 1], s[t[2] - 1]}; }

// A5 character table: classes 1, (12)(34), (123), (12345), (13524) with
// sizes 1, 15, 20, 12, 12; rows e, p3, p3b, p4, p5. All values are real.
double a5_oracle(int x, int y, int z) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const std::array<double, 5> sizes{1, 15, 20, 12, 12};
  const std::array<std::array<double, 5>, 5> chi{{
      {1, 1, 1, 1, 1},
      {3, -1, 0, phi, 1 - phi},
      {3, -1, 0, 1 - phi, phi},
      {4, 0, 1, -1, -1},
      {5, 1, -1, 0, 0},
  }};
  double sum = 0;
  for (int c = 0; c < 5; ++c) sum += sizes[c] * chi[x][c] * chi[y][c] * chi[z][c];
  return sum / 60;
}

}  // namespace

TEST_CASE("group_algebra: Z/2 and S3") {
  auto z2 = finite("groups/z2.json");
  CHECK(z2->fuse(label(*z2, "g"), label(*z2, "g")) == Element<AtomId>(z2->unit()));

  auto s3 = finite("groups/s3.json");
  const Perm p12{2, 1, 3}, p13{3, 2, 1}, p132{3, 1, 2};
  CHECK(compose(p12, p13) == p132);
  CHECK(s3->fuse(label(*s3, "(12)"), label(*s3, "(13)")) == Element<AtomId>(label(*s3, "(132)")));
  for (const auto& s : s3->basis()) {
    CHECK(in_intrinsic_group(s, *s3));
    for (const auto& t : s3->basis()) {
      const auto prod = s3->fuse(s, t).as_irreducible();
      CHECK(prod.has_value());
    }
  }
}

TEST_CASE("group tables are validated") {
  auto j = read_json_file(data_path("groups/z3.json"));
  j["table"][1][1] = "g";
  CHECK_THROWS_AS(group_algebra(parse_group_table(j)), ValidationError);

  // Latin square with identity but not associative (a loop of order 5).
  GroupTable loop;
  loop.name = "loop";
  loop.elements = {"e", "a", "b", "c", "d"};
  loop.table = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(loop.validate(), doctest::Contains("associativity"), ValidationError);
  CHECK_NOTHROW(cyclic_group(7).validate());
}

TEST_CASE("rep_ring_from_characters: Z/3, S3, A5") {
  auto z3 = finite("characters/rep_z3.json");
  CHECK(z3->fuse(label(*z3, "w"), label(*z3, "w")) == Element<AtomId>(label(*z3, "w2")));
  CHECK(z3->conj(label(*z3, "w")) == label(*z3, "w2"));

  auto s3 = finite("characters/rep_s3.json");
  CHECK(format(Element<AtomId>(s3->fuse(label(*s3, "std"), label(*s3, "std"))), *s3) == "e + sgn + std");

  auto a5 = finite("characters/rep_a5.json");
  const std::array<std::string, 5> names{"e", "p3", "p3b", "p4", "p5"};
  CHECK(std::lround(a5_oracle(1, 2, 4)) == 1);
  CHECK(multiplicity(label(*a5, "p3"), label(*a5, "p3b"), label(*a5, "p5"), *a5) == 1);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z)
        CHECK(multiplicity(label(*a5, names[x]), label(*a5, names[y]), label(*a5, names[z]), *a5) == std::lround(a5_oracle(x, y, z)));
}

TEST_CASE("rep_ring_from_characters rejects inconsistent tables") {
  auto j = read_json_file(data_path("characters/rep_s3.json"));
  j["irreducibles"][2]["values"][2] = -0.5;
  CHECK_THROWS_AS(rep_ring_from_characters(parse_character_table(j)), ValidationError);

  CharacterTable t = parse_character_table(read_json_file(data_path("characters/rep_s3.json")));
  t.classes[1].size = 2;
  CHECK_THROWS_AS(rep_ring_from_characters(t), ValidationError);
}

TEST_CASE("property: shipped rep rings satisfy the axioms and Burnside's identity") {
  const std::array<std::pair<const char*, int>, 6> tables{{{"characters/rep_s3.json", 6},
                                                           {"characters/rep_s4.json", 24},
                                                           {"characters/rep_a4.json", 12},
                                                           {"characters/rep_a5.json", 60},
                                                           {"characters/rep_d4.json", 8},
                                                           {"characters/rep_q8.json", 8}}};
  for (const auto& [path, order] : tables) {
    auto alg = finite(path);
    CHECK(verify_axioms(*alg, 0).passed());
    BigInt sum = 0;
    for (const auto& x : alg->basis()) sum += alg->dim(x) * alg->dim(x);
    CHECK(sum == order);
  }
  for (int n = 1; n <= 12; ++n) {
    auto alg = finite("characters/rep_z" + std::to_string(n) + ".json");
    CHECK(alg->size() == std::size_t(n));
    CHECK(verify_axioms(*alg, 0).passed());
  }
}

TEST_CASE("basis is dimension-sorted with the unit first") {
  auto s4 = finite("characters/rep_s4.json");
  const auto b = s4->basis();
  CHECK(b.front() == s4->unit());
  for (std::size_t k = 1; k < b.size(); ++k) CHECK(s4->dim(b[k - 1]) <= s4->dim(b[k]));
}

TEST_CASE("Rep(SU(2)) follows the Clebsch-Gordan rule") {
  SU2Algebra su2;
  CHECK(su2.fuse(Spin{0}, Spin{5}) == Element<Spin>(Spin{5}));
  CHECK(format(Element<Spin>(su2.fuse(Spin{1}, Spin{1})), su2) == "pi0 + pi2");
  CHECK(dim(Element<Spin>(su2.fuse(Spin{2}, Spin{3})), su2) == 12);
  for (std::uint32_t m = 0; m <= 20; ++m)
    for (std::uint32_t n = 0; n <= 20; ++n) {
      const Element<Spin> p = su2.fuse(Spin{m}, Spin{n});
      CHECK(p.size() == std::min(m, n) + 1);
      for (const auto& [x, k] : p) CHECK(k == 1);
      CHECK(dim(p, su2) == BigInt(m + 1) * (n + 1));
    }
  CHECK(verify_axioms(su2, 8).passed());
  CHECK(su2.label_name(Spin{4}) == "pi4");
  CHECK(su2.parse_label("pi12") == Spin{12});
  CHECK_THROWS_AS(su2.parse_label("pi-1"), ValidationError);
}

TEST_CASE("fusion_from_table") {
  const ExplicitTable s3t = parse_explicit_table(read_json_file(data_path("tables/rep_s3_explicit.json")));
  const FiniteAlgebra s3x = fusion_from_table(s3t);
  auto s3c = finite("characters/rep_s3.json");
  for (const auto& x : s3x.basis())
    for (const auto& y : s3x.basis())
      for (const auto& z : s3x.basis())
        CHECK(multiplicity(x, y, z, s3x) ==
              multiplicity(label(*s3c, s3x.label_name(x)), label(*s3c, s3x.label_name(y)), label(*s3c, s3x.label_name(z)), *s3c));

  const ExplicitTable bad = parse_explicit_table(read_json_file(data_path("tables/z3_bad_conj.json")));
  try {
    fusion_from_table(bad);
    FAIL("accepted a table without Frobenius symmetry");
  } catch (const AxiomViolation& e) {
    CHECK_FALSE(e.report().check(check_names::kFrobenius).passed());
    CHECK_FALSE(e.report().check(check_names::kFrobenius).witnesses.empty());
  }
  CHECK_THROWS_AS(parse_explicit_table(read_json_file(data_path("tables/ising_like.json"))), ValidationError);
}
