// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli_runner.hpp"
#include "fusion/cocycle.hpp"
#include "fusion/verify.hpp"
#include "support.hpp"

using namespace fusion;
using namespace fusion::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) detail = what;
    ok = false;
  }
};

bool run(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    std::ostringstream s;
    s << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
    out.require(seconds < limit_seconds, s.str());
  }
  std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", number, out.ok ? "PASS" : "FAIL", title.c_str(), seconds,
              out.ok ? "" : "  -- ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

void require_report(Outcome& out, const AxiomReport& r, const std::string& what) {
  for (const auto& c : r.checks)
    out.require(c.passed(), what + ": " + c.name + (c.witnesses.empty() ? "" : " (" + c.witnesses.front() + ")"));
}

std::vector<std::string> finite_fixtures() {
  std::vector<std::string> paths;
  for (int n = 1; n <= 12; ++n) {
    paths.push_back("groups/z" + std::to_string(n) + ".json");
    paths.push_back("characters/rep_z" + std::to_string(n) + ".json");
  }
  for (const char* p : {"groups/s3.json", "groups/d4.json", "groups/q8.json", "groups/klein4.json", "characters/rep_s3.json",
                        "characters/rep_s4.json", "characters/rep_a4.json", "characters/rep_a5.json", "characters/rep_d4.json",
                        "characters/rep_q8.json", "tables/rep_s3_explicit.json", "tables/rep_s4_explicit.json"})
    paths.emplace_back(p);
  return paths;
}

void criterion1(Outcome& out) {
  std::vector<std::string> paths;
  for (int n = 1; n <= 12; ++n) paths.push_back("groups/z" + std::to_string(n) + ".json");
  for (const char* p : {"groups/s3.json", "characters/rep_s3.json", "characters/rep_s4.json", "characters/rep_a4.json",
                        "characters/rep_a5.json", "characters/rep_d4.json", "characters/rep_q8.json"})
    paths.emplace_back(p);
  for (const auto& p : paths) {
    auto alg = finite(p);
    const auto r = verify_axioms(*alg, 0);
    const std::size_t n = alg->size();
    out.require(r.check(check_names::kAssociativity).checked == n * n * n, p + ": associativity not exhaustive");
    require_report(out, r, p);
  }
}

void criterion2(Outcome& out) {
  for (const auto& [chars, table] : {std::pair{"characters/rep_s3.json", "tables/rep_s3_explicit.json"},
                                     std::pair{"characters/rep_s4.json", "tables/rep_s4_explicit.json"}}) {
    auto c = finite(chars);
    auto t = finite(table);
    out.require(c->size() == t->size(), std::string(table) + ": basis size differs");
    for (const auto& x : c->basis())
      for (const auto& y : c->basis())
        for (const auto& z : c->basis()) {
          const auto tx = label(*t, c->label_name(x)), ty = label(*t, c->label_name(y)), tz = label(*t, c->label_name(z));
          out.require(multiplicity(x, y, z, *c) == multiplicity(tx, ty, tz, *t),
                      std::string(chars) + ": m(" + c->label_name(x) + ", " + c->label_name(y) + "; " + c->label_name(z) + ")");
        }
  }
}

template <FusionAlgebra A>
void dimension_laws(Outcome& out, const A& alg, const std::vector<LabelOf<A>>& scope, const std::string& what) {
  for (const auto& x : scope) {
    const BigInt d = alg.dim(x);
    const Element<LabelOf<A>> xxbar = alg.fuse(x, alg.conj(x));
    const bool group_like = xxbar == Element<LabelOf<A>>(alg.unit());
    out.require(d >= 1, what + ": d(" + alg.label_name(x) + ") < 1");
    out.require((d == 1) == group_like, what + ": d = 1 disagrees with x xbar = e at " + alg.label_name(x));
    out.require(in_intrinsic_group(x, alg) == group_like, what + ": intrinsic group membership at " + alg.label_name(x));
    if (!group_like) out.require(d * d >= 2, what + ": d^2 < 2 at " + alg.label_name(x));
  }
}

void criterion3(Outcome& out) {
  for (const auto& p : finite_fixtures()) {
    auto alg = finite(p);
    dimension_laws(out, *alg, alg->basis(), p);
  }
  SU2Algebra su2;
  dimension_laws(out, su2, su2.basis(40), "su2");
  for (const char* p : {"free/z2_rep_s3.json", "free/s3_rep_d4.json", "free/z2_z3.json"}) {
    auto fp = std::get<std::shared_ptr<const FreeFF>>(load_algebra(data_path(p)));
    dimension_laws(out, *fp, fp->words(4, 0), p);
  }
  auto fs = std::get<std::shared_ptr<const FreeFS>>(load_algebra(data_path("free/z2_su2.json")));
  dimension_laws(out, *fs, fs->words(4, 4), "free/z2_su2.json");
}

void criterion4(Outcome& out) {
  for (const char* p : {"free/z2_rep_s3.json", "free/s3_rep_d4.json"}) {
    auto fp = std::get<std::shared_ptr<const FreeFF>>(load_algebra(data_path(p)));
    using W = FreeFF::Label;
    const auto words = fp->words(6, 0);
    for (const auto& w : words) {
      // Irreducible: the unit occurs exactly once in w wbar.
      out.require(fp->fuse(w, fp->conj(w)).coefficient(W{}) == 1, std::string(p) + ": " + fp->label_name(w) + " is not irreducible");
      BigInt d = 1;
      for (const auto& l : w.letters) d *= fp->dim(FreeFF::word_of(l));
      out.require(fp->dim(w) == d, std::string(p) + ": dim(" + fp->label_name(w) + ")");
      // Every cut of an alternating word is a product with distinct boundary factors.
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        const W left(std::vector(w.letters.begin(), w.letters.begin() + std::ptrdiff_t(cut)));
        const W right(std::vector(w.letters.begin() + std::ptrdiff_t(cut), w.letters.end()));
        out.require(fp->fuse(left, right) == Element<W>(w), std::string(p) + ": concatenation fails at " + fp->label_name(w));
      }
    }
    const auto r = verify_axioms(*fp, 3);
    const std::size_t n = fp->basis(3).size();
    out.require(r.check(check_names::kAssociativity).checked == n * n * n, std::string(p) + ": associativity not exhaustive");
    out.require(r.check(check_names::kFrobenius).checked == n * n * n, std::string(p) + ": Frobenius not exhaustive");
    require_report(out, r, p);
  }
}

void criterion5(Outcome& out) {
  for (const char* p : {"free/z2_rep_s3.json", "free/s3_rep_d4.json"}) {
    auto fp = std::get<std::shared_ptr<const FreeFF>>(load_algebra(data_path(p)));
    const auto [e0, e1] = canonical_embeddings(*fp, 0);
    const auto v = check_freeness(*fp, fp->factor0(), e0, fp->factor1(), e1, 6, 0);
    out.require(v.free, std::string(p) + ": canonical embeddings reported NOT-FREE");
  }
  auto z2 = finite("groups/z2.json");
  auto klein = finite("groups/klein4.json");
  Embedding<AtomId, AtomId> ea{{z2->unit(), klein->unit()}, {label(*z2, "g"), label(*klein, "a")}};
  Embedding<AtomId, AtomId> eb{{z2->unit(), klein->unit()}, {label(*z2, "g"), label(*klein, "b")}};
  const auto v = check_freeness(*klein, *z2, ea, *z2, eb, 6, 0);
  out.require(!v.free, "Klein overlap reported FREE");
  out.require(!v.witness.empty() && v.witness.size() <= 4, "Klein witness longer than 4");
}

void criterion6(Outcome& out) {
  constexpr int kPerPair = 100;
  std::mt19937_64 rng(20261015);
  for (const char* g : {"groups/z2.json", "groups/s3.json"})
    for (const char* a : {"characters/rep_s3.json", "characters/rep_d4.json", "characters/rep_s4.json"}) {
      auto fp = free_ff(g, a);
      const std::string pair = std::string(g) + " * " + a;
      const bool unique = uniqueness_check(fp, 4).unique();
      const AutomorphismSampler sampler(fp, 4);
      int succeeded = 0;
      for (int trial = 0; trial < kPerPair; ++trial) {
        const auto [t, alpha] = sampler.draw(rng);
        try {
          const auto f = kurosh_decompose(alpha);
          ++succeeded;
          out.require(equal_on_letters(recompose<FiniteAlgebra>(fp, f, 0), alpha), pair + ": recomposition differs");
          if (unique) out.require(f == t, pair + ": tuple differs for u = " + fp->label_name(t.u));
        } catch (const KuroshError& e) {
          out.require(false, pair + ": " + e.what());
        }
      }
      out.require(succeeded == kPerPair, pair + ": not every decomposition succeeded");
    }
}

void criterion7(Outcome& out) {
  auto gz = std::get<std::shared_ptr<const FreeFF>>(load_algebra(data_path("free/z2_z3.json")));
  try {
    kurosh_decompose(automorphism_from_json<FiniteAlgebra>(read_json_file(data_path("automorphisms/identity.json")), gz));
    out.require(false, "group case accepted");
  } catch (const KuroshError& e) {
    out.require(e.kind() == KuroshFailure::GroupCase, std::string("group case raised ") + e.what());
  }
  auto fp = std::get<std::shared_ptr<const FreeFF>>(load_algebra(data_path("free/z2_rep_s3.json")));
  try {
    kurosh_decompose(automorphism_from_json<FiniteAlgebra>(read_json_file(data_path("automorphisms/not_dimension_preserving.json")), fp));
    out.require(false, "non-dimension-preserving map accepted");
  } catch (const KuroshError& e) {
    out.require(e.kind() == KuroshFailure::NotDimensionPreserving && e.stage() == 0, std::string("raised ") + e.what());
  }
}

void criterion8(Outcome& out) {
  CocycleSampler sampler(SamplingOptions{20261015, 5, 6});
  std::vector<Gamma1Triple> triples;
  for (int i = 0; i < 1000; ++i) triples.push_back({sampler.element(), sampler.element(), sampler.element()});
  std::vector<InvarianceSample> inv;
  for (int i = 0; i < 20; ++i) {
    const IntSL3 a = sampler.matrix();
    for (int j = 0; j < 50; ++j) inv.push_back({a, sampler.pair(), sampler.pair()});
  }
  // The pair checks consume disjoint groups of 2 and 3 consecutive samples.
  std::vector<IntPair> pairs;
  for (int i = 0; i < 3000; ++i) pairs.push_back(sampler.pair());
  const std::vector<IntPair> antisymmetry(pairs.begin(), pairs.begin() + 2000);
  for (const auto& r :
       {verify_cocycle_identity(triples), verify_invariance(inv), verify_antisymmetry(antisymmetry), verify_biadditivity(pairs)}) {
    out.require(r.passed(), r.name + ": " + r.first_witness);
    out.require(r.checked >= 1000, r.name + ": only " + std::to_string(r.checked) + " samples");
  }
}

void criterion9(Outcome& out) {
  const std::vector<std::string> commands{
      "verify characters/rep_s4.json",
      "verify tables/rep_s3_corrupted.json",
      "verify free/s3_rep_d4.json --bound 2 --format json",
      "mult free/z2_rep_s3.json '0:g;1:std' '1:std;0:g'",
      "conj characters/rep_z3.json 'w + 2*w2'",
      "dim su2.json 'pi3 + pi1'",
      "basis free/z2_rep_s3.json --bound 0 --max-len 3",
      "freeness groups/klein4.json embeddings/klein_a.json embeddings/klein_b.json",
      "freeness free/z2_rep_s3.json embeddings/z2_in_z2_rep_s3.json embeddings/rep_s3_in_z2_rep_s3.json",
      "kurosh free/s3_rep_d4.json automorphisms/s3_rep_d4_roundtrip.json",
      "kurosh free/z2_z3.json automorphisms/identity.json --format json",
      "cocycle --seed 7 --samples 300",
  };
  for (const auto& c : commands) {
    const auto first = run_cli(c);
    const auto second = run_cli(c);
    out.require(first.exit_code == 0 || first.exit_code == 1, c + ": exit code " + std::to_string(first.exit_code));
    out.require(!first.out.empty(), c + ": empty report");
    out.require(first.out == second.out && first.exit_code == second.exit_code, c + ": reports differ");
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "axiom suite on the shipped finite algebras", 5, criterion1);
  all &= run(2, "character-table rings equal the hand-entered tables", 0, criterion2);
  all &= run(3, "dimension inequalities on all shipped algebras", 0, criterion3);
  all &= run(4, "free-product suite", 60, criterion4);
  all &= run(5, "freeness verdicts", 0, criterion5);
  all &= run(6, "Kurosh round trip", 120, criterion6);
  all &= run(7, "Kurosh negative cases", 0, criterion7);
  all &= run(8, "cocycle suite", 5, criterion8);
  all &= run(9, "CLI determinism", 0, criterion9);
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
