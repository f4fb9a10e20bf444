// Command-line front end. Exit codes: 0 pass, 1 violation, 2 parse or
// validation error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fusion/cocycle.hpp"
#include "fusion/io.hpp"
#include "fusion/kurosh.hpp"
#include "fusion/verify.hpp"

namespace fs = std::filesystem;
using namespace fusion;

namespace {

enum ExitCode { kPass = 0, kViolation = 1, kInputError = 2 };

/// Ordered key/value results plus named checks. Rendering is a pure function
/// of the content, so equal inputs print equal bytes.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void set(const std::string& key, const std::string& value) { fields_.emplace_back(key, value); }
  void check(const std::string& name, std::size_t checked, std::size_t failures, std::vector<std::string> witnesses) {
    checks_.push_back({name, checked, failures, std::move(witnesses)});
  }
  void fail(const std::string& reason) {
    failed_ = true;
    set("error", reason);
  }
  bool passed() const {
    if (failed_) return false;
    for (const auto& c : checks_)
      if (c.failures) return false;
    return true;
  }

  void print(std::ostream& out, bool json) const {
    if (json) {
      nlohmann::ordered_json j;
      j["command"] = command_;
      for (const auto& [k, v] : fields_) j[k] = v;
      nlohmann::ordered_json checks = nlohmann::ordered_json::array();
      for (const auto& c : checks_)
        checks.push_back({{"name", c.name}, {"status", c.failures ? "FAIL" : "PASS"}, {"checked", c.checked},
                          {"failures", c.failures}, {"witnesses", c.witnesses}});
      if (!checks_.empty()) j["checks"] = checks;
      j["status"] = passed() ? "PASS" : "FAIL";
      out << j.dump(2) << "\n";
      return;
    }
    out << "command: " << command_ << "\n";
    for (const auto& [k, v] : fields_) out << k << ": " << v << "\n";
    for (const auto& c : checks_) {
      out << "check " << c.name << ": " << (c.failures ? "FAIL" : "PASS") << " (" << c.checked << " checked";
      if (c.failures) out << ", " << c.failures << " failed";
      out << ")\n";
      for (const auto& w : c.witnesses) out << "  witness: " << w << "\n";
    }
    out << "status: " << (passed() ? "PASS" : "FAIL") << "\n";
  }

 private:
  struct Check {
    std::string name;
    std::size_t checked;
    std::size_t failures;
    std::vector<std::string> witnesses;
  };
  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<Check> checks_;
  bool failed_ = false;
};

struct Options {
  std::size_t bound = 0;
  bool bound_given = false;
  std::size_t max_len = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t elem_word_len = 6;
  std::int64_t entry_bound = 5;
  std::string format = "text";
  bool timing = false;
};

std::string echo(const std::string& name, const std::vector<std::string>& args) {
  std::string out = name;
  for (const auto& a : args) out += " " + a;
  return out;
}

template <FusionAlgebra A>
std::string describe(const A& alg, std::size_t bound) {
  if constexpr (std::is_same_v<A, FiniteAlgebra>)
    return alg.name() + " (" + std::to_string(alg.size()) + " irreducibles)";
  else if constexpr (std::is_same_v<A, SU2Algebra>)
    return "Rep(SU(2)) truncated to pi0..pi" + std::to_string(bound);
  else
    return "free product (" + describe(alg.factor0(), bound) + ") * (" + describe(alg.factor1(), bound) + ")";
}

// --- commands --------------------------------------------------------------

/// Infinite bases are only ever truncated at an explicit bound.
template <FusionAlgebra A>
void require_bound(const A& alg, const Options& o) {
  if (!alg.is_finite() && !o.bound_given) throw ValidationError("the algebra has an infinite basis; pass --bound");
}

void cmd_verify(RunReport& r, const LoadedAlgebra& loaded, const Options& o) {
  std::visit(
      [&](const auto& alg) {
        require_bound(*alg, o);
        const AxiomReport report = verify_axioms(*alg, o.bound);
        r.set("algebra", describe(*alg, o.bound));
        r.set("scope", std::to_string(report.scope_size) + " irreducibles");
        for (const auto& c : report.checks) r.check(c.name, c.checked, c.failures, c.witnesses);
      },
      loaded);
}

void cmd_mult(RunReport& r, const LoadedAlgebra& loaded, const std::string& a, const std::string& b) {
  std::visit(
      [&](const auto& alg) {
        const auto x = parse_element(a, *alg);
        const auto y = parse_element(b, *alg);
        r.set("result", format(multiply(x, y, *alg), *alg));
      },
      loaded);
}

void cmd_conj(RunReport& r, const LoadedAlgebra& loaded, const std::string& a) {
  std::visit([&](const auto& alg) { r.set("result", format(conjugate(parse_element(a, *alg), *alg), *alg)); }, loaded);
}

void cmd_dim(RunReport& r, const LoadedAlgebra& loaded, const std::string& a) {
  std::visit([&](const auto& alg) { r.set("result", to_string(dim(parse_element(a, *alg), *alg))); }, loaded);
}

void cmd_basis(RunReport& r, const LoadedAlgebra& loaded, const Options& o) {
  std::visit(
      [&](const auto& alg) {
        using A = std::decay_t<decltype(*alg)>;
        require_bound(*alg, o);
        std::vector<LabelOf<A>> labels;
        if constexpr (requires { alg->words(o.max_len, o.bound); })
          labels = alg->words(o.max_len, o.bound);
        else
          labels = alg->basis(o.bound);
        r.set("count", std::to_string(labels.size()));
        std::string joined;
        for (std::size_t k = 0; k < labels.size(); ++k)
          joined += (k ? ", " : "") + alg->label_name(labels[k]) + " (d=" + to_string(BigInt(alg->dim(labels[k]))) + ")";
        r.set("basis", joined);
      },
      loaded);
}

/// {"kind": "embedding", "source": <algebra>, "images": {"x": "<ambient word>"}}
template <typename Ambient>
void run_freeness(RunReport& r, const Ambient& ambient, const fs::path& e0, const fs::path& e1, const Options& o) {
  auto load = [&](const fs::path& path) {
    const nlohmann::json j = read_json_file(path);
    if (!j.is_object() || j.value("kind", "") != "embedding" || !j.contains("source") || !j.contains("images") ||
        !j.at("images").is_object())
      throw ValidationError("'" + path.string() + "' is not an embedding description");
    return std::make_pair(j, factor_from_json(j.at("source"), path.parent_path()));
  };
  auto [j0, s0] = load(e0);
  auto [j1, s1] = load(e1);
  std::visit(
      [&](const auto& src0, const auto& src1) {
        auto read = [&](const nlohmann::json& j, const auto& src) {
          using SL = LabelOf<std::decay_t<decltype(*src)>>;
          Embedding<SL, LabelOf<Ambient>> m;
          m[src->unit()] = ambient.unit();
          for (const auto& [k, v] : j.at("images").items()) {
            if (!v.is_string()) throw ValidationError("embedding image of '" + k + "' must be a literal");
            m[src->parse_label(k)] = ambient.parse_label(v.template get<std::string>());
          }
          return m;
        };
        require_bound(*src0, o);
        require_bound(*src1, o);
        const auto verdict = check_freeness(ambient, *src0, read(j0, src0), *src1, read(j1, src1), o.max_len, o.bound);
        r.set("max_len", std::to_string(o.max_len));
        r.set("factor_bound", std::to_string(o.bound));
        r.set("verdict", verdict.free ? "FREE" : "NOT-FREE");
        r.set("products_checked", std::to_string(verdict.products_checked));
        if (!verdict.free) {
          r.set("witness", verdict.witness_literal());
          r.set("witness_length", std::to_string(verdict.witness.size()));
          r.set("witness_product", verdict.witness_product);
          r.fail("subalgebras are not free");
        }
      },
      s0, s1);
}

template <FusionAlgebra A>
void run_kurosh(RunReport& r, const std::shared_ptr<const GroupFreeProduct<A>>& alg, const nlohmann::json& description) {
  const Automorphism<A> alpha = automorphism_from_json<A>(description, alg);
  try {
    const KuroshFactorization<A> f = kurosh_decompose(alpha);
    r.set("u", f.u.empty() ? "e" : alg->label_name(f.u));
    std::string a0, a1;
    for (const auto& [x, y] : f.alpha0) a0 += (a0.empty() ? "" : ", ") + alg->factor0().label_name(x) + " -> " + alg->factor0().label_name(y);
    for (const auto& [x, y] : f.alpha1) a1 += (a1.empty() ? "" : ", ") + alg->factor1().label_name(x) + " -> " + alg->factor1().label_name(y);
    r.set("alpha0", a0);
    r.set("alpha1", a1);
    r.set("recomposition", "equal on all " + std::to_string(alpha.letters().size()) + " in-scope letters");
  } catch (const KuroshError& e) {
    r.set("failure", to_string(e.kind()));
    if (e.stage() > 0) r.set("stage", std::to_string(e.stage()));
    r.fail(e.witness());
  }
}

void cmd_kurosh(RunReport& r, const LoadedAlgebra& loaded, const fs::path& automorphism_file) {
  const nlohmann::json description = read_json_file(automorphism_file);
  if (const auto* ff = std::get_if<std::shared_ptr<const FreeFF>>(&loaded))
    run_kurosh<FiniteAlgebra>(r, *ff, description);
  else if (const auto* fs_ = std::get_if<std::shared_ptr<const FreeFS>>(&loaded))
    run_kurosh<SU2Algebra>(r, *fs_, description);
  else
    throw ValidationError("kurosh needs a free product whose first factor is a finite group algebra");
}

void cmd_cocycle(RunReport& r, const Options& o) {
  SamplingOptions so{o.seed, o.entry_bound, o.elem_word_len};
  CocycleSampler sampler(so);
  r.set("seed", std::to_string(o.seed));
  r.set("samples", std::to_string(o.samples));
  r.set("entry_bound", std::to_string(o.entry_bound));
  r.set("elem_word_len", std::to_string(o.elem_word_len));

  std::vector<Gamma1Triple> triples;
  for (std::size_t k = 0; k < o.samples; ++k) {
    IntGamma1 g = sampler.element();
    IntGamma1 h = sampler.element();
    IntGamma1 kk = sampler.element();
    triples.push_back({std::move(g), std::move(h), std::move(kk)});
  }
  std::vector<InvarianceSample> invariance;
  for (std::size_t k = 0; k < o.samples; ++k) {
    IntSL3 a = sampler.matrix();
    IntPair v = sampler.pair();
    IntPair w = sampler.pair();
    invariance.push_back({std::move(a), std::move(v), std::move(w)});
  }
  std::vector<IntPair> pairs;
  for (std::size_t k = 0; k < 3 * o.samples; ++k) pairs.push_back(sampler.pair());
  std::vector<IntPair> antisymmetry(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(2 * o.samples));

  for (const IdentityReport& rep :
       {verify_cocycle_identity(triples), verify_invariance(invariance), verify_antisymmetry(antisymmetry), verify_biadditivity(pairs)})
    r.check(rep.name, rep.checked, rep.failures, rep.first_witness.empty() ? std::vector<std::string>{} : std::vector<std::string>{rep.first_witness});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion algebra calculator and verifier"};
  app.require_subcommand(1);
  Options o;
  std::string algebra_file, a, b, ambient_file, emb0, emb1, automorphism_file;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--timing", o.timing, "Print elapsed time (makes output nondeterministic)");
  };
  auto bound_opt = [&](CLI::App* cmd) {
    cmd->add_option("--bound", o.bound, "Truncation bound for infinite bases and free-product factors");
  };

  auto* verify = app.add_subcommand("verify", "Check the fusion axioms on the basis up to --bound");
  verify->add_option("algebra", algebra_file)->required();
  bound_opt(verify);
  common(verify);

  auto* mult = app.add_subcommand("mult", "Multiply two element literals");
  mult->add_option("algebra", algebra_file)->required();
  mult->add_option("a", a)->required();
  mult->add_option("b", b)->required();
  common(mult);

  auto* conj = app.add_subcommand("conj", "Conjugate an element literal");
  conj->add_option("algebra", algebra_file)->required();
  conj->add_option("a", a)->required();
  common(conj);

  auto* dimc = app.add_subcommand("dim", "Dimension of an element literal");
  dimc->add_option("algebra", algebra_file)->required();
  dimc->add_option("a", a)->required();
  common(dimc);

  auto* basis = app.add_subcommand("basis", "Enumerate irreducibles (words up to --max-len for free products)");
  basis->add_option("algebra", algebra_file)->required();
  bound_opt(basis);
  basis->add_option("--max-len", o.max_len, "Maximum word length");
  common(basis);

  auto* freeness = app.add_subcommand("freeness", "Check freeness of two embedded subalgebras");
  freeness->add_option("ambient", ambient_file)->required();
  freeness->add_option("embedding0", emb0)->required();
  freeness->add_option("embedding1", emb1)->required();
  freeness->add_option("--max-len", o.max_len, "Maximum alternating length");
  bound_opt(freeness);
  common(freeness);

  auto* kurosh = app.add_subcommand("kurosh", "Decompose an automorphism as (Ad u) o (alpha0 * alpha1)");
  kurosh->add_option("algebra", algebra_file)->required();
  kurosh->add_option("automorphism", automorphism_file)->required();
  common(kurosh);

  auto* cocycle = app.add_subcommand("cocycle", "Verify the cocycle identities on seeded samples");
  cocycle->add_option("--samples", o.samples, "Samples per identity");
  cocycle->add_option("--bound", o.entry_bound, "Vector entries lie in [-bound, bound]")->check(CLI::NonNegativeNumber);
  cocycle->add_option("--elem-word-len", o.elem_word_len, "Maximum number of elementary factors per matrix");
  cocycle->add_option("--seed", o.seed, "Random seed");
  common(cocycle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (const CLI::Option* opt = chosen->get_option_no_throw("--bound"); opt && chosen->get_name() != "cocycle")
    o.bound_given = opt->count() > 0;
  std::vector<std::string> args;
  for (const auto* opt : chosen->get_options())
    if (opt->get_positional() && opt->count() > 0)
      for (const auto& v : opt->results()) args.push_back(v);
  RunReport report(echo(chosen->get_name(), args));
  const auto start = std::chrono::steady_clock::now();

  try {
    const std::string name = chosen->get_name();
    if (name == "verify") cmd_verify(report, load_algebra(algebra_file, false), o);
    if (name == "mult") cmd_mult(report, load_algebra(algebra_file), a, b);
    if (name == "conj") cmd_conj(report, load_algebra(algebra_file), a);
    if (name == "dim") cmd_dim(report, load_algebra(algebra_file), a);
    if (name == "basis") cmd_basis(report, load_algebra(algebra_file), o);
    if (name == "freeness")
      std::visit([&](const auto& amb) { run_freeness(report, *amb, emb0, emb1, o); }, load_algebra(ambient_file));
    if (name == "kurosh") cmd_kurosh(report, load_algebra(algebra_file), automorphism_file);
    if (name == "cocycle") cmd_cocycle(report, o);
  } catch (const FusionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (o.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.set("elapsed_seconds", std::to_string(elapsed.count()));
  }
  report.print(std::cout, o.format == "json");
  return report.passed() ? kPass : kViolation;
}
