#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "fusion/finite_algebra.hpp"
#include "fusion/verify.hpp"

namespace fusion {

/// Multiplication table of a finite group, elements referenced by index.
struct GroupTable {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[s][t] = index of s*t
  std::size_t identity = 0;

  std::size_t order() const { return elements.size(); }
  std::size_t multiply(std::size_t s, std::size_t t) const { return table[s][t]; }
  std::size_t inverse(std::size_t s) const;

  /// Throws ValidationError naming the failing row or triple.
  void validate() const;
};

/// Cyclic group Z/n with elements e, g, g2, ..., g{n-1}.
GroupTable cyclic_group(std::size_t n);

/// Character table of a finite group. The first class must be the identity
/// class; values are complex with real-valued tolerance checks.
struct CharacterTable {
  struct ConjugacyClass {
    std::string name;
    std::uint64_t size = 0;
  };
  struct Irreducible {
    std::string name;
    std::uint64_t dim = 0;
    std::vector<std::complex<double>> values;
  };

  std::string name;
  std::uint64_t group_order = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<Irreducible> irreducibles;

  /// Class sums, sum of squared dimensions, and row orthogonality.
  void validate() const;
};

/// Directly supplied fusion rules.
struct ExplicitTable {
  struct Constant {
    std::string x, y, z;
    BigInt multiplicity;
  };

  std::string name;
  std::vector<std::string> labels;
  std::string unit;
  std::map<std::string, std::string> conj;  // missing entries are self-conjugate
  std::map<std::string, BigInt> dims;
  std::vector<Constant> constants;
};

/// Rounding tolerance for multiplicities and dimensions computed from characters.
inline constexpr double kCharacterTolerance = 1e-6;

/// Raised when an explicit table fails the fusion axioms; carries the report.
class AxiomViolation : public ValidationError {
 public:
  AxiomViolation(const std::string& what, AxiomReport report)
      : ValidationError(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// N[G]: fuse(s,t) = st, conj(s) = s^-1, d = 1.
FiniteAlgebra group_algebra(const GroupTable& g);

/// Rep(G) from its character table via the character inner product.
FiniteAlgebra rep_ring_from_characters(const CharacterTable& t);

/// Builds the algebra without checking the axioms (used by the verifier).
FiniteAlgebra table_algebra(const ExplicitTable& t);

/// Builds the algebra and rejects it unless verify_axioms passes in full.
FiniteAlgebra fusion_from_table(const ExplicitTable& t);

// Structured-value entry points; formats are documented in data/README.md.
GroupTable parse_group_table(const nlohmann::json& j);
CharacterTable parse_character_table(const nlohmann::json& j);
ExplicitTable parse_explicit_table(const nlohmann::json& j);

}  // namespace fusion
