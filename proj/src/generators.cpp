#include "fusion/generators.hpp"

#include <cmath>
#include <map>
#include <set>

#include <Eigen/Dense>

namespace fusion {

namespace {

std::string triple(const GroupTable& g, std::size_t a, std::size_t b, std::size_t c) {
  return "(" + g.elements[a] + ", " + g.elements[b] + ", " + g.elements[c] + ")";
}

}  // namespace

std::size_t GroupTable::inverse(std::size_t s) const {
  for (std::size_t t = 0; t < order(); ++t)
    if (table[s][t] == identity) return t;
  throw ValidationError("element '" + elements[s] + "' has no inverse");
}

void GroupTable::validate() const {
  const std::size_t n = order();
  if (n == 0) throw ValidationError("group '" + name + "' is empty");
  if (identity >= n) throw ValidationError("identity index out of range");
  if (table.size() != n) throw ValidationError("group table must have " + std::to_string(n) + " rows");
  for (std::size_t s = 0; s < n; ++s) {
    if (table[s].size() != n) throw ValidationError("row '" + elements[s] + "' has wrong length");
    std::vector<bool> seen_row(n), seen_col(n);
    for (std::size_t t = 0; t < n; ++t) {
      if (table[s][t] >= n) throw ValidationError("entry out of range in row '" + elements[s] + "'");
      if (seen_row[table[s][t]]) throw ValidationError("row '" + elements[s] + "' is not a permutation");
      seen_row[table[s][t]] = true;
      if (table[t][s] >= n || seen_col[table[t][s]])
        throw ValidationError("column '" + elements[s] + "' is not a permutation");
      seen_col[table[t][s]] = true;
    }
    if (table[identity][s] != s || table[s][identity] != s)
      throw ValidationError("identity does not act trivially on '" + elements[s] + "'");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("associativity fails at " + triple(*this, a, b, c));
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable g;
  g.name = "Z/" + std::to_string(n);
  for (std::size_t k = 0; k < n; ++k) g.elements.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

FiniteAlgebra group_algebra(const GroupTable& g) {
  g.validate();
  FiniteTableData data;
  data.name = g.name;
  data.labels = g.elements;
  data.unit = g.identity;
  const std::size_t n = g.order();
  data.dims.assign(n, BigInt(1));
  for (std::size_t s = 0; s < n; ++s) {
    data.conj.push_back(g.inverse(s));
    for (std::size_t t = 0; t < n; ++t) data.constants.push_back({s, t, g.multiply(s, t), BigInt(1)});
  }
  return FiniteAlgebra(std::move(data));
}

void CharacterTable::validate() const {
  const std::size_t c = classes.size();
  if (c == 0 || irreducibles.empty()) throw ValidationError("character table '" + name + "' is empty");
  if (classes.front().size != 1) throw ValidationError("the first class must be the identity class (size 1)");
  std::uint64_t class_total = 0;
  for (const auto& cl : classes) class_total += cl.size;
  if (class_total != group_order)
    throw ValidationError("class sizes sum to " + std::to_string(class_total) + ", expected " + std::to_string(group_order));
  if (irreducibles.size() != c) throw ValidationError("number of irreducibles must equal number of classes");

  std::uint64_t dim_squares = 0;
  for (const auto& irr : irreducibles) {
    if (irr.values.size() != c) throw ValidationError("character '" + irr.name + "' has wrong number of values");
    if (std::abs(irr.values.front() - std::complex<double>(double(irr.dim), 0.0)) > kCharacterTolerance)
      throw ValidationError("character '" + irr.name + "' does not take its dimension on the identity class");
    dim_squares += irr.dim * irr.dim;
  }
  if (dim_squares != group_order)
    throw ValidationError("squared dimensions sum to " + std::to_string(dim_squares) + ", expected " + std::to_string(group_order));

  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < c; ++k)
        s += double(classes[k].size) * irreducibles[i].values[k] * std::conj(irreducibles[j].values[k]);
      s /= double(group_order);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(s - expected) > kCharacterTolerance)
        throw ValidationError("characters '" + irreducibles[i].name + "' and '" + irreducibles[j].name +
                              "' violate row orthogonality");
    }
}

FiniteAlgebra rep_ring_from_characters(const CharacterTable& t) {
  t.validate();
  const Eigen::Index r = Eigen::Index(t.irreducibles.size());
  const Eigen::Index c = Eigen::Index(t.classes.size());

  Eigen::MatrixXcd chi(r, c);
  Eigen::VectorXd weights(c);
  for (Eigen::Index k = 0; k < c; ++k) weights(k) = double(t.classes[k].size) / double(t.group_order);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < c; ++k) chi(i, k) = t.irreducibles[i].values[k];

  auto round_checked = [](std::complex<double> v, const std::string& what) {
    const double nearest = std::round(v.real());
    if (std::abs(v - std::complex<double>(nearest, 0.0)) > kCharacterTolerance || nearest < 0)
      throw ValidationError(what + " = " + std::to_string(v.real()) + (v.imag() != 0 ? "+" + std::to_string(v.imag()) + "i" : "") +
                            " is not a nonnegative integer");
    return BigInt(static_cast<long long>(nearest));
  };

  FiniteTableData data;
  data.name = "Rep(" + t.name + ")";
  data.unit = std::size_t(r);
  const Eigen::RowVectorXcd trivial = Eigen::RowVectorXcd::Ones(c);
  for (Eigen::Index i = 0; i < r; ++i) {
    data.labels.push_back(t.irreducibles[i].name);
    data.dims.push_back(round_checked(chi(i, 0), "dimension of '" + t.irreducibles[i].name + "'"));
    if ((chi.row(i) - trivial).cwiseAbs().maxCoeff() <= kCharacterTolerance) data.unit = std::size_t(i);

    const Eigen::RowVectorXcd conj_row = chi.row(i).conjugate();
    std::size_t conj_index = std::size_t(r);
    for (Eigen::Index j = 0; j < r; ++j)
      if ((chi.row(j) - conj_row).cwiseAbs().maxCoeff() <= kCharacterTolerance) conj_index = std::size_t(j);
    if (conj_index == std::size_t(r))
      throw ValidationError("no irreducible has the conjugate character of '" + t.irreducibles[i].name + "'");
    data.conj.push_back(conj_index);
  }
  if (data.unit == std::size_t(r)) throw ValidationError("character table has no trivial character");

  // m(p,q;s) = sum_c |c|/|G| chi_p(c) chi_q(c) conj(chi_s(c))
  const Eigen::MatrixXcd chi_conj_t = chi.adjoint();
  for (Eigen::Index p = 0; p < r; ++p)
    for (Eigen::Index q = 0; q < r; ++q) {
      const Eigen::RowVectorXcd weighted =
          chi.row(p).cwiseProduct(chi.row(q)).cwiseProduct(weights.transpose().cast<std::complex<double>>());
      const Eigen::RowVectorXcd m = weighted * chi_conj_t;
      for (Eigen::Index s = 0; s < r; ++s) {
        const BigInt mult = round_checked(m(s), "m(" + t.irreducibles[p].name + ", " + t.irreducibles[q].name + "; " +
                                                    t.irreducibles[s].name + ")");
        if (!mult.is_zero()) data.constants.push_back({std::size_t(p), std::size_t(q), std::size_t(s), mult});
      }
    }
  return FiniteAlgebra(std::move(data));
}

FiniteAlgebra table_algebra(const ExplicitTable& t) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    if (!index.emplace(t.labels[i], i).second) throw ValidationError("duplicate label '" + t.labels[i] + "'");
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ValidationError("unknown label '" + name + "' in table '" + t.name + "'");
    return it->second;
  };

  FiniteTableData data;
  data.name = t.name;
  data.labels = t.labels;
  data.unit = lookup(t.unit);
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    auto c = t.conj.find(t.labels[i]);
    data.conj.push_back(c == t.conj.end() ? i : lookup(c->second));
    auto d = t.dims.find(t.labels[i]);
    if (d == t.dims.end()) throw ValidationError("missing dimension for '" + t.labels[i] + "'");
    data.dims.push_back(d->second);
  }
  for (const auto& [name, _] : t.conj) lookup(name);
  for (const auto& [name, _] : t.dims) lookup(name);
  for (const auto& c : t.constants) data.constants.push_back({lookup(c.x), lookup(c.y), lookup(c.z), c.multiplicity});
  return FiniteAlgebra(std::move(data));
}

FiniteAlgebra fusion_from_table(const ExplicitTable& t) {
  FiniteAlgebra alg = table_algebra(t);
  AxiomReport report = verify_axioms(alg, 0);
  if (!report.passed()) {
    std::string first;
    for (const auto& c : report.checks)
      if (!c.passed()) {
        first = c.name + ": " + (c.witnesses.empty() ? std::string("failed") : c.witnesses.front());
        break;
      }
    throw AxiomViolation("table '" + t.name + "' violates the fusion axioms (" + first + ")", std::move(report));
  }
  return alg;
}

// ---------------------------------------------------------------------------
// JSON ingestion

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const nlohmann::json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t unsigned_value(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ValidationError(what + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::complex<double> complex_value(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) return {v[0].get<double>(), v[1].get<double>()};
  throw ValidationError("character value must be a number or a [re, im] pair");
}

BigInt integer_value(const nlohmann::json& v, const std::string& what) {
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ValidationError(what + " must be an integer");
}

}  // namespace

GroupTable parse_group_table(const nlohmann::json& j) {
  GroupTable g;
  g.name = j.value("name", std::string("group"));
  const auto& elements = field(j, "elements");
  if (!elements.is_array()) throw ValidationError("'elements' must be an array of names");
  std::map<std::string, std::size_t> index;
  for (const auto& e : elements) {
    if (!e.is_string()) throw ValidationError("group element names must be strings");
    if (!index.emplace(e.get<std::string>(), g.elements.size()).second)
      throw ValidationError("duplicate group element '" + e.get<std::string>() + "'");
    g.elements.push_back(e.get<std::string>());
  }
  auto lookup = [&](const nlohmann::json& v) {
    if (!v.is_string() || !index.count(v.get<std::string>())) throw ValidationError("unknown group element " + v.dump());
    return index.at(v.get<std::string>());
  };
  g.identity = lookup(field(j, "identity"));
  const auto& table = field(j, "table");
  if (!table.is_array()) throw ValidationError("'table' must be an array of rows");
  for (const auto& row : table) {
    if (!row.is_array()) throw ValidationError("group table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& v : row) r.push_back(lookup(v));
    g.table.push_back(std::move(r));
  }
  g.validate();
  return g;
}

CharacterTable parse_character_table(const nlohmann::json& j) {
  CharacterTable t;
  t.name = j.value("name", std::string("G"));
  t.group_order = unsigned_value(field(j, "order"), "'order'");
  for (const auto& c : field(j, "classes")) t.classes.push_back({string_field(c, "name"), unsigned_value(field(c, "size"), "class size")});
  for (const auto& irr : field(j, "irreducibles")) {
    CharacterTable::Irreducible x;
    x.name = string_field(irr, "name");
    const auto& values = field(irr, "values");
    if (!values.is_array()) throw ValidationError("character values must be an array");
    for (const auto& v : values) x.values.push_back(complex_value(v));
    if (irr.contains("dim"))
      x.dim = unsigned_value(irr.at("dim"), "dimension of '" + x.name + "'");
    else if (!x.values.empty())
      x.dim = static_cast<std::uint64_t>(std::llround(x.values.front().real()));
    t.irreducibles.push_back(std::move(x));
  }
  t.validate();
  return t;
}

ExplicitTable parse_explicit_table(const nlohmann::json& j) {
  ExplicitTable t;
  t.name = j.value("name", std::string("table"));
  for (const auto& l : field(j, "labels")) {
    if (!l.is_string()) throw ValidationError("labels must be strings");
    t.labels.push_back(l.get<std::string>());
  }
  t.unit = string_field(j, "unit");
  if (j.contains("conj"))
    for (const auto& [k, v] : j.at("conj").items()) {
      if (!v.is_string()) throw ValidationError("conjugates must be label names");
      t.conj[k] = v.get<std::string>();
    }
  for (const auto& [k, v] : field(j, "dims").items()) {
    if (!v.is_number_integer()) throw ValidationError("dimension of '" + k + "' is not an integer (" + v.dump() + ")");
    t.dims[k] = integer_value(v, "dimension of '" + k + "'");
  }
  for (const auto& c : field(j, "constants")) {
    if (!c.is_array() || c.size() != 4 || !c[0].is_string() || !c[1].is_string() || !c[2].is_string())
      throw ValidationError("constants must be [x, y, z, multiplicity] entries");
    t.constants.push_back({c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>(),
                           integer_value(c[3], "structure constant")});
  }
  return t;
}

}  // namespace fusion
