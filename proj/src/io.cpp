#include "fusion/io.hpp"

#include <fstream>
#include <sstream>

namespace fusion {

namespace fs = std::filesystem;

nlohmann::json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

namespace {

std::string kind_of(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ValidationError("algebra description must be an object with a string \"kind\"");
  return j.at("kind").get<std::string>();
}

struct Resolved {
  nlohmann::json doc;
  fs::path base_dir;
};

Resolved resolve(const nlohmann::json& j, const fs::path& base_dir) {
  if (j.is_string()) {
    const fs::path p = base_dir / j.get<std::string>();
    return {read_json_file(p), p.parent_path()};
  }
  return {j, base_dir};
}

std::shared_ptr<const FiniteAlgebra> finite_from_json(const nlohmann::json& j, const std::string& kind, bool checked) {
  try {
    if (kind == "group") return std::make_shared<const FiniteAlgebra>(group_algebra(parse_group_table(j)));
    if (kind == "characters") return std::make_shared<const FiniteAlgebra>(rep_ring_from_characters(parse_character_table(j)));
    if (kind == "table") {
      const ExplicitTable t = parse_explicit_table(j);
      return std::make_shared<const FiniteAlgebra>(checked ? fusion_from_table(t) : table_algebra(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed " + kind + " description: " + e.what());
  }
  return nullptr;
}

}  // namespace

LoadedFactor factor_from_json(const nlohmann::json& raw, const fs::path& base_dir) {
  const Resolved r = resolve(raw, base_dir);
  const std::string kind = kind_of(r.doc);
  if (kind == "su2") return std::make_shared<const SU2Algebra>();
  if (auto f = finite_from_json(r.doc, kind, true)) return f;
  throw ValidationError("unsupported free-product factor kind '" + kind + "'");
}

LoadedAlgebra algebra_from_json(const nlohmann::json& raw, const fs::path& base_dir, bool checked) {
  const Resolved r = resolve(raw, base_dir);
  const std::string kind = kind_of(r.doc);
  if (kind == "su2") return std::make_shared<const SU2Algebra>();
  if (kind == "free-product") {
    const auto& factors = r.doc.contains("factors") ? r.doc.at("factors") : nlohmann::json();
    if (!factors.is_array() || factors.size() != 2) throw ValidationError("free-product needs exactly two \"factors\"");
    const LoadedFactor f0 = factor_from_json(factors[0], r.base_dir);
    const LoadedFactor f1 = factor_from_json(factors[1], r.base_dir);
    return std::visit([](const auto& a, const auto& b) -> LoadedAlgebra {
      using FP = FreeProduct<std::remove_const_t<typename std::decay_t<decltype(a)>::element_type>, std::remove_const_t<typename std::decay_t<decltype(b)>::element_type>>;
      return std::make_shared<const FP>(a, b);
    }, f0, f1);
  }
  if (auto f = finite_from_json(r.doc, kind, checked)) return f;
  throw ValidationError("unknown algebra kind '" + kind + "'");
}

LoadedAlgebra load_algebra(const fs::path& path, bool checked) {
  return algebra_from_json(read_json_file(path), path.parent_path(), checked);
}

std::string kind_name(const LoadedAlgebra& a) {
  static const char* names[] = {"finite", "su2", "free-product", "free-product", "free-product", "free-product"};
  return names[a.index()];
}

}  // namespace fusion
