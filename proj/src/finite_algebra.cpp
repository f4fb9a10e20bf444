#include "fusion/finite_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace fusion {

bool is_valid_label_name(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return c == ';' || c == ':' || c == '+' || c == '*' || c == '|' || std::isspace(c) || c < 0x20;
  });
}

FiniteAlgebra::FiniteAlgebra(FiniteTableData data) : name_(std::move(data.name)) {
  const std::size_t n = data.labels.size();
  if (n == 0) throw ValidationError("algebra '" + name_ + "' has no labels");
  if (data.unit >= n) throw ValidationError("unit index out of range");
  if (data.conj.size() != n || data.dims.size() != n)
    throw ValidationError("conjugation and dimension tables must have one entry per label");
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_valid_label_name(data.labels[i]))
      throw ValidationError("invalid label name '" + data.labels[i] + "'");
    if (data.conj[i] >= n) throw ValidationError("conjugate of '" + data.labels[i] + "' out of range");
    if (data.dims[i] <= 0) throw ValidationError("dimension of '" + data.labels[i] + "' must be positive");
  }

  // Canonical order: unit first, then nondecreasing dimension, ties by source order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ua = a == data.unit, ub = b == data.unit;
    if (ua != ub) return ua;
    return data.dims[a] < data.dims[b];
  });
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::uint32_t>(i);

  names_.resize(n);
  conj_.resize(n);
  dims_.resize(n);
  source_index_ = order;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = order[i];
    names_[i] = data.labels[src];
    conj_[i] = AtomId{rank[data.conj[src]]};
    dims_[i] = data.dims[src];
    if (!by_name_.emplace(names_[i], AtomId{static_cast<std::uint32_t>(i)}).second)
      throw ValidationError("duplicate label '" + names_[i] + "'");
  }
  unit_ = AtomId{rank[data.unit]};

  products_.resize(n * n);
  for (const auto& c : data.constants) {
    if (c.x >= n || c.y >= n || c.z >= n) throw ValidationError("structure constant index out of range");
    if (c.multiplicity < 0) throw ValidationError("negative structure constant");
    products_[rank[c.x] * n + rank[c.y]].add(AtomId{rank[c.z]}, c.multiplicity);
  }
}

std::vector<AtomId> FiniteAlgebra::basis(std::size_t) const {
  std::vector<AtomId> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = AtomId{static_cast<std::uint32_t>(i)};
  return out;
}

std::string FiniteAlgebra::label_name(AtomId x) const {
  if (!contains(x)) return "#" + std::to_string(x.index);
  return names_[x.index];
}

std::optional<AtomId> FiniteAlgebra::find(const std::string& text) const {
  auto it = by_name_.find(text);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

AtomId FiniteAlgebra::parse_label(const std::string& text) const {
  if (auto x = find(text)) return *x;
  throw ValidationError("unknown label '" + text + "' in algebra '" + name_ + "'");
}

}  // namespace fusion
