#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusion/bigint.hpp"
#include "fusion/element.hpp"

namespace fusion {

class FusionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A label that does not belong to the algebra it was used with.
class ForeignLabel : public FusionError {
 public:
  using FusionError::FusionError;
};

/// Input data (tables, maps, literals) that fails validation.
class ValidationError : public FusionError {
 public:
  using FusionError::FusionError;
};

/// A fusion algebra over a totally ordered label type.
///
/// `basis(bound)` enumerates irreducibles in canonical order. For finite
/// algebras the bound is ignored and the whole basis is returned; for
/// infinite ones it selects a finite, algebra-specific truncation.
template <typename A>
concept FusionAlgebra =
    std::totally_ordered<typename A::Label> &&
    requires(const A& alg, const typename A::Label& x, std::size_t bound, const std::string& text) {
      { alg.unit() } -> std::convertible_to<typename A::Label>;
      { alg.contains(x) } -> std::same_as<bool>;
      { alg.conj(x) } -> std::convertible_to<typename A::Label>;
      { alg.fuse(x, x) } -> std::convertible_to<Element<typename A::Label>>;
      { alg.dim(x) } -> std::convertible_to<BigInt>;
      { alg.basis(bound) } -> std::same_as<std::vector<typename A::Label>>;
      { alg.is_finite() } -> std::same_as<bool>;
      { alg.label_name(x) } -> std::same_as<std::string>;
      { alg.parse_label(text) } -> std::convertible_to<typename A::Label>;
    };

template <FusionAlgebra A>
using LabelOf = typename A::Label;

template <FusionAlgebra A>
using ElementOf = Element<typename A::Label>;

}  // namespace fusion
