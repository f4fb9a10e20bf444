#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fusion {

/// Exact integer used for multiplicities, dimensions and phase exponents.
/// Expression templates are off so `auto` and Eigen interop behave.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace fusion
