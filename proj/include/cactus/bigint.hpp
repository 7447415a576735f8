#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cactus {

/// Arbitrary-precision signed integer used for every exact count and coefficient.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace cactus
