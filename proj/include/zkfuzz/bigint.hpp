#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zkfuzz {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &v) { return v.str(); }

} // namespace zkfuzz
