#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sevac {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace sevac
