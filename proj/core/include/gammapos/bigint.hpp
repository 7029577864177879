#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gammapos {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const BigInt& x) { return x.is_zero(); }

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt parse_decimal(const std::string& s) { return BigInt(s); }

}  // namespace gammapos
