#pragma once

#include <gmpxx.h>

#include <string>

namespace shamrock {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }
inline std::string to_decimal(const BigRational& v) { return v.get_str(10); }

}  // namespace shamrock
