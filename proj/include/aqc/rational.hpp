#pragma once

#include <gmpxx.h>

#include <string>

namespace aqc {

using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& x) {
    return x.get_str();
}

inline std::string to_string(const BigInt& x) {
    return x.get_str();
}

// Accepts "p", "p/q" and decimals such as "3.5".
Rational parse_rational(const std::string& s);

BigInt ipow(const BigInt& base, unsigned long e);

// Largest e with r^e <= x, for x >= 1.
long floor_log(const Rational& x, unsigned long r);

}  // namespace aqc
