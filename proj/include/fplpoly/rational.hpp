#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fplpoly {

using BigInt = mpz_class;
using BigRational = mpq_class;

// "a/b", or "a" when the denominator is 1.
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

// Accepts "a", "-a" and "a/b"; throws std::invalid_argument otherwise.
BigRational parse_rational(std::string_view s);

inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

BigInt factorial(unsigned k);
BigInt binomial(long n, long k);

}  // namespace fplpoly
