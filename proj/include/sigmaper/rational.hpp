#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sigma {

using Q = mpq_class;
using Z = mpz_class;

Q make_q(long num, long den = 1);

// "p/q" with positive denominator, or "p" for integers.
std::string to_string(const Q& q);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Q parse_q(std::string_view text);

bool is_integer(const Q& q);
long floor_long(const Q& q);
long ceil_long(const Q& q);
long to_long(const Z& z);

}  // namespace sigma
