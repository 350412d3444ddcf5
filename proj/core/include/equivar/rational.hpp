#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace equivar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/4", "+2". Throws EngineError(parse_error) on junk.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

Integer factorial(unsigned n);

/// n! / (n - k)!
Integer falling_factorial(unsigned n, unsigned k);

Rational pow(const Rational &base, int exponent);

} // namespace equivar
