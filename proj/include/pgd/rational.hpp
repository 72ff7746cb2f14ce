#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pgd {

using Integer = mpz_class;
using Rational = mpq_class;

/// "a" or "a/b", canonical.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "a" or "a/b" with optional sign; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);
Integer factorial(long n);

} // namespace pgd
