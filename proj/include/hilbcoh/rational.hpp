#pragma once

#include <gmpxx.h>

#include <string>

#include "hilbcoh/errors.hpp"

namespace hilbcoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form. mpq_class does not canonicalize on
/// construction, so all two-argument construction goes through here.
Rational make_rational(Integer num, Integer den);

Integer factorial(unsigned n);
Integer binomial(unsigned long n, unsigned long k);

/// The integer value of q; throws InvariantError if q has a denominator.
Integer require_integer(const Rational& q, const std::string& context);

/// "p" or "p/q", canonical.
std::string rational_to_string(const Rational& q);

/// Parses "p" or "p/q" (optional sign). Throws DomainError on malformed
/// input or zero denominator.
Rational rational_from_string(const std::string& s);

} // namespace hilbcoh
