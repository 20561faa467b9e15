#pragma once

#include <gmpxx.h>

#include <string>

#include "wallx/errors.hpp"

namespace wallx {

// Exact rational scalar. GMP's mpq_class already maintains the canonical
// form we need: gcd(|num|, den) = 1 and den > 0.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q". Throws parse_error on anything else or q = 0.
Rat rat_from_string(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& x);

bool rat_is_integer(const Rat& x);

// Requires an integer that fits in long.
long rat_to_long(const Rat& x);

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class factorial(unsigned long n);

} // namespace wallx
