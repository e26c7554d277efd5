#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace severi {

using BigInt = mpz_class;

// mpq_class keeps results of arithmetic in lowest terms with a positive
// denominator; values built from raw num/den pairs go through make_rat.
using Rat = mpq_class;

Rat make_rat(const BigInt& num, const BigInt& den);

/// "num/den", or "num" when den == 1.
std::string to_string(const Rat& r);
std::string to_string(const BigInt& n);

/// Accepts "num" or "num/den" with an optional leading sign. Throws
/// Error{ParseError} on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);
BigInt parse_bigint(std::string_view text);

bool is_integer(const Rat& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace severi
