#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace projindex {

/// Exact rational. GMP keeps it canonical (reduced, positive denominator)
/// after every arithmetic operation; construction from raw parts must go
/// through make_scalar/parse_scalar, which canonicalize.
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal integers, optional surrounding blanks).
/// Throws DomainError on malformed text or zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& x);

Integer binomial(long n, long k);  // 0 when k < 0 or k > n
Scalar power(const Scalar& base, long exponent);  // exponent may be negative

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace projindex
