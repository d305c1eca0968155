#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilgrade {

/// Exact rational number, always kept in canonical form (reduced, denominator > 0).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "n" (optional sign, surrounding whitespace ignored).
/// Throws ParseError on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

} // namespace nilgrade
