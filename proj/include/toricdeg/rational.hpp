#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace toricdeg {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws SchemaError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
bool is_integral(const Rational& value);

/// Narrowing that throws instead of wrapping.
std::int64_t to_int64(const Integer& value);
std::int64_t to_int64(const Rational& value);

RationalVector to_rational(const IntVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const IntVector& a, const RationalVector& b);
std::int64_t dot(const IntVector& a, const IntVector& b);

std::int64_t gcd_of(const IntVector& v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Smallest positive integer multiple of a rational vector, made primitive.
IntVector primitive_integer_multiple(const RationalVector& v);

bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace toricdeg
