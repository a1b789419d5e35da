#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace multiarr {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// make_rational() which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "3", "-3/2", "+4/6" and the Unicode minus sign U+2212.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Least common multiple of all denominators (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

/// Scales a rational vector to the unique integer vector with gcd 1 and a
/// positive first nonzero entry. The zero vector is returned unchanged.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace multiarr
