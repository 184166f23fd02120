#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

// GMP keeps mpq_class canonical (positive denominator, reduced) after every
// arithmetic operation; parse_rational canonicalizes explicitly.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading '-'). Throws Error(Schema) on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

}  // namespace leibniz
