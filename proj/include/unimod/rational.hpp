#ifndef UNIMOD_RATIONAL_HPP
#define UNIMOD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace unimod {

using BigInt = mpz_class;

// Always canonical (reduced, positive denominator) as long as it is built
// through the helpers below or through mpq arithmetic.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const BigInt& numerator, const BigInt& denominator);

// Reduced "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Accepts "p", "p/q" and "-p/q"; the result is reduced. Throws ParseError.
Rational parse_rational(std::string_view text);

// base^exponent for any integer exponent; base must be non-zero when
// the exponent is negative.
Rational power(const Rational& base, long exponent);

} // namespace unimod

#endif // UNIMOD_RATIONAL_HPP
