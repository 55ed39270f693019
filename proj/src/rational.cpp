#include "unimod/rational.hpp"

#include "unimod/errors.hpp"

#include <cctype>

namespace unimod {

Rational make_rational(long numerator, long denominator)
{
    return make_rational(BigInt(numerator), BigInt(denominator));
}

Rational make_rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return make_rational(n, d);
}

Rational power(const Rational& base, long exponent)
{
    if (exponent < 0 && base == 0) {
        throw InvalidArgument("negative power of zero");
    }
    Rational result = 1;
    Rational factor = exponent < 0 ? Rational(1 / base) : base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1U) {
            result *= factor;
        }
        factor *= factor;
        e >>= 1U;
    }
    return result;
}

} // namespace unimod
