#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace satedge {

/// Exact fraction of arbitrary-precision integers, always kept in lowest terms
/// with a positive denominator.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

namespace detail {
// cpp_int treats a leading zero as an octal prefix; parse plain decimal digits only.
inline BigInt parse_decimal_int(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    if (i == text.size()) throw std::invalid_argument("empty integer literal");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad digit in '" + text + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}
}  // namespace detail

/// Rational from a decimal literal, e.g. "15.9" becomes 159/10.
inline Rational rat_decimal(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(detail::parse_decimal_int(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(detail::parse_decimal_int(digits), den);
}

/// x(x-1)/2, for any rational x.
inline Rational choose2(const Rational& x) { return x * (x - 1) / 2; }

inline std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// "a/b" or "a" when the denominator is one.
inline std::string to_string(const Rational& q) {
    const BigInt& den = boost::multiprecision::denominator(q);
    std::string out = boost::multiprecision::numerator(q).str();
    if (den != 1) out += "/" + den.str();
    return out;
}

/// Parses "a", "-a", "a/b" or a decimal such as "0.25".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rational(detail::parse_decimal_int(text.substr(0, slash)),
                        detail::parse_decimal_int(text.substr(slash + 1)));
    return rat_decimal(text);
}

}  // namespace satedge
