#pragma once

// Exact rational scalars for every algebra in the library.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nchopf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical string form: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_string(const Rational& r)
{
    const Integer& den = boost::multiprecision::denominator(r);
    if (den == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

namespace detail {

inline Integer parse_integer(std::string_view s)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw std::invalid_argument("empty integer literal");
    Integer value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("invalid digit in integer literal '" + std::string(s) + "'");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace detail

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or q == 0.
inline Rational parse_rational(std::string_view s)
{
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_integer(s));
    Integer num = detail::parse_integer(s.substr(0, slash));
    Integer den = detail::parse_integer(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational literal '" + std::string(s) + "'");
    return Rational(num, den);
}

inline Integer binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline Integer factorial(long long n)
{
    Integer r = 1;
    for (long long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace nchopf
