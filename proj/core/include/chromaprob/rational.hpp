#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace chromaprob {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// thrown when an explicit size guard trips (state counts, sweep widths)
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned long exp) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (exp == 0) return Rational(1);
    Int num = int_pow(numerator(base), exp);
    Int den = int_pow(denominator(base), exp);
    Rational r(num, den);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r = 1;
    for (unsigned long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int falling_factorial(const Int& q, unsigned long n) {
    Int r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= (q - Int(i));
    return r;
}

inline Int floor_rational(const Rational& x) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Int num = numerator(x), den = denominator(x);
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

// smallest integer strictly greater than x
inline Int least_integer_above(const Rational& x) {
    return floor_rational(x) + 1;
}

inline std::string rational_to_string(const Rational& x) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline double rational_to_double(const Rational& x) {
    return x.convert_to<double>();
}

inline Rational parse_rational(const std::string& text) {
    auto parse_int_part = [](const std::string& s) -> Int {
        if (s.empty()) throw std::invalid_argument("empty number in rational '" + s + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign without digits in rational");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("invalid character in rational '" + s + "'");
        return Int(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int_part(text));
    Int num = parse_int_part(text.substr(0, slash));
    Int den = parse_int_part(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational '" + text + "'");
    return Rational(num, den);
}

}  // namespace chromaprob
