#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "error.hpp"

namespace hclif {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational inv(const Rational& r) {
    if (r.is_zero()) throw math_error("rational inverse of zero");
    return 1 / r;
}

inline std::string to_string(const Integer& n) { return n.str(); }

// "n" or "n/d", denominator suppressed when 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts [-]digits[/digits]; anything else is invalid_input.
inline Rational parse_rational(const std::string& s) {
    auto fail = [&] { throw invalid_input("bad rational: '" + s + "'"); };
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    auto digits = [&]() -> Integer {
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) fail();
        Integer v = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    };
    Integer num = digits();
    Integer den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = digits();
        if (den == 0) throw invalid_input("zero denominator: '" + s + "'");
    }
    if (i != s.size()) fail();
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Representative of x mod p in [0, p).
inline int mod_p(long long x, int p) {
    long long r = x % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Inverse of x mod prime p; x must be nonzero mod p.
inline int inv_mod_p(int x, int p) {
    x = mod_p(x, p);
    if (x == 0) throw math_error("inverse of zero mod p");
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = static_cast<int>(static_cast<long long>(r) * x % p);
        x = static_cast<int>(static_cast<long long>(x) * x % p);
    }
    return r;
}

} // namespace hclif
