#pragma once
#include <vector>
#include <string>
#include <algorithm>

#include "rational.hpp"
#include "error.hpp"

namespace hclif {

// Element of Q(w), w a primitive p-th root of unity, p prime, in the basis
// {1, w, ..., w^{p-2}}.  p == 0 marks a plain rational scalar that embeds
// into any Q(w); arithmetic promotes scalars to the other operand's field.
struct CycNum {
    int p = 0;
    std::vector<Rational> c{Rational(0)};

    CycNum() = default;
    CycNum(int n) : p(0), c{Rational(n)} {}
    CycNum(const Integer& n) : p(0), c{Rational(n)} {}
    CycNum(const Rational& r) : p(0), c{r} {}

    static CycNum zero_in(int p_) { return scalar_in(p_, Rational(0)); }

    static CycNum scalar_in(int p_, const Rational& r) {
        check_prime(p_);
        CycNum x;
        x.p = p_;
        x.c.assign(p_ - 1, Rational(0));
        x.c[0] = r;
        return x;
    }

    // w^k in Q(w_p).
    static CycNum root_power(int p_, long long k) {
        check_prime(p_);
        std::vector<Rational> raw(p_, Rational(0));
        raw[mod_p(k, p_)] = 1;
        return reduce(p_, raw);
    }

    static CycNum root(int p_) { return root_power(p_, 1); }

    // Coefficients over exponents 0..raw.size()-1, folded mod p and reduced
    // by 1 + w + ... + w^{p-1} = 0.
    static CycNum reduce(int p_, const std::vector<Rational>& raw) {
        check_prime(p_);
        std::vector<Rational> folded(p_, Rational(0));
        for (std::size_t e = 0; e < raw.size(); ++e)
            folded[e % p_] += raw[e];
        CycNum x;
        x.p = p_;
        x.c.assign(p_ - 1, Rational(0));
        for (int i = 0; i + 1 < p_; ++i) x.c[i] = folded[i] - folded[p_ - 1];
        return x;
    }

    static void check_prime(int p_) {
        if (!is_prime(p_)) throw invalid_input("p must be prime, got " + std::to_string(p_));
    }

    bool is_zero_v() const {
        return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); });
    }

    bool is_rational_v() const {
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!c[i].is_zero()) return false;
        return true;
    }
};

inline bool is_zero(const CycNum& x) { return x.is_zero_v(); }
inline bool is_rational(const CycNum& x) { return x.is_rational_v(); }

inline Rational rational_value(const CycNum& x) {
    if (!is_rational(x)) throw math_error("cyclotomic value is not rational");
    return x.c[0];
}

namespace detail {
inline void promote_pair(CycNum& a, CycNum& b) {
    if (a.p == b.p) return;
    if (a.p == 0) {
        Rational r = a.c[0];
        a = CycNum::scalar_in(b.p, r);
    } else if (b.p == 0) {
        Rational r = b.c[0];
        b = CycNum::scalar_in(a.p, r);
    } else {
        throw math_error("mixed cyclotomic fields p=" + std::to_string(a.p) + " and p=" + std::to_string(b.p));
    }
}
} // namespace detail

inline CycNum operator-(const CycNum& x) {
    CycNum r = x;
    for (auto& v : r.c) v = -v;
    return r;
}

inline CycNum operator+(CycNum a, CycNum b) {
    detail::promote_pair(a, b);
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
}

inline CycNum operator-(CycNum a, CycNum b) {
    detail::promote_pair(a, b);
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
}

inline CycNum operator*(CycNum a, CycNum b) {
    detail::promote_pair(a, b);
    if (a.p == 0) {
        CycNum r;
        r.c[0] = a.c[0] * b.c[0];
        return r;
    }
    if (is_rational(a) || is_rational(b)) {
        if (is_rational(b)) std::swap(a, b);
        const Rational& s = a.c[0];
        CycNum r = b;
        for (auto& v : r.c) v *= s;
        return r;
    }
    const int p = a.p;
    std::vector<Rational> folded(p, Rational(0));
    for (int i = 0; i + 1 < p; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j + 1 < p; ++j) {
            if (b.c[j].is_zero()) continue;
            int e = i + j;
            if (e >= p) e -= p;
            folded[e] += a.c[i] * b.c[j];
        }
    }
    CycNum r;
    r.p = p;
    r.c.assign(p - 1, Rational(0));
    for (int i = 0; i + 1 < p; ++i) r.c[i] = folded[i] - folded[p - 1];
    return r;
}

inline CycNum& operator+=(CycNum& a, const CycNum& b) { a = a + b; return a; }
inline CycNum& operator-=(CycNum& a, const CycNum& b) { a = a - b; return a; }
inline CycNum& operator*=(CycNum& a, const CycNum& b) { a = a * b; return a; }

inline bool operator==(CycNum a, CycNum b) {
    detail::promote_pair(a, b);
    return a.c == b.c;
}
inline bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

namespace detail {
using QPoly = std::vector<Rational>; // little-endian, no trailing-zero guarantee

inline int qp_deg(const QPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!f[i].is_zero()) return i;
    return -1;
}

inline QPoly qp_scale(QPoly f, const Rational& s) {
    for (auto& v : f) v *= s;
    return f;
}

inline QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// a - m*x^k*b
inline QPoly qp_sub_shift(QPoly a, const Rational& m, int k, const QPoly& b) {
    if (a.size() < b.size() + k) a.resize(b.size() + k, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= m * b[i];
    return a;
}

inline QPoly qp_rem(QPoly a, const QPoly& b, QPoly* quot = nullptr) {
    int db = qp_deg(b);
    if (db < 0) throw math_error("polynomial division by zero");
    if (quot) quot->assign(std::max(qp_deg(a) - db + 1, 1), Rational(0));
    for (int da = qp_deg(a); da >= db; da = qp_deg(a)) {
        Rational m = a[da] / b[db];
        if (quot) (*quot)[da - db] = m;
        a = qp_sub_shift(std::move(a), m, da - db, b);
    }
    return a;
}
} // namespace detail

// Inverse in Q(w); throws math_error on zero.
inline CycNum inv(const CycNum& x) {
    if (is_zero(x)) throw math_error("cyclotomic inverse of zero");
    if (is_rational(x)) {
        CycNum r = x;
        r.c[0] = 1 / r.c[0];
        for (std::size_t i = 1; i < r.c.size(); ++i) r.c[i] = 0;
        return r;
    }
    const int p = x.p;
    // Extended Euclid on (f, Phi_p) over Q[t]; Phi_p irreducible so the gcd
    // is a nonzero constant g with u*f + v*Phi = g, hence f^{-1} = u/g.
    detail::QPoly f(x.c.begin(), x.c.end());
    detail::QPoly phi(p, Rational(1)); // 1 + t + ... + t^{p-1}
    detail::QPoly r0 = phi, r1 = f;
    detail::QPoly u0{Rational(0)}, u1{Rational(1)};
    while (true) {
        int d1 = detail::qp_deg(r1);
        if (d1 <= 0) break;
        detail::QPoly q;
        detail::QPoly r2 = detail::qp_rem(r0, r1, &q);
        detail::QPoly u2 = u0;
        for (int k = 0; k <= detail::qp_deg(q); ++k)
            if (!q[k].is_zero()) u2 = detail::qp_sub_shift(std::move(u2), q[k], k, u1);
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
    }
    if (detail::qp_deg(r1) != 0) throw math_error("cyclotomic inverse: gcd not constant");
    detail::QPoly u = detail::qp_scale(std::move(u1), 1 / r1[0]);
    u = detail::qp_rem(std::move(u), phi);
    u.resize(p - 1, Rational(0));
    CycNum r;
    r.p = p;
    r.c.assign(u.begin(), u.begin() + (p - 1));
    return r;
}

inline CycNum operator/(const CycNum& a, const CycNum& b) { return a * inv(b); }
inline CycNum& operator/=(CycNum& a, const CycNum& b) { a = a * inv(b); return a; }

// Galois map w -> w^j, 1 <= j <= p-1; identity on rationals.
inline CycNum galois(const CycNum& x, int j) {
    if (x.p == 0) return x;
    const int p = x.p;
    j = mod_p(j, p);
    if (j == 0) throw invalid_input("galois exponent must be nonzero mod p");
    std::vector<Rational> raw(p, Rational(0));
    for (int i = 0; i + 1 < p; ++i)
        if (!x.c[i].is_zero()) raw[mod_p(static_cast<long long>(i) * j, p)] += x.c[i];
    return CycNum::reduce(p, raw);
}

// Complex conjugation w -> w^{-1}.
inline CycNum conj(const CycNum& x) { return x.p == 0 ? x : galois(x, x.p - 1); }

inline CycNum pow(CycNum base, long long e) {
    if (e < 0) { base = inv(base); e = -e; }
    CycNum r(1);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Total order for canonical sorting only (no arithmetic meaning):
// rationals (p=0) promote, then lexicographic on coefficient vectors.
inline bool cyc_less(CycNum a, CycNum b) {
    if (a.p != b.p) detail::promote_pair(a, b);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

// Ascending powers of w; "0" for zero; e.g. "1+2*w-w^3", "5/3".
inline std::string to_string(const CycNum& x) {
    std::string out;
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        const Rational& r = x.c[i];
        if (r.is_zero()) continue;
        bool neg = r < 0;
        Rational mag = neg ? Rational(-r) : r;
        std::string coef = to_string(mag);
        std::string term;
        if (i == 0) {
            term = coef;
        } else {
            std::string w = (i == 1) ? "w" : "w^" + std::to_string(i);
            term = (mag == 1) ? w : coef + "*" + w;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace hclif
