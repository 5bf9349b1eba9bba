#pragma once
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "polygcd.hpp"

namespace hclif {

// Rational function in a fixed set of parameters over Q(w_p).  Canonical
// form: gcd(num, den) = 1 and den monic under the fixed parameter order
// (grlex).  den is never zero.  nparams == 0 marks a bare scalar that
// promotes to the other operand's parameter ring, mirroring CycNum.
struct ParamRat {
    MultiPoly<CycNum> num;
    MultiPoly<CycNum> den;

    static constexpr MonomialOrder param_order = MonomialOrder::grlex;

    ParamRat() : ParamRat(0) {}
    ParamRat(int n)
        : num(MultiPoly<CycNum>::constant(0, param_order, CycNum(n))),
          den(MultiPoly<CycNum>::constant(0, param_order, CycNum(1))) {}
    ParamRat(const CycNum& v)
        : num(MultiPoly<CycNum>::constant(0, param_order, v)),
          den(MultiPoly<CycNum>::constant(0, param_order, CycNum(1))) {}

    static ParamRat scalar_in(int nparams, const CycNum& v) {
        ParamRat r;
        r.num = MultiPoly<CycNum>::constant(nparams, param_order, v);
        r.den = MultiPoly<CycNum>::constant(nparams, param_order, CycNum(1));
        return r;
    }

    static ParamRat from_poly(MultiPoly<CycNum> f) {
        ParamRat r;
        r.den = MultiPoly<CycNum>::constant(f.nvars, param_order, CycNum(1));
        r.num = std::move(f);
        return r;
    }

    static ParamRat parameter(int nparams, int i) {
        return from_poly(MultiPoly<CycNum>::variable(nparams, param_order, i, CycNum(1)));
    }

    static ParamRat fraction(MultiPoly<CycNum> n, MultiPoly<CycNum> d) {
        if (is_zero(d)) throw math_error("parameter rational with zero denominator");
        ParamRat r;
        r.num = std::move(n);
        r.den = std::move(d);
        r.reduce();
        return r;
    }

    int nparams() const { return num.nvars; }

    void reduce() {
        if (is_zero(num)) {
            den = MultiPoly<CycNum>::constant(num.nvars, param_order, CycNum(1));
            return;
        }
        MultiPoly<CycNum> g = poly_gcd(num, den);
        if (!(g.terms.size() == 1 && g.terms[0].first.is_one())) {
            num = poly_div_exact(num, g);
            den = poly_div_exact(den, g);
        }
        CycNum lc = den.leading_coeff();
        if (!(lc == CycNum(1))) {
            CycNum s = inv(lc);
            num = scale(num, s);
            den = scale(den, s);
        }
    }
};

inline bool is_zero(const ParamRat& x) { return is_zero(x.num); }

namespace detail {
inline void promote_pair(ParamRat& a, ParamRat& b) {
    if (a.nparams() == b.nparams()) return;
    ParamRat* s = &a;
    int target = b.nparams();
    if (b.nparams() < a.nparams()) { s = &b; target = a.nparams(); }
    if (s->num.degree() > 0 || s->den.degree() > 0)
        throw math_error("parameter count mismatch on non-constant values");
    CycNum n = s->num.terms.empty() ? CycNum(0) : s->num.terms[0].second;
    CycNum d = s->den.terms[0].second;
    *s = ParamRat::scalar_in(target, n / d);
}
} // namespace detail

inline bool operator==(ParamRat a, ParamRat b) {
    detail::promote_pair(a, b);
    return a.num == b.num && a.den == b.den; // canonical forms compare directly
}
inline bool operator!=(const ParamRat& a, const ParamRat& b) { return !(a == b); }

inline ParamRat operator-(const ParamRat& x) {
    ParamRat r = x;
    r.num = -r.num;
    return r;
}

inline ParamRat operator+(ParamRat a, ParamRat b) {
    detail::promote_pair(a, b);
    return ParamRat::fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline ParamRat operator-(ParamRat a, ParamRat b) {
    detail::promote_pair(a, b);
    return ParamRat::fraction(a.num * b.den - b.num * a.den, a.den * b.den);
}

inline ParamRat operator*(ParamRat a, ParamRat b) {
    detail::promote_pair(a, b);
    return ParamRat::fraction(a.num * b.num, a.den * b.den);
}

inline ParamRat inv(const ParamRat& x) {
    if (is_zero(x)) throw math_error("parameter rational inverse of zero");
    return ParamRat::fraction(x.den, x.num);
}

inline ParamRat operator/(const ParamRat& a, const ParamRat& b) { return a * inv(b); }

inline ParamRat& operator+=(ParamRat& a, const ParamRat& b) { a = a + b; return a; }
inline ParamRat& operator-=(ParamRat& a, const ParamRat& b) { a = a - b; return a; }
inline ParamRat& operator*=(ParamRat& a, const ParamRat& b) { a = a * b; return a; }

inline std::vector<std::string> param_names(int nparams) {
    static const std::vector<std::string> base = {"a", "b", "c", "d", "e", "f", "g"};
    std::vector<std::string> ns(base.begin(), base.begin() + std::min<std::size_t>(nparams, base.size()));
    for (int i = static_cast<int>(ns.size()); i < nparams; ++i) ns.push_back("p" + std::to_string(i));
    return ns;
}

inline std::string to_string(const ParamRat& x) {
    std::vector<std::string> ns = param_names(x.num.nvars);
    std::string n = poly_to_string(x.num, ns);
    if (x.den.terms.size() == 1 && x.den.terms[0].first.is_one()) return n;
    return "(" + n + ")/(" + poly_to_string(x.den, ns) + ")";
}

// Evaluation at parameter values in Q(w_p).
inline CycNum evaluate(const ParamRat& x, const std::vector<CycNum>& vals) {
    CycNum n = evaluate(x.num, vals);
    CycNum d = evaluate(x.den, vals);
    return n / d;
}

} // namespace hclif
