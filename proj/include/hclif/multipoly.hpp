#pragma once
#include <vector>
#include <string>
#include <algorithm>
#include <utility>

#include "monomial.hpp"
#include "rational.hpp"
#include "cyclotomic.hpp"

namespace hclif {

// Sparse multivariate polynomial over a field F.  Terms are kept strictly
// descending in the fixed monomial order with no zero coefficients.
template <class F>
struct MultiPoly {
    int nvars = 0;
    MonomialOrder order = MonomialOrder::grevlex;
    std::vector<std::pair<Monomial, F>> terms;

    MultiPoly() = default;
    MultiPoly(int nv, MonomialOrder o) : nvars(nv), order(o) {}

    static MultiPoly zero(int nv, MonomialOrder o) { return MultiPoly(nv, o); }

    static MultiPoly constant(int nv, MonomialOrder o, const F& c) {
        MultiPoly r(nv, o);
        if (!is_zero(c)) r.terms.emplace_back(Monomial(nv), c);
        return r;
    }

    static MultiPoly term(int nv, MonomialOrder o, const Monomial& m, const F& c) {
        MultiPoly r(nv, o);
        if (!is_zero(c)) r.terms.emplace_back(m, c);
        return r;
    }

    static MultiPoly variable(int nv, MonomialOrder o, int i, const F& c) {
        return term(nv, o, Monomial::var(nv, i), c);
    }

    bool is_zero_v() const { return terms.empty(); }
    int degree() const {
        int d = -1;
        for (auto& t : terms) d = std::max(d, t.first.degree());
        return d;
    }
    const Monomial& leading_monomial() const {
        if (terms.empty()) throw math_error("leading term of zero polynomial");
        return terms.front().first;
    }
    const F& leading_coeff() const {
        if (terms.empty()) throw math_error("leading term of zero polynomial");
        return terms.front().second;
    }

    // Restores the invariant from an arbitrary term list.
    void normalize() {
        std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
            return mono_cmp(a.first, b.first, order) > 0;
        });
        std::vector<std::pair<Monomial, F>> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(t);
            if (!out.empty() && is_zero(out.back().second)) out.pop_back();
        }
        terms = std::move(out);
    }
};

template <class F>
inline bool is_zero(const MultiPoly<F>& f) { return f.is_zero_v(); }

template <class F>
inline bool operator==(const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
}
template <class F>
inline bool operator!=(const MultiPoly<F>& a, const MultiPoly<F>& b) { return !(a == b); }

namespace detail {
// r = a + s*(m * b), merged in one descending pass.  s may be zero-checked by caller.
template <class F>
MultiPoly<F> axpy(const MultiPoly<F>& a, const F& s, const Monomial& m, const MultiPoly<F>& b) {
    MultiPoly<F> r(a.nvars, a.order);
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) { r.terms.push_back(a.terms[i++]); continue; }
        Monomial mb = b.terms[j].first * m;
        if (i == a.terms.size()) {
            F c = s * b.terms[j].second;
            if (!is_zero(c)) r.terms.emplace_back(std::move(mb), std::move(c));
            ++j;
            continue;
        }
        int cmp = mono_cmp(a.terms[i].first, mb, a.order);
        if (cmp > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            F c = s * b.terms[j].second;
            if (!is_zero(c)) r.terms.emplace_back(std::move(mb), std::move(c));
            ++j;
        } else {
            F c = a.terms[i].second + s * b.terms[j].second;
            if (!is_zero(c)) r.terms.emplace_back(std::move(mb), std::move(c));
            ++i; ++j;
        }
    }
    return r;
}
} // namespace detail

template <class F>
inline MultiPoly<F> operator+(const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return detail::axpy(a, F(1), Monomial(a.nvars), b);
}

template <class F>
inline MultiPoly<F> operator-(const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return detail::axpy(a, F(-1), Monomial(a.nvars), b);
}

template <class F>
inline MultiPoly<F> operator-(const MultiPoly<F>& a) {
    MultiPoly<F> r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

template <class F>
inline MultiPoly<F> scale(const MultiPoly<F>& a, const F& s) {
    if (is_zero(s)) return MultiPoly<F>::zero(a.nvars, a.order);
    MultiPoly<F> r = a;
    for (auto& t : r.terms) t.second = t.second * s;
    return r;
}

template <class F>
inline MultiPoly<F> mul_term(const MultiPoly<F>& a, const Monomial& m, const F& s) {
    if (is_zero(s)) return MultiPoly<F>::zero(a.nvars, a.order);
    MultiPoly<F> r(a.nvars, a.order);
    r.terms.reserve(a.terms.size());
    for (auto& t : a.terms) {
        F c = t.second * s;
        if (!is_zero(c)) r.terms.emplace_back(t.first * m, std::move(c));
    }
    return r;
}

template <class F>
inline MultiPoly<F> operator*(const MultiPoly<F>& a, const MultiPoly<F>& b) {
    MultiPoly<F> r(a.nvars, a.order);
    for (auto& t : a.terms)
        r = detail::axpy(r, t.second, t.first, b);
    return r;
}

template <class F>
inline MultiPoly<F>& operator+=(MultiPoly<F>& a, const MultiPoly<F>& b) { a = a + b; return a; }
template <class F>
inline MultiPoly<F>& operator-=(MultiPoly<F>& a, const MultiPoly<F>& b) { a = a - b; return a; }

template <class F>
inline MultiPoly<F> monic(const MultiPoly<F>& f) {
    if (f.terms.empty()) return f;
    return scale(f, inv(f.leading_coeff()));
}

template <class F>
inline F evaluate(const MultiPoly<F>& f, const std::vector<F>& x) {
    F acc(0);
    for (auto& t : f.terms) {
        F v = t.second;
        for (int i = 0; i < f.nvars; ++i)
            for (int k = 0; k < t.first.e[i]; ++k) v = v * x[i];
        acc += v;
    }
    return acc;
}

// Substitutes x_i -> image[i] (polynomials in a possibly different ring).
template <class F>
inline MultiPoly<F> substitute(const MultiPoly<F>& f, const std::vector<MultiPoly<F>>& image) {
    if (image.empty()) throw invalid_input("substitute: empty image");
    MultiPoly<F> acc = MultiPoly<F>::zero(image[0].nvars, image[0].order);
    for (auto& t : f.terms) {
        MultiPoly<F> v = MultiPoly<F>::constant(acc.nvars, acc.order, t.second);
        for (int i = 0; i < f.nvars; ++i)
            for (int k = 0; k < t.first.e[i]; ++k) v = v * image[i];
        acc += v;
    }
    return acc;
}

// Descending-order term list rendered as "c*mono" joined by signs.
template <class F>
inline std::string poly_to_string(const MultiPoly<F>& f, const std::vector<std::string>& names) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (auto& t : f.terms) {
        std::string cs = to_string(t.second);
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        bool composite = cs.find_first_of("+-") != std::string::npos;
        std::string ms = mono_to_string(t.first, names);
        std::string term;
        if (ms == "1")
            term = composite ? "(" + cs + ")" : cs;
        else if (cs == "1")
            term = ms;
        else
            term = (composite ? "(" + cs + ")" : cs) + "*" + ms;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? "-" : "+") + term;
    }
    return out;
}

} // namespace hclif
