#pragma once
#include <vector>

#include "multipoly.hpp"

namespace hclif {

// f = q*g + r with no term of r divisible by LT(g).
template <class F>
std::pair<MultiPoly<F>, MultiPoly<F>> poly_divmod_single(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    if (is_zero(g)) throw math_error("polynomial division by zero");
    MultiPoly<F> q(f.nvars, f.order), r(f.nvars, f.order), rest = f;
    const Monomial& lg = g.leading_monomial();
    F lci = inv(g.leading_coeff());
    while (!rest.terms.empty()) {
        const auto& lt = rest.terms.front();
        if (divides(lg, lt.first)) {
            F c = lt.second * lci;
            Monomial m = quotient(lt.first, lg);
            q.terms.emplace_back(m, c);
            rest = detail::axpy(rest, -c, m, g);
        } else {
            r.terms.push_back(lt);
            rest.terms.erase(rest.terms.begin());
        }
    }
    q.normalize();
    return {q, r};
}

// Exact quotient f/g; throws math_error when g does not divide f.
template <class F>
MultiPoly<F> poly_div_exact(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    auto [q, r] = poly_divmod_single(f, g);
    if (!is_zero(r)) throw math_error("inexact polynomial division");
    return q;
}

namespace detail {

// Coefficient polynomials of f by the exponent of variable v (same ring, v zeroed).
template <class F>
std::vector<MultiPoly<F>> coeffs_in_var(const MultiPoly<F>& f, int v) {
    int d = 0;
    for (auto& t : f.terms) d = std::max(d, t.first.e[v]);
    std::vector<MultiPoly<F>> out(d + 1, MultiPoly<F>(f.nvars, f.order));
    for (auto& t : f.terms) {
        Monomial m = t.first;
        int k = m.e[v];
        m.e[v] = 0;
        out[k].terms.emplace_back(m, t.second);
    }
    for (auto& c : out) c.normalize();
    return out;
}

template <class F>
MultiPoly<F> from_coeffs_in_var(const std::vector<MultiPoly<F>>& cs, int v, int nvars, MonomialOrder o) {
    MultiPoly<F> r(nvars, o);
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (auto& t : cs[k].terms) {
            Monomial m = t.first;
            m.e[v] += static_cast<int>(k);
            r.terms.emplace_back(m, t.second);
        }
    r.normalize();
    return r;
}

template <class F>
int deg_in_var(const MultiPoly<F>& f, int v) {
    int d = -1;
    for (auto& t : f.terms) d = std::max(d, t.first.e[v]);
    return d;
}

} // namespace detail

// Monic (leading coefficient 1) gcd; gcd(0,0) = 0.  Primitive PRS in the
// highest variable present, recursing on contents.
template <class F>
MultiPoly<F> poly_gcd(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    if (is_zero(f)) return is_zero(g) ? g : monic(g);
    if (is_zero(g)) return monic(f);
    int v = -1;
    for (int i = f.nvars - 1; i >= 0; --i)
        if (detail::deg_in_var(f, i) > 0 || detail::deg_in_var(g, i) > 0) { v = i; break; }
    if (v < 0) return MultiPoly<F>::constant(f.nvars, f.order, F(1)); // both constants
    auto content = [&](const MultiPoly<F>& h) {
        auto cs = detail::coeffs_in_var(h, v);
        MultiPoly<F> c(h.nvars, h.order);
        for (auto& ci : cs)
            if (!is_zero(ci)) c = poly_gcd(c, ci);
        return c;
    };
    MultiPoly<F> cf = content(f), cg = content(g);
    MultiPoly<F> pf = poly_div_exact(f, cf), pg = poly_div_exact(g, cg);
    MultiPoly<F> cc = poly_gcd(cf, cg);
    // Primitive pseudo-remainder sequence in v.
    MultiPoly<F> a = pf, b = pg;
    if (detail::deg_in_var(a, v) < detail::deg_in_var(b, v)) std::swap(a, b);
    while (!is_zero(b)) {
        // prem(a, b) in v
        MultiPoly<F> r = a;
        auto bc = detail::coeffs_in_var(b, v);
        int db = detail::deg_in_var(b, v);
        MultiPoly<F> lb = bc[db];
        while (!is_zero(r) && detail::deg_in_var(r, v) >= db) {
            auto rc = detail::coeffs_in_var(r, v);
            int dr = detail::deg_in_var(r, v);
            MultiPoly<F> lr = rc[dr];
            Monomial shift(r.nvars);
            shift.e[v] = dr - db;
            MultiPoly<F> rb = b;
            for (auto& t : rb.terms) t.first = t.first * shift;
            r = lb * r - lr * rb;
        }
        a = b;
        if (is_zero(r)) { b = r; break; }
        b = poly_div_exact(r, content(r));
    }
    MultiPoly<F> pp = poly_div_exact(a, content(a));
    return monic(cc * pp);
}

} // namespace hclif
