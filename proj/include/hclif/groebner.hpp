#pragma once
#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "multipoly.hpp"

namespace hclif {

// Computation caps; exceeding either throws resource_limit so callers can
// report partial progress instead of spinning.
struct GroebnerLimits {
    int max_degree = 30;
    std::size_t max_basis = 5000;
};

// Full normal form: leading term reduced when divisible, otherwise emitted to
// the (tail-reduced) remainder.  Divisor choice is the first match in `gs`,
// so results are deterministic for a fixed basis order.
template <class F>
MultiPoly<F> normal_form(MultiPoly<F> f, const std::vector<MultiPoly<F>>& gs) {
    MultiPoly<F> out(f.nvars, f.order);
    while (!is_zero(f)) {
        const Monomial& lm = f.leading_monomial();
        const MultiPoly<F>* div = nullptr;
        for (const auto& g : gs)
            if (!is_zero(g) && divides(g.leading_monomial(), lm)) { div = &g; break; }
        if (div) {
            F c = -(f.leading_coeff() / div->leading_coeff());
            f = detail::axpy(f, c, quotient(lm, div->leading_monomial()), *div);
        } else {
            out.terms.push_back(f.terms.front());
            f.terms.erase(f.terms.begin());
        }
    }
    return out; // emitted in strictly descending order
}

namespace detail {

template <class F>
MultiPoly<F> s_poly(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly<F> a = mul_term(f, quotient(l, f.leading_monomial()), inv(f.leading_coeff()));
    return axpy(a, F(-1) * inv(g.leading_coeff()), quotient(l, g.leading_monomial()), g);
}

} // namespace detail

// Buchberger with coprime-criterion pair pruning and lcm-degree-first pair
// selection.  Returns the reduced basis: monic, pairwise tail-reduced, sorted
// by leading monomial ascending — the canonical form for (ideal, order).
template <class F>
std::vector<MultiPoly<F>> groebner_basis(const std::vector<MultiPoly<F>>& gens,
                                         const GroebnerLimits& lim = {}) {
    std::vector<MultiPoly<F>> basis;
    for (const auto& g : gens)
        if (!is_zero(g)) basis.push_back(monic(normal_form(g, basis)));
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const MultiPoly<F>& f) { return is_zero(f); }),
                basis.end());

    // pair queue keyed by (lcm degree, i, j)
    std::set<std::tuple<int, int, int>> pairs;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            pairs.insert({l.degree(), i, j});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!pairs.empty()) {
        auto [ld, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const Monomial& mi = basis[i].leading_monomial();
        const Monomial& mj = basis[j].leading_monomial();
        if (lcm(mi, mj) == mi * mj) continue; // coprime leads: S-poly reduces to 0
        MultiPoly<F> r = normal_form(detail::s_poly(basis[i], basis[j]), basis);
        if (is_zero(r)) continue;
        if (r.degree() > lim.max_degree)
            throw resource_limit("basis element degree " + std::to_string(r.degree()) +
                                 " exceeds cap " + std::to_string(lim.max_degree));
        basis.push_back(monic(r));
        if (basis.size() > lim.max_basis)
            throw resource_limit("basis size exceeds cap " + std::to_string(lim.max_basis));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // inter-reduce to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            MultiPoly<F> f = basis[k];
            std::vector<MultiPoly<F>> others;
            others.reserve(basis.size() - 1);
            for (std::size_t l = 0; l < basis.size(); ++l)
                if (l != k) others.push_back(basis[l]);
            MultiPoly<F> r = normal_form(f, others);
            if (is_zero(r)) {
                basis.erase(basis.begin() + k);
                changed = true;
                break;
            }
            r = monic(r);
            if (r != f) {
                basis[k] = r;
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const MultiPoly<F>& a, const MultiPoly<F>& b) {
        return mono_less(a.leading_monomial(), b.leading_monomial(), a.order);
    });
    return basis;
}

template <class F>
bool is_member(const MultiPoly<F>& f, const std::vector<MultiPoly<F>>& gb) {
    return is_zero(normal_form(f, gb));
}

template <class F>
std::vector<Monomial> leading_ideal(const std::vector<MultiPoly<F>>& gb) {
    std::vector<Monomial> lead;
    lead.reserve(gb.size());
    for (const auto& g : gb) lead.push_back(g.leading_monomial());
    return lead;
}

// Exponents e_i such that x_i^{e_i} lies in the monomial ideal, one per
// variable; empty when some variable has no pure power (locus not finite).
inline std::vector<int> pure_power_profile(const std::vector<Monomial>& lead, int nvars) {
    std::vector<int> prof(nvars, 0);
    for (const auto& m : lead) {
        int nz = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v) {
            if (m.e[v] == 0) continue;
            if (nz >= 0) { pure = false; break; }
            nz = v;
        }
        if (!pure || nz < 0) continue;
        if (prof[nz] == 0 || m.e[nz] < prof[nz]) prof[nz] = m.e[nz];
    }
    if (std::any_of(prof.begin(), prof.end(), [](int e) { return e == 0; })) return {};
    return prof;
}

} // namespace hclif
