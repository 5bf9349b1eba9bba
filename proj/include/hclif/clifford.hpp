#pragma once
#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "hilbert.hpp"
#include "quad_algebra.hpp"

namespace hclif {

// Point of the parameter space P^{(p-1)/2}: projective coordinates
// (a_0 : a_1 : ... : a_h), h = (p-1)/2, over Q(w_p).
struct ModuliPoint {
    int p = 0;
    std::vector<CycNum> a;
};

inline ModuliPoint make_moduli_point(int p, std::vector<CycNum> coords) {
    CycNum::check_prime(p);
    if (p == 2) throw invalid_input("parameter space needs an odd prime");
    const int h = (p - 1) / 2;
    if (static_cast<int>(coords.size()) != h + 1)
        throw invalid_input("expected " + std::to_string(h + 1) + " coordinates");
    bool any = false;
    for (auto& c : coords) {
        if (c.p == 0) c = CycNum::scalar_in(p, c.c[0]);
        else if (c.p != p) throw invalid_input("coordinate lives in the wrong cyclotomic field");
        if (!is_zero(c)) any = true;
    }
    if (!any) throw invalid_input("projective point cannot be zero");
    return ModuliPoint{p, std::move(coords)};
}

// Scale so the first nonzero coordinate is 1.
inline ModuliPoint normalize(const ModuliPoint& pt) {
    ModuliPoint out = pt;
    for (const auto& c : out.a)
        if (!is_zero(c)) {
            CycNum s = inv(c);
            for (auto& x : out.a) x *= s;
            return out;
        }
    throw invalid_input("projective point cannot be zero");
}

inline bool proj_equal(const ModuliPoint& x, const ModuliPoint& y) {
    if (x.p != y.p) return false;
    return normalize(x).a == normalize(y).a;
}

// p = 5 traditional coordinates (A : B : C) = (a_2 : a_1 : a_0).
inline ModuliPoint abc_point(const CycNum& A, const CycNum& B, const CycNum& C) {
    return make_moduli_point(5, {C, B, A});
}

inline std::vector<CycNum> abc_coords(const ModuliPoint& pt) {
    if (pt.p != 5) throw invalid_input("ABC coordinates are specific to p = 5");
    return {pt.a[2], pt.a[1], pt.a[0]};
}

// p = 3 traditional coordinate t = a_1/a_0 with t = infinity at (0:1).
inline ModuliPoint p3_point(const CycNum& t) { return make_moduli_point(3, {CycNum(1), t}); }
inline ModuliPoint p3_infinity() { return make_moduli_point(3, {CycNum(0), CycNum(1)}); }

// Circular distance folded into 0..(p-1)/2.
inline int fold_distance(int p, int d) {
    int m = mod_p(d, p);
    return std::min(m, p - m);
}

// --- relation tensors ------------------------------------------------------

inline std::vector<CycNum> zero_tensor(int p) {
    return std::vector<CycNum>(p * p, CycNum::zero_in(p));
}

// x_i x_j + x_j x_i
inline std::vector<CycNum> anticommutator_rel(int p, int i, int j) {
    auto r = zero_tensor(p);
    i = mod_p(i, p);
    j = mod_p(j, p);
    r[i * p + j] += CycNum::scalar_in(p, Rational(1));
    r[j * p + i] += CycNum::scalar_in(p, Rational(1));
    return r;
}

// x_k^2
inline std::vector<CycNum> square_rel(int p, int k) {
    auto r = zero_tensor(p);
    k = mod_p(k, p);
    r[k * p + k] = CycNum::scalar_in(p, Rational(1));
    return r;
}

inline std::vector<CycNum> scaled_sum(const CycNum& ca, const std::vector<CycNum>& ra,
                                      const CycNum& cb, const std::vector<CycNum>& rb) {
    std::vector<CycNum> r(ra.size());
    for (std::size_t t = 0; t < ra.size(); ++t) r[t] = ca * ra[t] + cb * rb[t];
    return r;
}

// Generating relations at a parameter point: the shift orbit of
//   a_0 (x_m x_{m+i} + x_{m+i} x_m) - a_i x_{m+i/2}^2,  i = 1..h,
// together with the cross family
//   a_i AC(k - j/2, k + j/2) - a_j AC(k - i/2, k + i/2),  i < j,
// whose members are consequences when a_0 != 0 and fill out the span when
// a_0 = 0.  The span has dimension p(p-1)/2 at every point.
inline std::vector<std::vector<CycNum>> presentation_relations(const ModuliPoint& pt) {
    const int p = pt.p;
    const int h = (p - 1) / 2;
    const int inv2 = inv_mod_p(2, p);
    std::vector<std::vector<CycNum>> rels;
    for (int i = 1; i <= h; ++i)
        for (int m = 0; m < p; ++m)
            rels.push_back(scaled_sum(pt.a[0], anticommutator_rel(p, m, m + i),
                                      -pt.a[i], square_rel(p, m + i * inv2)));
    for (int k = 0; k < p; ++k)
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j)
                rels.push_back(scaled_sum(pt.a[i], anticommutator_rel(p, k - j * inv2, k + j * inv2),
                                          -pt.a[j], anticommutator_rel(p, k - i * inv2, k + i * inv2)));
    return rels;
}

// The graded algebra input: p generators x_i of weight i.
inline QuadraticAlgebra clifford_algebra(const ModuliPoint& pt) {
    std::vector<int> wts(pt.p);
    for (int i = 0; i < pt.p; ++i) wts[i] = i;
    return make_quadratic_algebra(pt.p, pt.p, std::move(wts), presentation_relations(pt));
}

// --- the commutative side: forms and base locus ----------------------------

// Symmetric matrix M_k: entries on the anti-diagonal u+v = 2k (mod p):
// 2 a_0 at (k,k) and a_{fold(v-u)} off the diagonal.
inline Mat<CycNum> form_matrix(const ModuliPoint& pt, int k) {
    const int p = pt.p;
    Mat<CycNum> m(p, p);
    for (auto& v : m.a) v = CycNum::zero_in(p);
    for (int u = 0; u < p; ++u) {
        int v = mod_p(2 * k - u, p);
        m(u, v) = (u == v) ? CycNum(2) * pt.a[0] : pt.a[fold_distance(p, v - u)];
    }
    return m;
}

// q_k(z) = z^T M_k z as a polynomial in z_0..z_{p-1}.
inline MultiPoly<CycNum> base_quadric(const ModuliPoint& pt, int k,
                                      MonomialOrder order = MonomialOrder::grevlex) {
    const int p = pt.p;
    auto M = form_matrix(pt, k);
    MultiPoly<CycNum> q(p, order);
    for (int u = 0; u < p; ++u)
        for (int v = u; v < p; ++v) {
            CycNum c = (u == v) ? M(u, u) : M(u, v) + M(v, u);
            if (is_zero(c)) continue;
            Monomial m(p);
            ++m.e[u];
            ++m.e[v];
            q += MultiPoly<CycNum>::term(p, order, m, c);
        }
    return q;
}

inline std::vector<MultiPoly<CycNum>> base_quadrics(const ModuliPoint& pt,
                                                    MonomialOrder order = MonomialOrder::grevlex) {
    std::vector<MultiPoly<CycNum>> qs;
    qs.reserve(pt.p);
    for (int k = 0; k < pt.p; ++k) qs.push_back(base_quadric(pt, k, order));
    return qs;
}

// u^T M_k v; the polar form of q_k is twice this on the diagonal convention.
inline CycNum polar_value(const ModuliPoint& pt, int k, const std::vector<CycNum>& u,
                          const std::vector<CycNum>& v) {
    auto M = form_matrix(pt, k);
    CycNum acc = CycNum::zero_in(pt.p);
    for (int i = 0; i < pt.p; ++i) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < pt.p; ++j)
            if (!is_zero(M(i, j)) && !is_zero(v[j])) acc += u[i] * M(i, j) * v[j];
    }
    return acc;
}

inline bool point_in_locus(const ModuliPoint& pt, const std::vector<CycNum>& z) {
    for (int k = 0; k < pt.p; ++k)
        if (!is_zero(polar_value(pt, k, z, z))) return false;
    return true;
}

// The line through u and v lies in the locus iff q_k(u) = q_k(v) = u^T M_k v = 0.
inline bool line_in_locus(const ModuliPoint& pt, const std::vector<CycNum>& u,
                          const std::vector<CycNum>& v) {
    for (int k = 0; k < pt.p; ++k) {
        if (!is_zero(polar_value(pt, k, u, u))) return false;
        if (!is_zero(polar_value(pt, k, v, v))) return false;
        if (!is_zero(polar_value(pt, k, u, v))) return false;
    }
    return true;
}

// --- candidate points: the p+1 distinguished projective orbits -------------

namespace detail {
inline std::string proj_key(std::vector<CycNum> z) {
    for (const auto& c : z)
        if (!is_zero(c)) {
            CycNum s = inv(c);
            std::string k;
            for (const auto& x : z) k += to_string(x * s) + "|";
            return k;
        }
    return "0";
}
} // namespace detail

// Projective orbit of a seed under coordinate shift z_i -> z_{i-1 mod p} and
// coordinate scaling z_i -> w^i z_i (the monomial symmetry group).
inline std::vector<std::vector<CycNum>> monomial_orbit(int p, const std::vector<CycNum>& seed) {
    std::vector<std::vector<CycNum>> orbit;
    std::map<std::string, bool> seen;
    std::vector<std::vector<CycNum>> queue{seed};
    seen[detail::proj_key(seed)] = true;
    while (!queue.empty()) {
        auto z = queue.back();
        queue.pop_back();
        orbit.push_back(z);
        std::vector<CycNum> shifted(p), scaled(p);
        for (int i = 0; i < p; ++i) {
            shifted[i] = z[mod_p(i + 1, p)];
            scaled[i] = CycNum::root_power(p, i) * z[i];
        }
        for (auto& nxt : {shifted, scaled}) {
            auto key = detail::proj_key(nxt);
            if (!seen[key]) {
                seen[key] = true;
                queue.push_back(nxt);
            }
        }
    }
    return orbit;
}

// p+1 orbits: the coordinate points, then for j = 0..p-1 the orbit of the
// pattern point z_i = w^{j i(i+1)/2}.
inline std::vector<std::vector<std::vector<CycNum>>> candidate_orbits(int p) {
    std::vector<std::vector<std::vector<CycNum>>> orbits;
    std::vector<CycNum> e0(p, CycNum::zero_in(p));
    e0[0] = CycNum::scalar_in(p, Rational(1));
    orbits.push_back(monomial_orbit(p, e0));
    for (int j = 0; j < p; ++j) {
        std::vector<CycNum> s(p);
        for (int i = 0; i < p; ++i)
            s[i] = CycNum::root_power(p, static_cast<long long>(j) * i * (i + 1) / 2);
        orbits.push_back(monomial_orbit(p, s));
    }
    return orbits;
}

// --- base locus analysis ----------------------------------------------------

struct LocusAnalysis {
    HilbertSeries series;
    int dim = -1;          // projective dimension, -1 when empty
    Integer degree = 0;
    std::vector<int> pure_powers;                     // nonempty iff leading ideal is coordinate-finite
    std::vector<int> verified_orbits;                 // candidate orbit ids fully inside the locus
    std::vector<std::vector<CycNum>> verified_points; // their points
    std::vector<std::pair<int, int>> coordinate_lines; // span(e_i, e_j) inside the locus
};

inline LocusAnalysis analyze_base_locus(const ModuliPoint& pt, const GroebnerLimits& lim = {},
                                        MonomialOrder order = MonomialOrder::grevlex) {
    const int p = pt.p;
    LocusAnalysis out;
    auto gb = groebner_basis<CycNum>(base_quadrics(pt, order), lim);
    auto lead = leading_ideal(gb);
    out.series = hilbert_series(lead, p);
    auto prof = projective_profile(out.series);
    out.dim = prof.dim;
    out.degree = prof.degree;
    out.pure_powers = pure_power_profile(lead, p);

    auto orbits = candidate_orbits(p);
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        bool all_in = true;
        for (const auto& z : orbits[oi])
            if (!point_in_locus(pt, z)) { all_in = false; break; }
        if (all_in) {
            out.verified_orbits.push_back(static_cast<int>(oi));
            for (const auto& z : orbits[oi]) out.verified_points.push_back(z);
        }
    }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            std::vector<CycNum> u(p, CycNum::zero_in(p)), v(p, CycNum::zero_in(p));
            u[i] = CycNum::scalar_in(p, Rational(1));
            v[j] = CycNum::scalar_in(p, Rational(1));
            if (line_in_locus(pt, u, v)) out.coordinate_lines.emplace_back(i, j);
        }
    return out;
}

// --- p = 5 discriminant and regularity --------------------------------------

namespace detail {
inline MultiPoly<CycNum> abc_term(int ea, int eb, int ec, const CycNum& c) {
    Monomial m(3);
    m.e = {ea, eb, ec};
    return MultiPoly<CycNum>::term(3, MonomialOrder::grevlex, m, c);
}
} // namespace detail

// C^7 + A^5 C^2 - 4 A B C^5 + A^6 B + 5 A^3 B^3 C + B^5 C^2 + A B^6
inline MultiPoly<CycNum> discriminant_sum_form() {
    using detail::abc_term;
    CycNum one = CycNum::scalar_in(5, Rational(1));
    return abc_term(0, 0, 7, one) + abc_term(5, 0, 2, one) + abc_term(1, 1, 5, CycNum(-4) * one) +
           abc_term(6, 1, 0, one) + abc_term(3, 3, 1, CycNum(5) * one) + abc_term(0, 5, 2, one) +
           abc_term(1, 6, 0, one);
}

// (AB + C^2) * prod_k (C + w^k A + w^{-k} B)
inline MultiPoly<CycNum> discriminant_product_form() {
    using detail::abc_term;
    CycNum one = CycNum::scalar_in(5, Rational(1));
    MultiPoly<CycNum> acc = abc_term(1, 1, 0, one) + abc_term(0, 0, 2, one);
    for (int k = 0; k < 5; ++k)
        acc = acc * (abc_term(0, 0, 1, one) + abc_term(1, 0, 0, CycNum::root_power(5, k)) +
                     abc_term(0, 1, 0, CycNum::root_power(5, -k)));
    return acc;
}

// A single polynomial whose nonvanishing at the point is exactly the regular
// (finite, empty-base-locus) case: p=3: a0 (a0^3 + a1^3); p=5: C * disc.
inline CycNum regular_locus_value(const ModuliPoint& pt) {
    if (pt.p == 3) {
        return pt.a[0] * (pow(pt.a[0], 3) + pow(pt.a[1], 3));
    }
    if (pt.p == 5) {
        auto abc = abc_coords(pt);
        return abc[2] * evaluate(discriminant_sum_form(), abc);
    }
    throw invalid_input("closed-form regularity test available for p = 3 and 5 only");
}

inline bool is_regular_point(const ModuliPoint& pt) { return !is_zero(regular_locus_value(pt)); }

// --- the determinant of the symbol pencil -----------------------------------

// M(s) = sum_k s_k M_k has (u,v) entry c_{uv} s_{(u+v)/2}; its determinant as
// a polynomial in s_0..s_{p-1}, expanded permutation by permutation (entries
// are single terms, so no intermediate blowup).
// det of the pencil in s_k = x_k^2, with the exact fixedness check under the
// induced coordinate actions s_j -> s_{j-1} and s_j -> w^{2j} s_j, plus the
// coefficient of the all-variables monomial s_0 s_1 ... s_{p-1}.
struct DetReport {
    MultiPoly<CycNum> det;
    bool trivial = false;
    CycNum leading;
};

inline MultiPoly<CycNum> pencil_det(const ModuliPoint& pt);

inline DetReport det_quadratic_form(const ModuliPoint& pt) {
    const int p = pt.p;
    if (is_zero(pt.a[0])) throw invalid_input("determinant form needs a_0 != 0");
    if (p >= 7) throw resource_limit("symbolic pencil determinant guarded for p >= 7");
    DetReport rep;
    rep.det = pencil_det(pt);
    auto order = rep.det.order;
    std::vector<MultiPoly<CycNum>> shift, diag;
    for (int j = 0; j < p; ++j) {
        shift.push_back(
            MultiPoly<CycNum>::variable(p, order, mod_p(j - 1, p), CycNum::scalar_in(p, Rational(1))));
        diag.push_back(MultiPoly<CycNum>::variable(p, order, j, CycNum::root_power(p, 2 * j)));
    }
    rep.trivial = substitute(rep.det, shift) == rep.det && substitute(rep.det, diag) == rep.det;
    rep.leading = CycNum::zero_in(p);
    for (const auto& t : rep.det.terms) {
        bool all_ones = true;
        for (int j = 0; j < p; ++j) all_ones = all_ones && t.first.e[j] == 1;
        if (all_ones) rep.leading = t.second;
    }
    return rep;
}

inline MultiPoly<CycNum> pencil_det(const ModuliPoint& pt) {
    const int p = pt.p;
    const int inv2 = inv_mod_p(2, p);
    // entry (u,v): coefficient and s-index
    std::vector<std::vector<std::pair<CycNum, int>>> entry(p, std::vector<std::pair<CycNum, int>>(p));
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v) {
            int k = mod_p((u + v) * inv2, p);
            CycNum c = (u == v) ? CycNum(2) * pt.a[0] : pt.a[fold_distance(p, v - u)];
            entry[u][v] = {c, k};
        }
    std::map<std::vector<int>, CycNum> acc;
    std::vector<int> perm(p);
    for (int i = 0; i < p; ++i) perm[i] = i;
    do {
        int invs = 0;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (perm[i] > perm[j]) ++invs;
        CycNum c = CycNum::scalar_in(p, Rational(invs % 2 ? -1 : 1));
        std::vector<int> expo(p, 0);
        bool dead = false;
        for (int u = 0; u < p; ++u) {
            const auto& [ec, k] = entry[u][perm[u]];
            if (is_zero(ec)) { dead = true; break; }
            c *= ec;
            ++expo[k];
        }
        if (dead) continue;
        auto it = acc.find(expo);
        if (it == acc.end())
            acc.emplace(std::move(expo), c);
        else
            it->second += c;
    } while (std::next_permutation(perm.begin(), perm.end()));

    MultiPoly<CycNum> out(p, MonomialOrder::grevlex);
    for (auto& [e, c] : acc) {
        if (is_zero(c)) continue;
        Monomial m(p);
        m.e = e;
        out += MultiPoly<CycNum>::term(p, MonomialOrder::grevlex, m, c);
    }
    return out;
}

// For p = 5 parameters on the conic AB + C^2 = 0 (with B != 0), the base
// locus is a quintic curve through (0 : 1 : t : -t : -1), t = -C/B = A/C.
inline std::vector<CycNum> conic_base_point(const ModuliPoint& pt) {
    auto abc = abc_coords(pt); // throws unless p = 5
    if (!is_zero(abc[0] * abc[1] + abc[2] * abc[2]))
        throw invalid_input("parameter point is not on the conic");
    if (is_zero(abc[1])) throw invalid_input("distinguished point needs B != 0");
    CycNum t = -abc[2] / abc[1];
    CycNum one = CycNum::scalar_in(5, Rational(1));
    return {CycNum::zero_in(5), one, t, -t, -one};
}

// --- distinguished p = 5 parameter points -----------------------------------

// The twelve (A:B:C) points carried by the conic AB + C^2 = 0 in the incidence
// analysis: two size-5 w-orbits plus (1:0:0) and (0:1:0).
inline std::vector<ModuliPoint> special_conic_points() {
    std::vector<ModuliPoint> pts;
    CycNum one = CycNum::scalar_in(5, Rational(1));
    CycNum u = CycNum::root_power(5, 2) + CycNum::root_power(5, 3); // w^2 + w^3
    CycNum v = CycNum::root_power(5, 1) + CycNum::root_power(5, 4); // w + w^4
    for (int k = 0; k < 5; ++k) {
        CycNum wk = CycNum::root_power(5, k), wmk = CycNum::root_power(5, -k);
        pts.push_back(abc_point(wk * u, wmk * v, one));
        pts.push_back(abc_point(wk * v, wmk * u, one));
    }
    pts.push_back(abc_point(one, CycNum::zero_in(5), CycNum::zero_in(5)));
    pts.push_back(abc_point(CycNum::zero_in(5), one, CycNum::zero_in(5)));
    return pts;
}

inline std::string to_string(const ModuliPoint& pt) {
    std::string s = "(";
    for (std::size_t i = 0; i < pt.a.size(); ++i) {
        if (i) s += " : ";
        s += to_string(pt.a[i]);
    }
    return s + ")";
}

} // namespace hclif
