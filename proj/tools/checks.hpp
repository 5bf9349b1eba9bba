#pragma once

// Named verification batches shared by the acceptance runner and the CLI
// `suite` command.  Every check recomputes a published or derived value and
// prints it next to the expectation, so a failure is directly actionable.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <hclif/char_series.hpp>
#include <hclif/clifford.hpp>
#include <hclif/cyclotomic.hpp>
#include <hclif/h4.hpp>
#include <hclif/heisenberg.hpp>
#include <hclif/hilbert.hpp>
#include <hclif/linalg.hpp>
#include <hclif/moduli.hpp>
#include <hclif/quad_algebra.hpp>

namespace hclif::checks {

struct CheckResult {
    std::string slug;
    bool pass = true;
    std::vector<std::string> lines;

    void expect(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "   ok  " : "  FAIL ") + what);
    }
    template <class A, class B>
    void expect_eq(const std::string& label, const A& want, const B& got) {
        std::ostringstream w, g;
        w << want;
        g << got;
        expect(w.str() == g.str(), label + ": expected " + w.str() + ", computed " + g.str());
    }
};

namespace detail {

inline std::string proj_key(int p, std::vector<CycNum> v) {
    std::size_t piv = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) {
            piv = i;
            break;
        }
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ":";
        s += piv < v.size() ? to_string(v[i] / v[piv]) : to_string(CycNum::zero_in(p));
    }
    return s + ")";
}

inline std::string point_key(const ModuliPoint& pt) { return proj_key(pt.p, normalize(pt).a); }

inline std::set<std::string> point_set(const std::vector<ModuliPoint>& pts) {
    std::set<std::string> keys;
    for (const auto& pt : pts) keys.insert(point_key(pt));
    return keys;
}

inline std::string join(const std::set<std::string>& keys) {
    std::string s = "{";
    bool first = true;
    for (const auto& k : keys) {
        if (!first) s += ", ";
        s += k;
        first = false;
    }
    return s + "}";
}

inline std::string join_int(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

// Deterministic small rationals for the sampled criteria (engine output is
// pinned by the standard; no distribution objects, which are not).
struct RatSampler {
    std::mt19937 rng;
    explicit RatSampler(unsigned seed) : rng(seed) {}
    Rational next() {
        long long num = static_cast<long long>(rng() % 19) - 9;
        long long den = static_cast<long long>(rng() % 6) + 1;
        return Rational(num, den);
    }
    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (r != 0) return r;
        }
    }
};

inline CycNum eval_discriminant(const ModuliPoint& pt) {
    return evaluate(discriminant_sum_form(), abc_coords(pt));
}

// The six degeneration lines in (A:B:C): C = 0 and C + w^m A + w^-m B for
// m = 0..4.  Returns the value of form `idx` at the point (idx 0..4 the
// w-lines, idx 5 the C = 0 line).
inline CycNum line_form_value(int idx, const std::vector<CycNum>& abc) {
    if (idx == 5) return abc[2];
    return abc[2] + CycNum::root_power(5, idx) * abc[0] + CycNum::root_power(5, -idx) * abc[1];
}

inline Mat<CycNum> identity_mat(int p, int n) {
    Mat<CycNum> m(n, n);
    for (auto& v : m.a) v = CycNum::zero_in(p);
    for (int i = 0; i < n; ++i) m(i, i) = CycNum::scalar_in(p, Rational(1));
    return m;
}

}  // namespace detail

// --- representation suite ----------------------------------------------------

inline CheckResult check_rep_identities() {
    CheckResult res{"rep-identities"};
    for (int p : {3, 5, 7}) {
        HeisenbergGroup G(p);
        bool ok = true;
        for (int i = 1; i < p; ++i) {
            auto M1 = rep_matrix_V(G, i, G.e1());
            auto M2 = rep_matrix_V(G, i, G.e2());
            auto Z = rep_matrix_V(G, i, G.z());
            auto I = detail::identity_mat(p, p);
            ok = ok && mat_pow(M1, p) == I && mat_pow(M2, p) == I;
            // the center acts by the scalar w^i
            Mat<CycNum> wI = I;
            for (auto& v : wI.a) v = v * CycNum::root_power(p, i);
            ok = ok && Z == wI;
            // e2 e1 = z^{-1} e1 e2 transported through the representation
            ok = ok && M2 * M1 == rep_matrix_V(G, i, G.inv(G.z())) * M1 * M2;
            // homomorphism spot checks
            for (const auto& [h, k] : {std::pair{G.make(1, 2, 0), G.make(0, 1, 2)},
                                       std::pair{G.make(2, 1, 1), G.make(1, 0, 1)}})
                ok = ok && rep_matrix_V(G, i, h) * rep_matrix_V(G, i, k) ==
                               rep_matrix_V(G, i, G.mul(h, k));
        }
        res.expect_eq("p=" + std::to_string(p) + " V_i defining-relation identities (i=1.." +
                          std::to_string(p - 1) + ")",
                      "all hold", ok ? "all hold" : "violated");
    }
    return res;
}

inline CheckResult check_rep_orthogonality() {
    CheckResult res{"rep-orthogonality"};
    for (int p : {3, 5, 7}) {
        HeisenbergGroup G(p);
        auto T = character_table(G);
        int bad = 0;
        for (std::size_t i = 0; i < T.chars.size(); ++i)
            for (std::size_t j = i; j < T.chars.size(); ++j) {
                CycNum ip = inner_product(T, T.chars[i], T.chars[j]);
                CycNum want = i == j ? CycNum(1) : CycNum(0);
                if (!(ip == want)) ++bad;
            }
        res.expect_eq("p=" + std::to_string(p) + " character Gram matrix (" +
                          std::to_string(T.chars.size()) + " irreducibles)",
                      "identity", bad == 0 ? "identity" : std::to_string(bad) + " mismatches");
    }
    return res;
}

inline CheckResult check_rep_tensor() {
    CheckResult res{"rep-tensor-rules"};
    for (int p : {3, 5, 7}) {
        HeisenbergGroup G(p);
        auto T = character_table(G);
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < T.names.size(); ++i) idx[T.names[i]] = static_cast<int>(i);
        const auto& chiV1 = T.chars[idx.at("V(1)")];

        bool step_ok = true;
        for (int i = 1; i <= p - 2; ++i) {
            auto f = pointwise_product(chiV1, T.chars[idx.at("V(" + std::to_string(i) + ")")]);
            auto m = decompose_integral(T, f);
            for (std::size_t k = 0; k < m.size(); ++k) {
                long long want =
                    static_cast<int>(k) == idx.at("V(" + std::to_string(i + 1) + ")") ? p : 0;
                step_ok = step_ok && m[k] == want;
            }
        }
        res.expect_eq("p=" + std::to_string(p) + " V (x) V_i = V_{i+1}^{+" + std::to_string(p) +
                          "} for i=1.." + std::to_string(p - 2),
                      "holds", step_ok ? "holds" : "violated");

        auto f = pointwise_product(chiV1, T.chars[idx.at("V(" + std::to_string(p - 1) + ")")]);
        auto m = decompose_integral(T, f);
        bool top_ok = true;
        for (std::size_t k = 0; k < m.size(); ++k) {
            bool is_w = T.names[k].rfind("W(", 0) == 0;
            top_ok = top_ok && m[k] == (is_w ? 1 : 0);
        }
        res.expect_eq("p=" + std::to_string(p) + " V (x) V_{p-1} = sum of all " +
                          std::to_string(p * p) + " one-dimensionals",
                      "holds", top_ok ? "holds" : "violated");
    }
    return res;
}

inline CheckResult check_rep_exterior() {
    CheckResult res{"rep-exterior-multiplicities"};
    for (int p : {3, 5, 7}) {
        HeisenbergGroup G(p);
        auto T = character_table(G);
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < T.names.size(); ++i) idx[T.names[i]] = static_cast<int>(i);
        auto ext = exterior_power_characters(G, T.chars[idx.at("V(1)")], p - 1);
        std::vector<long long> got, want;
        bool pure = true;
        for (int i = 1; i <= p - 1; ++i) {
            auto m = decompose_integral(T, ext[i]);
            long long binom = 1;
            for (int j = 1; j <= i; ++j) binom = binom * (p - j + 1) / j;
            want.push_back(binom / p);
            got.push_back(m[idx.at("V(" + std::to_string(i) + ")")]);
            for (std::size_t k = 0; k < m.size(); ++k)
                if (static_cast<int>(k) != idx.at("V(" + std::to_string(i) + ")"))
                    pure = pure && m[k] == 0;
        }
        std::ostringstream w, g;
        for (std::size_t i = 0; i < want.size(); ++i) w << (i ? "," : "") << want[i];
        for (std::size_t i = 0; i < got.size(); ++i) g << (i ? "," : "") << got[i];
        res.expect(pure && w.str() == g.str(),
                   "p=" + std::to_string(p) + " Lambda^i(V) = V_i^{binom(p,i)/p}: expected mults " +
                       w.str() + ", computed " + g.str() + (pure ? "" : " (impure)"));
    }
    return res;
}

// --- p = 5 base locus batteries ----------------------------------------------

inline CheckResult check_regular_elimination() {
    CheckResult res{"regular-elimination-p5"};
    detail::RatSampler S(20250819);
    std::vector<std::pair<Rational, Rational>> pts{{1, 1}};
    while (pts.size() < 6) {
        Rational a = S.next(), b = S.next();
        auto P = abc_point(CycNum(a), CycNum(b), CycNum(1));
        if (!is_zero(detail::eval_discriminant(P))) pts.emplace_back(a, b);
    }
    for (const auto& [a, b] : pts) {
        auto P = abc_point(CycNum(a), CycNum(b), CycNum(1));
        auto an = analyze_base_locus(P);
        bool empty = an.dim == -1;
        bool all_pure = an.pure_powers.size() == 5 &&
                        std::all_of(an.pure_powers.begin(), an.pure_powers.end(),
                                    [](int e) { return e >= 1; });
        res.expect(empty && all_pure,
                   "(a,b)=(" + a.str() + "," + b.str() +
                       "): expected empty locus with a pure power of every variable, computed " +
                       (empty ? "empty" : "nonempty") + " pure=" +
                       detail::join_int(an.pure_powers));
    }
    return res;
}

inline CheckResult check_discriminant_classes() {
    CheckResult res{"discriminant-classification"};
    detail::RatSampler S(424242);
    CycNum one = CycNum::scalar_in(5, Rational(1));

    struct Sample {
        ModuliPoint P;
        std::string klass;
        int dim;
        Integer deg;
        std::string series;        // empty string = don't pin the series
        std::vector<int> orbits;   // sentinel {-1} = don't pin the orbit list
    };
    std::vector<Sample> samples;

    // 6 generic points off every degeneration: empty locus
    while (samples.size() < 6) {
        auto P = abc_point(CycNum(S.next()), CycNum(S.next()), one);
        if (is_zero(detail::eval_discriminant(P))) continue;
        samples.push_back({P, "off-locus", -1, 0, "", {}});
    }
    // one point on each w-line, off the conic and the other lines: 5 points
    for (int m = 0; m < 5; ++m) {
        for (;;) {
            CycNum A = CycNum(S.next_nonzero());
            CycNum B = -CycNum::root_power(5, m) - CycNum::root_power(5, 2 * m) * A;
            auto P = abc_point(A, B, one);
            auto abc = abc_coords(P);
            bool clean = !is_zero(abc[0] * abc[1] + abc[2] * abc[2]);
            for (int k = 0; k < 6 && clean; ++k)
                if (k != m) clean = !is_zero(detail::line_form_value(k, abc));
            if (!clean) continue;
            samples.push_back({P, "line m=" + std::to_string(m), 0, 5,
                               "(1+4*t+5*t^2-5*t^4)/(1-t)", {1 + m}});
            break;
        }
    }
    // 3 points on the C = 0 line only: 5 points on the coordinate orbit
    while (samples.size() < 14) {
        Rational s = S.next_nonzero();
        auto P = abc_point(one, CycNum(s), CycNum::zero_in(5));
        auto abc = abc_coords(P);
        bool clean = true;
        for (int k = 0; k < 5; ++k) clean = clean && !is_zero(detail::line_form_value(k, abc));
        if (!clean) continue;
        samples.push_back({P, "C=0 only", 0, 5, "(1+4*t+5*t^2-5*t^4)/(1-t)", {0}});
    }
    // 4 points on the conic only: quintic curve
    while (samples.size() < 18) {
        Rational a = S.next_nonzero();
        auto P = abc_point(CycNum(a), CycNum(Rational(-1) / a), one);
        auto abc = abc_coords(P);
        bool clean = true;
        for (int k = 0; k < 5; ++k) clean = clean && !is_zero(detail::line_form_value(k, abc));
        if (!clean) continue;
        samples.push_back({P, "conic only", 1, 5, "(1+3*t+t^2)/(1-t)^2", {-1}});
    }
    // 2 double points: two lines meeting -> ten points
    samples.push_back({abc_point(one, -one, CycNum::zero_in(5)), "C=0 and m=0", 0, 10,
                       "(1+4*t+5*t^2)/(1-t)", {0, 1}});
    {
        CycNum w = CycNum::root(5);
        CycNum A = (pow(w, 4) - one) / (w - pow(w, 4));
        samples.push_back({abc_point(A, -one - A, one), "m=0 and m=1", 0, 10,
                           "(1+4*t+5*t^2)/(1-t)", {1, 2}});
    }

    for (const auto& smp : samples) {
        auto an = analyze_base_locus(smp.P);
        bool verdict = (an.dim == -1) == is_regular_point(smp.P);
        bool shape = an.dim == smp.dim;
        if (smp.dim != -1) shape = shape && an.degree == smp.deg;
        if (!smp.series.empty()) shape = shape && to_string(an.series) == smp.series;
        if (smp.orbits != std::vector<int>{-1}) shape = shape && an.verified_orbits == smp.orbits;
        std::string want = smp.dim == -1 ? "empty"
                                         : "dim " + std::to_string(smp.dim) + " deg " +
                                               smp.deg.str() +
                                               (smp.series.empty() ? "" : " " + smp.series);
        std::string got = an.dim == -1 ? "empty"
                                       : "dim " + std::to_string(an.dim) + " deg " +
                                             an.degree.str() + " " + to_string(an.series);
        res.expect(verdict && shape, smp.klass + " at " + detail::point_key(smp.P) +
                                         ": expected " + want + ", computed " + got +
                                         (verdict ? "" : " (closed-form verdict disagrees)"));
    }
    return res;
}

inline CheckResult check_hilbert_table() {
    CheckResult res{"hilbert-table-p5"};
    CycNum one = CycNum::scalar_in(5, Rational(1)), zero = CycNum::zero_in(5);

    auto a = analyze_base_locus(abc_point(one, CycNum(3), zero));
    res.expect_eq("(1:3:0) series", "(1+4*t+5*t^2-5*t^4)/(1-t)", to_string(a.series));

    auto b = analyze_base_locus(abc_point(one, -one, zero));
    res.expect_eq("(1:-1:0) series", "(1+4*t+5*t^2)/(1-t)", to_string(b.series));
    res.expect_eq("(1:-1:0) degree", Integer(10), b.degree);
    res.expect_eq("(1:-1:0) verified orbits (coordinate points + unit-pattern orbit)", "[0,1]",
                  detail::join_int(b.verified_orbits));
    bool eval_ok = b.verified_points.size() == 10;
    auto Pb = abc_point(one, -one, zero);
    for (const auto& z : b.verified_points) eval_ok = eval_ok && point_in_locus(Pb, z);
    res.expect_eq("(1:-1:0) ten points re-evaluated on all quadrics", "10 of 10",
                  (eval_ok ? "10" : std::to_string(b.verified_points.size())) + std::string(" of 10"));

    for (auto [A, B, name] : {std::tuple{one, zero, "(1:0:0)"}, std::tuple{zero, one, "(0:1:0)"}}) {
        auto P = abc_point(A, B, zero);
        auto an = analyze_base_locus(P);
        res.expect_eq(std::string(name) + " series", "(1+3*t+t^2)/(1-t)^2", to_string(an.series));
        std::set<std::pair<int, int>> want =
            is_zero(B) ? std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}
                       : std::set<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}};
        std::set<std::pair<int, int>> got(an.coordinate_lines.begin(), an.coordinate_lines.end());
        bool lines_ok = got == want;
        for (const auto& [u, v] : got) {
            std::vector<CycNum> eu(5, zero), ev(5, zero);
            eu[u] = one;
            ev[v] = one;
            lines_ok = lines_ok && line_in_locus(P, eu, ev);
        }
        std::string wl, gl;
        for (const auto& [u, v] : want) wl += std::to_string(u) + std::to_string(v) + " ";
        for (const auto& [u, v] : got) gl += std::to_string(u) + std::to_string(v) + " ";
        res.expect(lines_ok, std::string(name) + " five lines on all quadrics: expected " + wl +
                                 ", computed " + gl);
    }
    return res;
}

inline CheckResult check_conic_curve() {
    CheckResult res{"conic-curve-p5"};
    CycNum one = CycNum::scalar_in(5, Rational(1));
    std::vector<std::pair<CycNum, CycNum>> params{
        {CycNum(2), CycNum(Rational(-1, 2))},
        {CycNum(1), CycNum(-1)},
        {CycNum(3), CycNum(Rational(-1, 3))},
        {CycNum::root(5), -CycNum::root_power(5, 4)}};
    for (const auto& [a, b] : params) {
        auto P = abc_point(a, b, one);
        std::string tag = "(a,b)=(" + to_string(a) + "," + to_string(b) + ")";
        auto O = conic_base_point(P);
        std::vector<CycNum> wantO{CycNum::zero_in(5), one, a, -a, -one};
        res.expect_eq(tag + " distinguished point", detail::proj_key(5, wantO),
                      detail::proj_key(5, O));
        auto orb = monomial_orbit(5, O);
        bool on = true;
        for (const auto& z : orb) on = on && point_in_locus(P, z);
        res.expect_eq(tag + " orbit of " + std::to_string(orb.size()) + " points on all quadrics",
                      "yes", on ? "yes" : "no");
        auto an = analyze_base_locus(P);
        res.expect_eq(tag + " series", "(1+3*t+t^2)/(1-t)^2", to_string(an.series));
        res.expect_eq(tag + " dim/degree", "1/5",
                      std::to_string(an.dim) + "/" + an.degree.str());
    }
    return res;
}

inline CheckResult check_special_points() {
    CheckResult res{"special-points-p5"};
    auto sp = special_conic_points();
    res.expect_eq("count of distinguished conic points", 12, sp.size());
    std::vector<int> hits(6, 0);
    bool conic_ok = true, line_ok = true;
    for (const auto& P : sp) {
        auto abc = abc_coords(P);
        conic_ok = conic_ok && is_zero(abc[0] * abc[1] + abc[2] * abc[2]);
        int on = 0;
        for (int k = 0; k < 6; ++k)
            if (is_zero(detail::line_form_value(k, abc))) {
                ++on;
                ++hits[k];
            }
        line_ok = line_ok && on == 1;
    }
    res.expect_eq("all 12 on the conic", "yes", conic_ok ? "yes" : "no");
    res.expect_eq("each on exactly one of the 6 lines", "yes", line_ok ? "yes" : "no");
    res.expect_eq("points per line", "[2,2,2,2,2,2]", detail::join_int(hits));
    return res;
}

// --- p = 3 batteries -----------------------------------------------------------

inline CheckResult check_p3_moduli() {
    CheckResult res{"moduli-action-p3"};
    CycNum w = CycNum::root(3), one = CycNum::scalar_in(3, Rational(1));
    auto U = sl2_U(3), V = sl2_V(3), VU = sl2_mul(V, U);

    bool mob_ok = true;
    for (const auto& t : {CycNum(0), CycNum(1), CycNum(2), w, CycNum(2) * w * w, CycNum(-2)}) {
        auto img = twist_action(U, p3_point(t));
        auto want = proj_equal(p3_point(t), p3_point(-one))
                        ? p3_infinity()
                        : p3_point((CycNum(2) - t) / (t + one));
        mob_ok = mob_ok && proj_equal(img, want);
    }
    mob_ok = mob_ok && proj_equal(twist_action(U, p3_infinity()), p3_point(-one));
    res.expect_eq("U acts by t -> (-t+2)/(t+1), inf -> -1", "holds",
                  mob_ok ? "holds" : "violated");

    bool vu_ok = proj_equal(twist_action(VU, p3_infinity()), p3_infinity());
    for (const auto& t : {CycNum(1), CycNum(-1), CycNum(2), w, CycNum(2) * w})
        vu_ok = vu_ok && proj_equal(twist_action(VU, p3_point(t)), p3_point(w * w * t));
    res.expect_eq("VU acts by t -> w^2 t (inf fixed)", "holds", vu_ok ? "holds" : "violated");

    auto orb0 = detail::point_set(moduli_orbit(p3_point(CycNum(0))));
    auto want0 = detail::point_set({p3_point(CycNum(0)), p3_point(CycNum(2)),
                                    p3_point(CycNum(2) * w), p3_point(CycNum(2) * w * w)});
    res.expect_eq("orbit(0)", detail::join(want0), detail::join(orb0));

    auto orbi = detail::point_set(moduli_orbit(p3_infinity()));
    auto wanti = detail::point_set(
        {p3_infinity(), p3_point(-one), p3_point(-w), p3_point(-w * w)});
    res.expect_eq("orbit(inf)", detail::join(wanti), detail::join(orbi));
    return res;
}

inline CheckResult check_p3_dual_variety() {
    CheckResult res{"dual-variety-p3"};
    CycNum w = CycNum::root(3), one = CycNum::scalar_in(3, Rational(1));
    auto an = analyze_base_locus(p3_point(-one));
    std::set<std::string> got;
    for (const auto& z : an.verified_points) got.insert(detail::proj_key(3, z));
    std::set<std::string> want{detail::proj_key(3, {one, one, one}),
                               detail::proj_key(3, {one, w, w * w}),
                               detail::proj_key(3, {one, w * w, w})};
    res.expect_eq("base points at t=-1", detail::join(want), detail::join(got));
    res.expect_eq("t=-1 locus dim/degree", "0/3",
                  std::to_string(an.dim) + "/" + an.degree.str());
    return res;
}

// --- quantum orbit, fixed points, duality --------------------------------------

inline CheckResult check_quantum(int p) {
    CheckResult res{"quantum-p" + std::to_string(p)};
    HeisenbergGroup G(p);
    auto qs = quantum_points(p);
    res.expect_eq("count of quantum points", p + 1, qs.size());

    if (p == 5) {
        CycNum one = CycNum::scalar_in(5, Rational(1)), zero = CycNum::zero_in(5);
        std::vector<ModuliPoint> want{abc_point(zero, zero, one)};
        for (int k = 0; k < 5; ++k)
            want.push_back(abc_point(CycNum(2) * CycNum::root_power(5, k),
                                     CycNum(2) * CycNum::root_power(5, -k), one));
        res.expect_eq("(A:B:C) displays", detail::join(detail::point_set(want)),
                      detail::join(detail::point_set(qs)));
    }

    // breadth-first over the two generators, tracking the group element so the
    // eigenvector frame of each orbit member can be rebuilt from the base
    std::vector<CycNum> e0(1 + (p - 1) / 2, CycNum::zero_in(p));
    e0[0] = CycNum::scalar_in(p, Rational(1));
    auto base = make_moduli_point(p, e0);
    std::map<std::string, SL2> orbit{{detail::point_key(base), sl2_identity(p)}};
    std::vector<std::pair<ModuliPoint, SL2>> queue{{base, sl2_identity(p)}};
    while (!queue.empty()) {
        auto [P, g] = queue.back();
        queue.pop_back();
        for (const auto& step : {sl2_U(p), sl2_V(p)}) {
            auto img = twist_action(step, P);
            auto key = detail::point_key(img);
            if (!orbit.count(key)) {
                auto cum = sl2_mul(g, step);  // right action composes on the right
                orbit.emplace(key, cum);
                queue.emplace_back(img, cum);
            }
        }
    }
    std::set<std::string> orbit_keys;
    for (const auto& [k, g] : orbit) orbit_keys.insert(k);
    res.expect_eq("orbit of the base quantum point equals the solver output",
                  detail::join(detail::point_set(qs)), detail::join(orbit_keys));

    bool span_ok = true;
    for (const auto& [key, g] : orbit) {
        auto tw = twist_action_full(G, g, base);
        span_ok = span_ok && detail::point_key(tw.image) == key;
        auto Yi = inverse(tw.y_basis);
        RowBasis<CycNum> span(p * p);
        for (const auto& r : presentation_relations(tw.image)) span.add(r);
        for (int i = 0; i < p && span_ok; ++i)
            for (int j = i + 1; j < p && span_ok; ++j) {
                Mat<CycNum> T(p, p);
                T.a = anticommutator_rel(p, i, j);
                span_ok = span_ok && span.contains((Yi * T * transpose(Yi)).a);
            }
    }
    res.expect_eq("every member's relations are anticommutators in its eigenvector frame",
                  "yes", span_ok ? "yes" : "no");
    return res;
}

inline CheckResult check_fixed_points() {
    CheckResult res{"fixed-points"};
    for (int p : {5, 7}) {
        HeisenbergGroup G(p);
        bool fixed_ok = true, set_ok = true;
        for (int k = 0; k < p; ++k) {
            auto h = G.mul(G.inv(G.e1(1)), G.e2(k));
            std::vector<CycNum> v(p);
            for (int i = 0; i < p; ++i)
                v[i] = CycNum::root_power(p, static_cast<long long>(k) * i * (i + 1) / 2);
            auto M = rep_matrix_V(G, 1, h);
            auto Mv = mat_vec(M, v);
            // projective fixedness: Mv proportional to v
            CycNum ratio = CycNum::zero_in(p);
            bool prop = true;
            for (int i = 0; i < p; ++i) {
                if (is_zero(v[i])) {
                    prop = prop && is_zero(Mv[i]);
                    continue;
                }
                CycNum r = Mv[i] / v[i];
                if (is_zero(ratio))
                    ratio = r;
                else
                    prop = prop && r == ratio;
            }
            fixed_ok = fixed_ok && prop;

            std::set<std::string> claimed;
            for (const auto& z : monomial_orbit(p, v)) claimed.insert(detail::proj_key(p, z));
            std::set<std::string> got;
            for (const auto& z : projective_fixed_points(G, 1, h))
                got.insert(detail::proj_key(p, z));
            set_ok = set_ok && claimed == got && got.size() == static_cast<std::size_t>(p);
        }
        res.expect_eq("p=" + std::to_string(p) +
                          " pattern point w^{k i(i+1)/2} fixed by e1^-1 e2^k for all k",
                      "holds", fixed_ok ? "holds" : "violated");
        res.expect_eq("p=" + std::to_string(p) + " full fixed sets equal the pattern orbits",
                      "holds", set_ok ? "holds" : "violated");
    }
    return res;
}

inline CheckResult check_duality_k5() {
    CheckResult res{"duality-k5-p5"};
    auto qs = quantum_points(5);
    res.expect_eq("quantum points", 6, qs.size());

    std::vector<std::vector<CycNum>> normals;
    std::set<std::string> normal_keys;
    for (const auto& Q : qs) {
        auto d = duality_map(Q);
        normals.push_back(d.hyperplane_normal);
        normal_keys.insert(detail::proj_key(5, d.hyperplane_normal));
    }
    CycNum one = CycNum::scalar_in(5, Rational(1)), zero = CycNum::zero_in(5);
    std::set<std::string> want_normals{detail::proj_key(5, {one, zero, zero})};
    for (int m = 0; m < 5; ++m)
        want_normals.insert(detail::proj_key(
            5, {one, CycNum::root_power(5, -m), CycNum::root_power(5, m)}));
    res.expect_eq("six degeneration hyperplanes", detail::join(want_normals),
                  detail::join(normal_keys));

    auto sp = special_conic_points();
    auto cands = candidate_orbits(5);
    bool incidence_ok = true, orbit_ok = true, k5_ok = true;
    std::set<int> orbit_ids;
    for (const auto& n : normals) {
        std::vector<ModuliPoint> on_line;
        for (const auto& P : sp) {
            CycNum acc = CycNum::zero_in(5);
            for (int i = 0; i < 3; ++i) acc += n[i] * P.a[i];
            if (is_zero(acc)) on_line.push_back(P);
        }
        incidence_ok = incidence_ok && on_line.size() == 2;
        if (on_line.size() != 2) continue;

        // the shared vertex orbit: the unique candidate orbit inside both loci
        int vid = -1;
        for (std::size_t c = 0; c < cands.size(); ++c) {
            bool inside = true;
            for (const auto& P : on_line)
                for (const auto& z : cands[c]) inside = inside && point_in_locus(P, z);
            if (inside) {
                orbit_ok = orbit_ok && vid == -1;
                vid = static_cast<int>(c);
            }
        }
        orbit_ok = orbit_ok && vid >= 0;
        if (vid < 0) continue;
        orbit_ids.insert(vid);
        const auto& V = cands[vid];
        orbit_ok = orbit_ok && V.size() == 5;

        // each conic point contributes 5 vertex-pair lines; together all 10
        std::set<std::pair<int, int>> all, first;
        for (std::size_t s = 0; s < on_line.size(); ++s) {
            std::set<std::pair<int, int>> edges;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (line_in_locus(on_line[s], V[i], V[j])) edges.insert({i, j});
            k5_ok = k5_ok && edges.size() == 5;
            if (s == 0)
                first = edges;
            else
                for (const auto& e : first) k5_ok = k5_ok && !edges.count(e);
            for (const auto& e : edges) all.insert(e);
        }
        k5_ok = k5_ok && all.size() == 10;
    }
    res.expect_eq("each hyperplane meets the conic in exactly 2 of the 12 points", "yes",
                  incidence_ok ? "yes" : "no");
    res.expect_eq("each pair shares one 5-point vertex orbit; all 6 orbits used", "yes",
                  (orbit_ok && orbit_ids.size() == 6) ? "yes" : "no");
    res.expect_eq("5 + 5 disjoint lines through the vertices form the complete graph", "yes",
                  k5_ok ? "yes" : "no");
    return res;
}

// --- character series and determinant ------------------------------------------

inline CheckResult check_char_series_table() {
    CheckResult res{"char-series-p5"};
    HeisenbergGroup G(5);
    CycNum one = CycNum::scalar_in(5, Rational(1));
    auto alg = clifford_algebra(make_moduli_point(5, {one, one, one}));
    GradedAlgebra A(alg);
    std::string dims;
    for (int d = 0; d <= 4; ++d) dims += (d ? "," : "") + std::to_string(A.dim(d));
    res.expect_eq("graded dimensions 0..4 at (a,b)=(1,1)", "1,5,15,35,70", dims);

    auto cs = character_series(A, G, 4);
    bool central_ok = true, noncentral_ok = true;
    for (std::size_t c = 0; c < cs.reps.size(); ++c) {
        const auto& h = cs.reps[c];
        if (h.s == 0 && h.t == 0) {
            auto want = predicted_series(SeriesModel::clifford_algebra, G, h, 4);
            for (int n = 0; n <= 4; ++n) central_ok = central_ok && cs.coeff[c][n] == want[n];
        } else {
            for (int n = 1; n <= 4; ++n) noncentral_ok = noncentral_ok && is_zero(cs.coeff[c][n]);
        }
    }
    res.expect_eq("central rows match 1/(1-w^k t)^5 coefficients", "yes",
                  central_ok ? "yes" : "no");
    res.expect_eq("non-central rows vanish in degrees 1..4", "yes", noncentral_ok ? "yes" : "no");
    return res;
}

inline CheckResult check_koszul_residuals() {
    CheckResult res{"koszul-residuals"};
    HeisenbergGroup G(5);
    CycNum one = CycNum::scalar_in(5, Rational(1));

    auto alg = clifford_algebra(make_moduli_point(5, {one, one, one}));
    GradedAlgebra A(alg), B(koszul_dual(alg));
    auto rows = koszul_identity_residuals(A, B, G, 4);
    bool zero_ok = true;
    for (const auto& row : rows)
        for (const auto& v : row) zero_ok = zero_ok && is_zero(v);
    res.expect_eq("identity residuals at (a,b)=(1,1) through degree 4", "all zero",
                  zero_ok ? "all zero" : "nonzero");

    auto alg2 = clifford_algebra(abc_point(one, CycNum(3), CycNum::zero_in(5)));
    GradedAlgebra A2(alg2), B2(koszul_dual(alg2));
    auto rows2 = koszul_identity_residuals(A2, B2, G, 5);
    int first_bad = -1;
    for (int n = 0; n <= 5 && first_bad < 0; ++n)
        for (const auto& row : rows2)
            if (!is_zero(row[n])) {
                first_bad = n;
                break;
            }
    res.expect(first_bad >= 1 && first_bad <= 5,
               "identity fails by degree 5 at (1:3:0): expected a nonzero residual, computed " +
                   (first_bad < 0 ? std::string("none through degree 5")
                                  : "first at degree " + std::to_string(first_bad)));
    return res;
}

inline CheckResult check_hypothetical_expansion() {
    CheckResult res{"hypothetical-expansion"};
    std::vector<CycNum> numer{CycNum(1), CycNum(1)};
    std::vector<CycNum> denom{CycNum(1), CycNum(-4), CycNum(5), CycNum(0), CycNum(-5)};
    auto got = series_quotient(numer, denom, 5);
    std::string g;
    for (std::size_t i = 0; i < got.size(); ++i) g += (i ? "," : "") + to_string(got[i]);
    res.expect_eq("(1+t)/(1-4t+5t^2-5t^4) expands to", "1,5,15,35,70,130", g);
    return res;
}

inline CheckResult check_det_form_p3() {
    CheckResult res{"det-form-p3"};
    auto rep = det_quadratic_form(p3_point(CycNum(0)));
    Monomial m(3);
    m.e = {1, 1, 1};
    auto want =
        MultiPoly<CycNum>::term(3, MonomialOrder::grevlex, m, CycNum::scalar_in(3, Rational(8)));
    res.expect_eq("det at the quantum plane", "8*s0*s1*s2",
                  rep.det == want ? "8*s0*s1*s2" : "different polynomial");
    res.expect_eq("leading coefficient 2^3 + f(0) with f(0)=0", "8", to_string(rep.leading));

    detail::RatSampler S(7321);
    bool triv = rep.trivial;
    for (int i = 0; i < 10; ++i) {
        auto r = det_quadratic_form(p3_point(CycNum(S.next())));
        triv = triv && r.trivial;
    }
    res.expect_eq("group action on det is trivial at 10 random points", "yes",
                  triv ? "yes" : "no");
    return res;
}

inline CheckResult check_det_form_p5() {
    CheckResult res{"det-form-p5"};
    CycNum one = CycNum::scalar_in(5, Rational(1));
    auto rep = det_quadratic_form(make_moduli_point(5, {one, one, one}));
    res.expect_eq("invariance of det at (a,b)=(1,1)", "exactly fixed",
                  rep.trivial ? "exactly fixed" : "moved");
    res.expect_eq("leading coefficient 2^5 + f(1,1), so f(1,1) = -16", "16",
                  to_string(rep.leading));

    auto base = det_quadratic_form(make_moduli_point(
        5, {one, CycNum::zero_in(5), CycNum::zero_in(5)}));
    res.expect_eq("leading coefficient at the base quantum point (f(0)=0)", "32",
                  to_string(base.leading));
    res.expect_eq("quantum det is the single monomial 32*s0..s4", "1 term",
                  std::to_string(base.det.terms.size()) + " term" +
                      (base.det.terms.size() == 1 ? "" : "s"));
    return res;
}

inline CheckResult check_h4() {
    CheckResult res{"h4-exclusion"};
    auto r = h4_family_check();
    res.expect_eq("pair/square tensors independent", "yes",
                  r.anticommutator_basis_independent ? "yes" : "no");
    res.expect_eq("odd-separation pairs admit no member", "none",
                  r.odd_pairs_forced_zero ? "none" : "found");
    res.expect_eq("even-separation ansatz solutions", "only zero",
                  r.even_ansatz_only_zero ? "only zero" : "nonzero family");
    res.expect_eq("mixed gamma-family squares are never perfect squares", "yes",
                  r.mixed_family_not_square ? "yes" : "no");
    res.expect_eq("sign-commutative member exists", "yes",
                  r.quantum_span_stable ? "yes" : "no");
    res.expect_eq("conclusion: the constraint system forces the quantum member", "yes",
                  r.only_quantum() ? "yes" : "no");
    return res;
}

// --- registry -------------------------------------------------------------------

struct CheckEntry {
    std::string slug;
    int criterion;
    std::vector<std::string> suites;
    std::function<CheckResult()> run;
};

inline const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> entries{
        {"rep-identities", 1, {"p7-general"}, check_rep_identities},
        {"rep-orthogonality", 1, {"p7-general"}, check_rep_orthogonality},
        {"rep-tensor-rules", 1, {"p7-general"}, check_rep_tensor},
        {"rep-exterior-multiplicities", 1, {"p7-general"}, check_rep_exterior},
        {"regular-elimination-p5", 2, {"p5-paper"}, check_regular_elimination},
        {"discriminant-classification", 3, {"p5-paper"}, check_discriminant_classes},
        {"hilbert-table-p5", 4, {"p5-paper"}, check_hilbert_table},
        {"conic-curve-p5", 5, {"p5-paper"}, check_conic_curve},
        {"special-points-p5", 5, {"p5-paper"}, check_special_points},
        {"moduli-action-p3", 6, {"p3-paper"}, check_p3_moduli},
        {"dual-variety-p3", 6, {"p3-paper"}, check_p3_dual_variety},
        {"quantum-p3", 7, {"p3-paper"}, [] { return check_quantum(3); }},
        {"quantum-p5", 7, {"p5-paper"}, [] { return check_quantum(5); }},
        {"quantum-p7", 7, {"p7-general"}, [] { return check_quantum(7); }},
        {"fixed-points", 8, {"p7-general"}, check_fixed_points},
        {"duality-k5-p5", 9, {"p5-paper"}, check_duality_k5},
        {"char-series-p5", 10, {"charseries"}, check_char_series_table},
        {"koszul-residuals", 10, {"koszul"}, check_koszul_residuals},
        {"hypothetical-expansion", 10, {"charseries"}, check_hypothetical_expansion},
        {"det-form-p3", 11, {"p3-paper"}, check_det_form_p3},
        {"det-form-p5", 11, {"p5-paper"}, check_det_form_p5},
        {"h4-exclusion", 12, {"p7-general"}, check_h4},
    };
    return entries;
}

inline std::vector<std::string> suite_names() {
    return {"p3-paper", "p5-paper", "p7-general", "charseries", "koszul"};
}

}  // namespace hclif::checks
