#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hclif/clifford.hpp"
#include "hclif/heisenberg.hpp"

using namespace hclif;

namespace {

CycNum cyc(int p, long long v) { return CycNum::scalar_in(p, Rational(v)); }

struct XorShift {
    unsigned long long s;
    explicit XorShift(unsigned long long seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long small(int lo, int hi) { return lo + static_cast<long long>(next() % (hi - lo + 1)); }
};

CycNum random_cyc(XorShift& rng, int p) {
    CycNum x = CycNum::zero_in(p);
    for (int i = 0; i < p - 1; ++i) x += CycNum::root_power(p, i) * CycNum(Rational(rng.small(-2, 2)));
    return x;
}

std::vector<CycNum> random_vec(XorShift& rng, int p) {
    std::vector<CycNum> z(p);
    for (auto& c : z) c = random_cyc(rng, p);
    return z;
}

ModuliPoint rand_point(XorShift& rng, int p) {
    const int h = (p - 1) / 2;
    while (true) {
        std::vector<CycNum> a(h + 1);
        bool any = false;
        for (auto& c : a) {
            c = cyc(p, rng.small(-3, 3));
            if (!is_zero(c)) any = true;
        }
        if (any) return make_moduli_point(p, a);
    }
}

int relation_rank(const std::vector<std::vector<CycNum>>& rels) {
    if (rels.empty()) return 0;
    RowBasis<CycNum> rb(static_cast<int>(rels[0].size()));
    for (const auto& r : rels) rb.add(r);
    return rb.rank();
}

} // namespace

TEST_CASE("parameter points: construction and coordinates") {
    auto pt = make_moduli_point(5, {CycNum(1), CycNum(2), CycNum(3)});
    CHECK(pt.a[0].p == 5);
    CHECK_THROWS_AS(make_moduli_point(5, {CycNum(0), CycNum(0), CycNum(0)}), invalid_input);
    CHECK_THROWS_AS(make_moduli_point(5, {CycNum(1), CycNum(2)}), invalid_input);
    CHECK_THROWS_AS(make_moduli_point(4, {CycNum(1), CycNum(2)}), invalid_input);
    CHECK_THROWS_AS(make_moduli_point(5, {CycNum::root(7), CycNum(0), CycNum(0)}), invalid_input);

    auto q = abc_point(CycNum(3), CycNum(-1), CycNum(2)); // (A:B:C) = (3:-1:2)
    auto abc = abc_coords(q);
    CHECK(abc[0] == cyc(5, 3));
    CHECK(abc[1] == cyc(5, -1));
    CHECK(abc[2] == cyc(5, 2));
    CHECK(q.a[0] == cyc(5, 2)); // a_0 = C

    CHECK(proj_equal(pt, make_moduli_point(5, {CycNum(2), CycNum(4), CycNum(6)})));
    CHECK_FALSE(proj_equal(pt, q));
    auto n = normalize(make_moduli_point(5, {CycNum(0), CycNum(3), CycNum(6)}));
    CHECK(n.a[0] == cyc(5, 0));
    CHECK(n.a[1] == cyc(5, 1));
    CHECK(n.a[2] == cyc(5, 2));

    CHECK(fold_distance(5, 1) == 1);
    CHECK(fold_distance(5, 4) == 1);
    CHECK(fold_distance(5, 2) == 2);
    CHECK(fold_distance(5, 3) == 2);
    CHECK(fold_distance(5, 0) == 0);
    CHECK(fold_distance(7, 5) == 2);
}

TEST_CASE("relation span has dimension p(p-1)/2 at every sampled point") {
    XorShift rng(401);
    for (int p : {3, 5, 7}) {
        const int expect = p * (p - 1) / 2;
        // assorted degenerate corners
        std::vector<ModuliPoint> pts;
        const int h = (p - 1) / 2;
        for (int i = 0; i <= h; ++i) {
            std::vector<CycNum> a(h + 1, cyc(p, 0));
            a[i] = cyc(p, 1);
            pts.push_back(make_moduli_point(p, a));
        }
        for (int trial = 0; trial < 4; ++trial) pts.push_back(rand_point(rng, p));
        {
            std::vector<CycNum> a(h + 1, cyc(p, 1));
            a[0] = cyc(p, 0); // a_0 = 0 with everything else alive
            pts.push_back(make_moduli_point(p, a));
        }
        for (const auto& pt : pts) {
            INFO("p=" << p << " at " << to_string(pt));
            CHECK(relation_rank(presentation_relations(pt)) == expect);
        }
    }
}

TEST_CASE("cross relations are consequences of the main family when a_0 != 0") {
    XorShift rng(402);
    for (int p : {5, 7}) {
        for (int trial = 0; trial < 3; ++trial) {
            auto pt = rand_point(rng, p);
            if (is_zero(pt.a[0])) pt.a[0] = cyc(p, 1);
            const int h = (p - 1) / 2;
            const int inv2 = inv_mod_p(2, p);
            RowBasis<CycNum> main_span(p * p);
            for (int i = 1; i <= h; ++i)
                for (int m = 0; m < p; ++m)
                    main_span.add(scaled_sum(pt.a[0], anticommutator_rel(p, m, m + i), -pt.a[i],
                                             square_rel(p, m + i * inv2)));
            for (int k = 0; k < p; ++k)
                for (int i = 1; i <= h; ++i)
                    for (int j = i + 1; j <= h; ++j) {
                        auto cross =
                            scaled_sum(pt.a[i], anticommutator_rel(p, k - j * inv2, k + j * inv2),
                                       -pt.a[j], anticommutator_rel(p, k - i * inv2, k + i * inv2));
                        CHECK(main_span.contains(cross));
                    }
        }
    }
}

TEST_CASE("quadrics match the symmetric matrices") {
    XorShift rng(403);
    for (int p : {3, 5, 7}) {
        auto pt = rand_point(rng, p);
        for (int k = 0; k < p; ++k) {
            auto M = form_matrix(pt, k);
            CHECK(M == transpose(M));
            // one nonzero entry per row, on the anti-diagonal u+v = 2k
            for (int u = 0; u < p; ++u)
                for (int v = 0; v < p; ++v)
                    if (mod_p(u + v - 2 * k, p) != 0) CHECK(is_zero(M(u, v)));
            auto q = base_quadric(pt, k);
            for (int trial = 0; trial < 3; ++trial) {
                auto z = random_vec(rng, p);
                CHECK(evaluate(q, z) == polar_value(pt, k, z, z));
            }
        }
    }
}

TEST_CASE("frozen quadric shape at p = 5") {
    // q_0 = 2 a_0 z_0^2 + 2 a_1 z_2 z_3 + 2 a_2 z_1 z_4
    auto pt = make_moduli_point(5, {CycNum(1), CycNum(7), CycNum(11)});
    auto q = base_quadric(pt, 0);
    auto term_coeff = [&](std::vector<int> e) {
        Monomial m(5);
        m.e = e;
        for (const auto& t : q.terms)
            if (t.first.e == e) return t.second;
        return CycNum::zero_in(5);
    };
    CHECK(term_coeff({2, 0, 0, 0, 0}) == cyc(5, 2));
    CHECK(term_coeff({0, 0, 1, 1, 0}) == cyc(5, 14));
    CHECK(term_coeff({0, 1, 0, 0, 1}) == cyc(5, 22));
    CHECK(q.terms.size() == 3);
}

TEST_CASE("graded dimensions at regular points follow the polynomial-ring count") {
    auto A3 = GradedAlgebra(clifford_algebra(p3_point(CycNum(1))));
    std::vector<long long> want3{1, 3, 6, 10, 15, 21};
    for (int d = 0; d < 6; ++d) CHECK(A3.dim(d) == want3[d]);

    auto A3b = GradedAlgebra(clifford_algebra(p3_point(CycNum(2) * CycNum::root(3))));
    for (int d = 0; d < 5; ++d) CHECK(A3b.dim(d) == want3[d]);
}

TEST_CASE("squares-only degeneration has free-monoid growth") {
    // at (0:1) for p=3 the relations reduce to the three squares
    auto A = GradedAlgebra(clifford_algebra(p3_infinity()));
    CHECK(A.dim(0) == 1);
    for (int d = 1; d <= 6; ++d) CHECK(A.dim(d) == 3LL * (1LL << (d - 1)));
}

TEST_CASE("koszul dual at regular points is exterior-sized and residuals vanish") {
    {
        auto alg = clifford_algebra(p3_point(CycNum(1)));
        auto dual = koszul_dual(alg);
        GradedAlgebra D(dual);
        std::vector<long long> want{1, 3, 3, 1, 0, 0};
        for (int d = 0; d < 6; ++d) CHECK(D.dim(d) == want[d]);
        GradedAlgebra A(alg);
        auto res = koszul_numeric_residuals(A, D, 5);
        for (int nn = 1; nn <= 5; ++nn) CHECK(res[nn] == 0);
    }
    {
        auto pt = make_moduli_point(5, {CycNum(1), CycNum(1), CycNum(1)});
        auto alg = clifford_algebra(pt);
        auto dual = koszul_dual(alg);
        GradedAlgebra A(alg), D(dual);
        std::vector<long long> wantA{1, 5, 15, 35, 70, 126};
        for (int d = 0; d <= 5; ++d) CHECK(A.dim(d) == wantA[d]);
        std::vector<long long> wantD{1, 5, 10, 10, 5, 1, 0};
        for (int d = 0; d <= 6; ++d) CHECK(D.dim(d) == wantD[d]);
        auto res = koszul_numeric_residuals(A, D, 5);
        for (int nn = 1; nn <= 5; ++nn) CHECK(res[nn] == 0);
    }
}

TEST_CASE("the symmetry group preserves the relation space") {
    HeisenbergGroup G3(3), G5(5);
    for (const auto& pt : {p3_point(CycNum(1)), p3_point(CycNum(-1)), p3_infinity()}) {
        auto alg = clifford_algebra(pt);
        for (const auto& h : G3.class_reps()) CHECK(preserves_relations(alg, rep_matrix_V(G3, 1, h)));
    }
    for (const auto& pt : {make_moduli_point(5, {CycNum(1), CycNum(1), CycNum(1)}),
                           abc_point(CycNum(1), CycNum(3), CycNum(0))}) {
        auto alg = clifford_algebra(pt);
        for (const auto& h : G5.class_reps()) CHECK(preserves_relations(alg, rep_matrix_V(G5, 1, h)));
    }
}

TEST_CASE("equivariant koszul residuals vanish for the p=5 algebra") {
    HeisenbergGroup G(5);
    auto pt = make_moduli_point(5, {CycNum(1), CycNum(1), CycNum(1)});
    auto alg = clifford_algebra(pt);
    auto dual = koszul_dual(alg);
    GradedAlgebra A(alg), D(dual);
    for (const auto& h : {G.z(), G.e1(), G.make(1, 1, 1)}) {
        auto g = rep_matrix_V(G, 1, h);
        for (int nn = 1; nn <= 3; ++nn)
            CHECK(is_zero(koszul_equivariant_residual(A, D, nn, g, contragredient(g))));
    }
}

TEST_CASE("base locus analysis: p = 3 panorama") {
    // t = 1: regular, empty locus
    auto reg = analyze_base_locus(p3_point(CycNum(1)));
    CHECK(reg.dim == -1);
    CHECK_FALSE(reg.pure_powers.empty());
    CHECK(reg.verified_orbits.empty());

    // t = -1: three points, the orbit of (1:1:1)
    auto a = analyze_base_locus(p3_point(CycNum(-1)));
    CHECK(a.dim == 0);
    CHECK(a.degree == 3);
    REQUIRE(a.verified_orbits.size() == 1);
    CHECK(a.verified_points.size() == 3);
    bool has_ones = false;
    for (const auto& z : a.verified_points)
        if (z[0] == cyc(3, 1) && z[1] == cyc(3, 1) && z[2] == cyc(3, 1)) has_ones = true;
    CHECK(has_ones);

    // t = -w: still three points, now on a twisted pattern orbit
    auto b = analyze_base_locus(p3_point(-CycNum::root(3)));
    CHECK(b.dim == 0);
    CHECK(b.degree == 3);
    CHECK(b.verified_orbits.size() == 1);

    // t = infinity: the coordinate points
    auto c = analyze_base_locus(p3_infinity());
    CHECK(c.dim == 0);
    CHECK(c.degree == 3);
    REQUIRE(c.verified_orbits.size() == 1);
    CHECK(c.verified_orbits[0] == 0);
}

TEST_CASE("base locus analysis: p = 5 coordinate-line degenerations") {
    // (1:0:0): ideal is (z_{i-1} z_{i+1}), five lines span(e_i, e_{i+1})
    auto a = analyze_base_locus(abc_point(CycNum(1), CycNum(0), CycNum(0)));
    CHECK(to_string(a.series) == "(1+3*t+t^2)/(1-t)^2");
    CHECK(a.dim == 1);
    CHECK(a.degree == 5);
    std::set<std::pair<int, int>> lines_a(a.coordinate_lines.begin(), a.coordinate_lines.end());
    std::set<std::pair<int, int>> want_a{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    CHECK(lines_a == want_a);
    // the coordinate points lie on the locus too
    REQUIRE_FALSE(a.verified_orbits.empty());
    CHECK(a.verified_orbits[0] == 0);

    // (0:1:0): ideal is (z_i z_{i+1}), five lines span(e_i, e_{i+2})
    auto b = analyze_base_locus(abc_point(CycNum(0), CycNum(1), CycNum(0)));
    CHECK(to_string(b.series) == "(1+3*t+t^2)/(1-t)^2");
    CHECK(b.degree == 5);
    std::set<std::pair<int, int>> lines_b(b.coordinate_lines.begin(), b.coordinate_lines.end());
    std::set<std::pair<int, int>> want_b{{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}};
    CHECK(lines_b == want_b);

    // regular point: empty
    auto c = analyze_base_locus(make_moduli_point(5, {CycNum(1), CycNum(1), CycNum(1)}));
    CHECK(c.dim == -1);
    CHECK_FALSE(c.pure_powers.empty());
    CHECK(c.coordinate_lines.empty());
}

TEST_CASE("closed-form regularity test agrees with elimination") {
    // p = 3 sweep
    std::vector<std::pair<ModuliPoint, bool>> cases;
    cases.emplace_back(p3_point(CycNum(0)), true);
    cases.emplace_back(p3_point(CycNum(1)), true);
    cases.emplace_back(p3_point(CycNum(2)), true);
    cases.emplace_back(p3_point(CycNum(-1)), false);
    cases.emplace_back(p3_point(-CycNum::root(3)), false);
    cases.emplace_back(p3_point(CycNum(2) * CycNum::root(3)), true);
    cases.emplace_back(p3_infinity(), false);
    // p = 5: a regular point, a conic point, a line point, a C = 0 point
    cases.emplace_back(make_moduli_point(5, {CycNum(1), CycNum(1), CycNum(1)}), true);
    cases.emplace_back(abc_point(CycNum(2), CycNum(Rational(-1, 2)), CycNum(1)), false);
    cases.emplace_back(abc_point(CycNum(1), CycNum(1), CycNum(-2)), false);
    cases.emplace_back(abc_point(CycNum(1), CycNum(3), CycNum(0)), false);
    cases.emplace_back(abc_point(CycNum(1), CycNum(-1), CycNum(0)), false);
    for (const auto& [pt, want_regular] : cases) {
        INFO("p=" << pt.p << " at " << to_string(pt));
        CHECK(is_regular_point(pt) == want_regular);
        auto an = analyze_base_locus(pt);
        CHECK((an.dim == -1) == want_regular);
    }
}

TEST_CASE("conic parameters carry a quintic curve through the distinguished orbit") {
    std::vector<ModuliPoint> pts{
        abc_point(CycNum(2), CycNum(Rational(-1, 2)), CycNum(1)),
        abc_point(CycNum(1), CycNum(-1), CycNum(1)),
        abc_point(CycNum(3), CycNum(Rational(-1, 3)), CycNum(1)),
        abc_point(CycNum::root(5), -CycNum::root_power(5, 4), CycNum(1)),
    };
    for (const auto& pt : pts) {
        INFO("at " << to_string(pt));
        auto an = analyze_base_locus(pt);
        CHECK(to_string(an.series) == "(1+3*t+t^2)/(1-t)^2");
        CHECK(an.dim == 1);
        CHECK(an.degree == 5);
        auto O = conic_base_point(pt);
        CHECK(point_in_locus(pt, O));
        for (const auto& z : monomial_orbit(5, O)) CHECK(point_in_locus(pt, z));
    }
    // frozen check from the worked example: a = 1 gives O = (0:1:1:-1:-1)
    auto O1 = conic_base_point(abc_point(CycNum(1), CycNum(-1), CycNum(1)));
    CHECK(O1 == std::vector<CycNum>{cyc(5, 0), cyc(5, 1), cyc(5, 1), cyc(5, -1), cyc(5, -1)});
    CHECK_THROWS_AS(conic_base_point(abc_point(CycNum(1), CycNum(1), CycNum(1))), invalid_input);
    CHECK_THROWS_AS(conic_base_point(abc_point(CycNum(1), CycNum(0), CycNum(0))), invalid_input);
}

TEST_CASE("discriminant: expanded form equals product form and D(1,1) = 6") {
    auto s = discriminant_sum_form();
    auto prodf = discriminant_product_form();
    CHECK(s == prodf);
    std::vector<CycNum> ones{cyc(5, 1), cyc(5, 1), cyc(5, 1)};
    CHECK(evaluate(s, ones) == cyc(5, 6));
    CHECK(regular_locus_value(make_moduli_point(5, {CycNum(1), CycNum(1), CycNum(1)})) == cyc(5, 6));
}

TEST_CASE("pencil determinant: frozen p=3 values and numeric cross-check") {
    // t = 0: diagonal pencil, det = 8 s_0 s_1 s_2
    auto d0 = pencil_det(p3_point(CycNum(0)));
    REQUIRE(d0.terms.size() == 1);
    CHECK(d0.terms[0].second == cyc(3, 8));
    CHECK(d0.terms[0].first.e == std::vector<int>{1, 1, 1});

    // t = 2: det = 8 (3 s_0 s_1 s_2 - s_0^3 - s_1^3 - s_2^3)
    auto d2 = pencil_det(p3_point(CycNum(2)));
    auto coeff_of = [&](std::vector<int> e) {
        for (const auto& t : d2.terms)
            if (t.first.e == e) return t.second;
        return CycNum::zero_in(3);
    };
    CHECK(coeff_of({1, 1, 1}) == cyc(3, 24));
    CHECK(coeff_of({3, 0, 0}) == cyc(3, -8));
    CHECK(coeff_of({0, 3, 0}) == cyc(3, -8));
    CHECK(coeff_of({0, 0, 3}) == cyc(3, -8));
    CHECK(d2.terms.size() == 4);

    // numeric oracle: evaluate the polynomial vs a Gaussian determinant
    XorShift rng(404);
    for (int p : {3, 5}) {
        for (int trial = 0; trial < 3; ++trial) {
            auto pt = rand_point(rng, p);
            auto dpoly = pencil_det(pt);
            std::vector<CycNum> sv(p);
            for (auto& x : sv) x = cyc(p, rng.small(-4, 4));
            Mat<CycNum> M(p, p);
            for (auto& v : M.a) v = CycNum::zero_in(p);
            for (int k = 0; k < p; ++k) {
                auto Mk = form_matrix(pt, k);
                for (int u = 0; u < p; ++u)
                    for (int v = 0; v < p; ++v) M(u, v) += sv[k] * Mk(u, v);
            }
            CHECK(evaluate(dpoly, sv) == det(M));
        }
    }
}

TEST_CASE("candidate orbits: p+1 orbits of size p, pairwise disjoint") {
    for (int p : {3, 5, 7}) {
        auto orbits = candidate_orbits(p);
        REQUIRE(static_cast<int>(orbits.size()) == p + 1);
        std::set<std::string> keys;
        for (const auto& orb : orbits) {
            CHECK(static_cast<int>(orb.size()) == p);
            for (const auto& z : orb) keys.insert(detail::proj_key(z));
        }
        CHECK(static_cast<int>(keys.size()) == p * (p + 1));
    }
}

TEST_CASE("twelve distinguished conic parameters") {
    auto pts = special_conic_points();
    REQUIRE(pts.size() == 12);
    // all on the conic AB + C^2 = 0
    for (const auto& pt : pts) {
        auto abc = abc_coords(pt);
        CHECK(is_zero(abc[0] * abc[1] + abc[2] * abc[2]));
    }
    // pairwise distinct
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(proj_equal(pts[i], pts[j]));
}
