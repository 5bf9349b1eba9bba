#include <catch2/catch_amalgamated.hpp>

#include "hclif/char_series.hpp"
#include "hclif/clifford.hpp"

using namespace hclif;

namespace {

CycNum w(int p, long long k) { return CycNum::root_power(p, k); }

Rational rat(long long n) { return Rational(n); }

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("series helpers expand rational functions") {
    // the two hypothetical Koszul-dual series used in the failure argument
    std::vector<Rational> numer{rat(1), rat(1)};
    std::vector<Rational> den1{rat(1), rat(-4), rat(5), rat(0), rat(-5)};
    auto c1 = series_quotient(numer, den1, 5);
    std::vector<Rational> expect1{rat(1), rat(5), rat(15), rat(35), rat(70), rat(130)};
    CHECK(c1 == expect1);

    std::vector<Rational> den2{rat(1), rat(-4), rat(5)};
    auto c2 = series_quotient(numer, den2, 5);
    std::vector<Rational> expect2{rat(1), rat(5), rat(15), rat(35), rat(65), rat(85)};
    CHECK(c2 == expect2);

    // (1+t)^4 and a product round-trip
    auto pw = poly_pow_trunc<Rational>({rat(1), rat(1)}, 4, 6);
    CHECK(pw == std::vector<Rational>{rat(1), rat(4), rat(6), rat(4), rat(1), rat(0), rat(0)});
    auto prod = poly_mul_trunc(den1, series_quotient({rat(1)}, den1, 8), 8);
    for (int k = 0; k <= 8; ++k) CHECK(prod[k] == (k == 0 ? rat(1) : rat(0)));
}

TEST_CASE("closed-form graded characters at central classes") {
    HeisenbergGroup G(5);
    const int N = 6;
    for (int k = 0; k < 5; ++k) {
        auto zk = G.z(k);
        if (k == 0) {
            auto sym = predicted_series(SeriesModel::symmetric_algebra, G, zk, N);
            for (int n = 0; n <= N; ++n) CHECK(sym[n] == CycNum(Integer(binom(n + 4, 4))));
            auto ext = predicted_series(SeriesModel::exterior_algebra, G, zk, N);
            for (int n = 0; n <= N; ++n)
                CHECK(ext[n] == CycNum(Integer(n <= 5 ? binom(5, n) : 0)));
        }
        auto ten = predicted_series(SeriesModel::tensor_algebra, G, zk, N);
        for (int n = 0; n <= N; ++n) CHECK(ten[n] == pow(CycNum(5), n) * w(5, k * n));
        auto cl = predicted_series(SeriesModel::clifford_algebra, G, zk, N);
        for (int n = 0; n <= N; ++n) CHECK(cl[n] == CycNum(Integer(binom(n + 4, 4))) * w(5, k * n));
        auto sq = predicted_series(SeriesModel::squares_subalgebra, G, zk, N);
        for (int n = 0; n <= N; ++n) {
            if (n % 2)
                CHECK(is_zero(sq[n]));
            else
                CHECK(sq[n] == CycNum(Integer(binom(n / 2 + 4, 4))) * w(5, k * n));
        }
    }
    // center prediction spot rows: z^0 to degree 2 is [1, 0, 5]; t^5 coefficient is 1
    auto cen = predicted_series(SeriesModel::center, G, G.z(0), 5);
    CHECK(cen[0] == CycNum(1));
    CHECK(is_zero(cen[1]));
    CHECK(cen[2] == CycNum(5));
    CHECK(is_zero(cen[3]));
    CHECK(cen[4] == CycNum(15));
    CHECK(cen[5] == CycNum(1));
}

TEST_CASE("closed-form graded characters at non-central classes") {
    HeisenbergGroup G(5);
    auto h = G.make(2, 1, 3);
    const int N = 10;
    auto ten = predicted_series(SeriesModel::tensor_algebra, G, h, N);
    auto ext = predicted_series(SeriesModel::exterior_algebra, G, h, N);
    auto sym = predicted_series(SeriesModel::symmetric_algebra, G, h, N);
    auto sq = predicted_series(SeriesModel::squares_subalgebra, G, h, N);
    auto cen = predicted_series(SeriesModel::center, G, h, N);
    for (int n = 0; n <= N; ++n) {
        CHECK(ten[n] == (n == 0 ? CycNum(1) : CycNum(0)));
        CHECK(ext[n] == (n == 0 || n == 5 ? CycNum(1) : CycNum(0)));
        CHECK(sym[n] == (n % 5 == 0 ? CycNum(1) : CycNum(0)));
        CHECK(sq[n] == (n % 10 == 0 ? CycNum(1) : CycNum(0)));
        CHECK(cen[n] == (n % 5 == 0 ? CycNum(1) : CycNum(0)));
    }
    auto pred = center_series_prediction(G, 5);
    REQUIRE(pred.reps.size() == static_cast<std::size_t>(G.num_classes()));
    for (std::size_t c = 0; c < pred.reps.size(); ++c)
        if (!G.is_central(pred.reps[c]))
            CHECK(pred.coeff[c] == std::vector<CycNum>{CycNum(1), CycNum(0), CycNum(0), CycNum(0),
                                                       CycNum(0), CycNum(1)});
}

TEST_CASE("numeric character series of a regular member matches the closed form") {
    const int p = 5;
    HeisenbergGroup G(p);
    auto pt = make_moduli_point(p, {CycNum(1), CycNum(1), CycNum(1)});
    GradedAlgebra A(clifford_algebra(pt));
    const int N = 4;
    auto cs = character_series(A, G, N);
    REQUIRE(cs.reps.size() == static_cast<std::size_t>(G.num_classes()));
    // identity row carries the graded dimensions 1, 5, 15, 35, 70
    std::vector<CycNum> dims{CycNum(1), CycNum(5), CycNum(15), CycNum(35), CycNum(70)};
    bool saw_identity = false;
    for (std::size_t c = 0; c < cs.reps.size(); ++c) {
        auto predicted = predicted_series(SeriesModel::clifford_algebra, G, cs.reps[c], N);
        CHECK(cs.coeff[c] == predicted);
        if (cs.reps[c] == G.id()) {
            saw_identity = true;
            CHECK(cs.coeff[c] == dims);
        }
        if (!G.is_central(cs.reps[c]))
            for (int n = 1; n <= N; ++n) CHECK(is_zero(cs.coeff[c][n]));
    }
    CHECK(saw_identity);
}

TEST_CASE("per-class Koszul identity residuals vanish for the quantum member") {
    const int p = 3;
    HeisenbergGroup G(p);
    auto pt = p3_point(CycNum(0));
    auto alg = clifford_algebra(pt);
    GradedAlgebra A(alg);
    GradedAlgebra B(koszul_dual(alg));
    auto res = koszul_identity_residuals(A, B, G, 5);
    REQUIRE(res.size() == static_cast<std::size_t>(G.num_classes()));
    for (const auto& row : res)
        for (const auto& v : row) CHECK(is_zero(v));
    // dual-side identity row: exterior-type dimensions 1, 3, 3, 1, 0, 0
    auto dual_cs = character_series(B, G, 5, true);
    for (std::size_t c = 0; c < dual_cs.reps.size(); ++c)
        if (dual_cs.reps[c] == G.id())
            CHECK(dual_cs.coeff[c] == std::vector<CycNum>{CycNum(1), CycNum(3), CycNum(3),
                                                          CycNum(1), CycNum(0), CycNum(0)});
}

TEST_CASE("determinant report: leading shape, exact fixedness, guards") {
    // p=3 quantum member: 8 s0 s1 s2 exactly
    auto d0 = det_quadratic_form(p3_point(CycNum(0)));
    CHECK(d0.trivial);
    CHECK(d0.leading == CycNum(8));
    REQUIRE(d0.det.terms.size() == 1);
    CHECK(d0.det.terms[0].first.e == std::vector<int>{1, 1, 1});

    auto d2 = det_quadratic_form(p3_point(CycNum(2)));
    CHECK(d2.trivial);
    CHECK(d2.leading == CycNum(24));

    auto dr = det_quadratic_form(p3_point(w(3, 1) + CycNum(2)));
    CHECK(dr.trivial);
    auto dq = det_quadratic_form(p3_point(CycNum(Rational(7, 3))));
    CHECK(dq.trivial);

    // p=5: base corner 2^5 with f(0)=0; at (1,1) the recorded value 16 = 2^5 - 16
    auto dbase = det_quadratic_form(make_moduli_point(5, {CycNum(1), CycNum(0), CycNum(0)}));
    CHECK(dbase.trivial);
    CHECK(dbase.leading == CycNum(32));
    CHECK(dbase.det.terms.size() == 1);

    auto d11 = det_quadratic_form(make_moduli_point(5, {CycNum(1), CycNum(1), CycNum(1)}));
    CHECK(d11.trivial);
    CHECK(d11.leading == CycNum(16));

    CHECK_THROWS_AS(det_quadratic_form(abc_point(CycNum(1), CycNum(3), CycNum(0))), invalid_input);
    CHECK_THROWS_AS(det_quadratic_form(make_moduli_point(
                        7, {CycNum(1), CycNum(0), CycNum(0), CycNum(0)})),
                    resource_limit);
}
