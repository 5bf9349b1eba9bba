#include <catch2/catch_amalgamated.hpp>

#include <hclif/cyclotomic.hpp>
#include <hclif/linalg.hpp>

using namespace hclif;

namespace {

struct XorShift {
    std::uint64_t s;
    explicit XorShift(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int small(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

Mat<Rational> random_mat(XorShift& rng, int r, int c) {
    Mat<Rational> m(r, c);
    for (auto& v : m.a) v = Rational(rng.small(-5, 5));
    return m;
}

// Leibniz determinant: independent oracle for small n.
template <class F>
F det_oracle(const Mat<F>& m) {
    int n = m.rows;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    F total(0);
    do {
        int inv_count = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv_count;
        F prod(inv_count % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST_CASE("rref canonical form and rank") {
    // frozen example with one dependent row and one free column
    Mat<Rational> m = Mat<Rational>::from_rows({
        {2, 4, -2, 6},
        {1, 2, 0, 3},
        {3, 6, -2, 9},
    });
    std::vector<int> piv;
    CHECK(rref(m, &piv) == 2);
    CHECK(piv == std::vector<int>{0, 2});
    Mat<Rational> expect = Mat<Rational>::from_rows({
        {1, 2, 0, 3},
        {0, 0, 1, 0},
        {0, 0, 0, 0},
    });
    CHECK(m == expect);

    XorShift rng(0x123456789abcdefull);
    for (int rep = 0; rep < 20; ++rep) {
        Mat<Rational> a = random_mat(rng, rng.small(1, 6), rng.small(1, 6));
        CHECK(rank(a) == rank(transpose(a)));
        // rank is invariant under an invertible row operation
        Mat<Rational> b = a;
        if (b.rows >= 2) {
            for (int j = 0; j < b.cols; ++j) b(0, j) += 3 * b(1, j);
            CHECK(rank(b) == rank(a));
        }
    }
}

TEST_CASE("nullspace vectors annihilate and span") {
    XorShift rng(0xfeedface12345ull);
    for (int rep = 0; rep < 20; ++rep) {
        Mat<Rational> a = random_mat(rng, rng.small(1, 5), rng.small(1, 6));
        auto ns = nullspace(a);
        CHECK(static_cast<int>(ns.size()) == a.cols - rank(a));
        for (auto& v : ns) {
            auto iv = mat_vec(a, v);
            for (auto& x : iv) CHECK(is_zero(x));
        }
        if (!ns.empty()) CHECK(rank(Mat<Rational>::from_rows(ns)) == static_cast<int>(ns.size()));
    }
}

TEST_CASE("inverse, solve, and determinant") {
    XorShift rng(0xabcdef987654ull);
    int found = 0;
    while (found < 12) {
        int n = rng.small(1, 5);
        Mat<Rational> a = random_mat(rng, n, n);
        Rational d = det(a);
        CHECK(d == det_oracle(a));
        if (is_zero(d)) {
            CHECK_THROWS_AS(inverse(a), math_error);
            continue;
        }
        ++found;
        Mat<Rational> ai = inverse(a);
        CHECK(a * ai == Mat<Rational>::identity(n));
        CHECK(ai * a == Mat<Rational>::identity(n));
        CHECK(det(ai) == inv(d));

        std::vector<Rational> x0(n);
        for (auto& v : x0) v = Rational(rng.small(-4, 4));
        auto b = mat_vec(a, x0);
        CHECK(solve(a, b) == x0);
    }

    // det multiplicativity over a cyclotomic field
    CycNum w = CycNum::root(5);
    Mat<CycNum> p(3, 3), q(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            p(i, j) = pow(w, i * j + 1) + CycNum(i - j);
            q(i, j) = pow(w, 2 * i + j) - CycNum(1);
        }
    CHECK(det(p * q) == det(p) * det(q));
    CHECK(det(p) == det_oracle(p));

    Mat<Rational> sing = Mat<Rational>::from_rows({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(solve(sing, std::vector<Rational>{1, 3}), math_error); // inconsistent
    CHECK_THROWS_AS(solve(sing, std::vector<Rational>{1, 2}), math_error); // underdetermined
}

TEST_CASE("matrix powers and permutation order") {
    // cyclic shift on 5 points has order 5
    Mat<Rational> c(5, 5);
    for (int i = 0; i < 5; ++i) c((i + 1) % 5, i) = 1;
    CHECK(mat_pow(c, 5) == Mat<Rational>::identity(5));
    CHECK(mat_pow(c, 4) == inverse(c));
    CHECK(mat_pow(c, 0) == Mat<Rational>::identity(5));
}

TEST_CASE("incremental row basis matches batch rref") {
    XorShift rng(0x5511aa77cc33ull);
    for (int rep = 0; rep < 15; ++rep) {
        int cols = rng.small(2, 7);
        int nrows = rng.small(1, 9);
        Mat<Rational> m(nrows, cols);
        RowBasis<Rational> basis(cols);
        int independents = 0;
        for (int i = 0; i < nrows; ++i) {
            std::vector<Rational> v(cols);
            for (auto& x : v) x = Rational(rng.small(-3, 3));
            for (int j = 0; j < cols; ++j) m(i, j) = v[j];
            if (basis.add(v)) ++independents;
        }
        Mat<Rational> mc = m;
        std::vector<int> piv;
        int r = rref(mc, &piv);
        CHECK(basis.rank() == r);
        CHECK(independents == r);
        CHECK(basis.pivots == piv);
        // canonical rows agree with batch RREF rows
        for (int i = 0; i < r; ++i) CHECK(basis.rows[i] == mc.row(i));
        // membership: original rows reduce to zero, a fresh random vector usually not
        for (int i = 0; i < nrows; ++i) CHECK(basis.contains(m.row(i)));
    }
}
