#include <catch2/catch_amalgamated.hpp>

#include <hclif/cyclotomic.hpp>
#include <hclif/paramrat.hpp>

using namespace hclif;

namespace {

// Independent oracle for Q(w_p): elements as coefficient vectors over the raw
// exponents 0..p-1 with NO basis reduction.  Multiplication is convolution of
// exponents mod p.  Two raw vectors represent the same element exactly when
// their difference is a constant multiple of (1,...,1), because the only
// relation among 1, w, ..., w^{p-1} is that their sum vanishes.
struct RawCyc {
    int p;
    std::vector<Rational> c;

    explicit RawCyc(int p_) : p(p_), c(p_, Rational(0)) {}
};

RawCyc raw_mul(const RawCyc& a, const RawCyc& b) {
    RawCyc r(a.p);
    for (int i = 0; i < a.p; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < a.p; ++j) r.c[(i + j) % a.p] += a.c[i] * b.c[j];
    }
    return r;
}

bool raw_matches(const RawCyc& r, const CycNum& x) {
    REQUIRE(x.p == r.p);
    // shared shift: r.c[i] - coeff_i(x) must be independent of i
    Rational shift = r.c[r.p - 1]; // x has coefficient 0 at exponent p-1
    for (int i = 0; i + 1 < r.p; ++i)
        if (r.c[i] - x.c[i] != shift) return false;
    return true;
}

// Deterministic PRNG for property tests (no libc rand).
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

CycNum random_cyc(XorShift& rng, int p) {
    std::vector<Rational> raw(p);
    for (int i = 0; i < p; ++i) raw[i] = Rational(rng.small(-4, 4));
    return CycNum::reduce(p, raw);
}

MultiPoly<CycNum> ppoly(int nparams, std::initializer_list<std::pair<std::vector<int>, int>> ts) {
    MultiPoly<CycNum> f(nparams, ParamRat::param_order);
    for (auto& [es, c] : ts) {
        Monomial m(nparams);
        m.e = es;
        f = f + MultiPoly<CycNum>::term(nparams, ParamRat::param_order, m, CycNum(c));
    }
    return f;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(parse_rational("15") == Rational(15));
    CHECK(parse_rational("-3/6") == Rational(-1) / 2);
    CHECK(parse_rational("+7/3") == Rational(7) / 3);
    CHECK(to_string(Rational(-1) / 2) == "-1/2");
    CHECK(to_string(Rational(4) / 2) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rational("1.5"), invalid_input);
    CHECK_THROWS_AS(parse_rational(""), invalid_input);
    CHECK_THROWS_AS(parse_rational("2/"), invalid_input);
    CHECK_THROWS_AS(parse_rational("w"), invalid_input);
    CHECK(inv(Rational(3) / 4) == Rational(4) / 3);
    CHECK_THROWS_AS(inv(Rational(0)), math_error);

    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(mod_p(-1, 5) == 4);
    CHECK(mod_p(12, 5) == 2);
    CHECK(inv_mod_p(3, 7) == 5);
    for (int p : {3, 5, 7})
        for (int x = 1; x < p; ++x) CHECK(mod_p(static_cast<long long>(x) * inv_mod_p(x, p), p) == 1);
    CHECK_THROWS_AS(inv_mod_p(10, 5), math_error);
}

TEST_CASE("cyclotomic construction and reduction") {
    CHECK_THROWS_AS(CycNum::root(4), invalid_input);
    CHECK_THROWS_AS(CycNum::root(1), invalid_input);

    for (int p : {3, 5, 7}) {
        // 1 + w + ... + w^{p-1} == 0
        CycNum s = CycNum::zero_in(p);
        for (int i = 0; i < p; ++i) s += CycNum::root_power(p, i);
        CHECK(is_zero(s));
        CHECK(is_zero(CycNum::reduce(p, std::vector<Rational>(p, Rational(1)))));

        CHECK(CycNum::root_power(p, p) == CycNum(1));
        CHECK(CycNum::root_power(p, -1) == CycNum::root_power(p, p - 1));
        CHECK(pow(CycNum::root(p), p) == CycNum(1));
        CHECK(pow(CycNum::root(p), 1) == CycNum::root(p));
    }

    // exponents beyond p fold before reduction
    std::vector<Rational> raw(11, Rational(0));
    raw[10] = 3; // w^10 = 1 in Q(w_5)
    CHECK(CycNum::reduce(5, raw) == CycNum(3));
}

TEST_CASE("quadratic Gauss sum in Q(w_5)") {
    int p = 5;
    auto w = [&](int k) { return CycNum::root_power(p, k); };
    CycNum g = w(1) + w(4) - w(2) - w(3);

    CHECK(g * g == CycNum(5));
    CHECK(galois(g, 2) == -g);  // 2 is a non-residue mod 5
    CHECK(galois(g, 4) == g);   // 4 = 2^2 is a residue
    CHECK(galois(w(1) + w(4), 2) == w(2) + w(3));

    // same product through the raw-exponent oracle
    RawCyc a(p);
    a.c[1] = 1; a.c[4] = 1; a.c[2] = -1; a.c[3] = -1;
    RawCyc sq = raw_mul(a, a);
    CHECK(raw_matches(sq, CycNum::scalar_in(p, Rational(5))));
    CHECK(raw_matches(sq, g * g));
}

TEST_CASE("cyclotomic field axioms against raw oracle") {
    XorShift rng(0x9e3779b97f4a7c15ull);
    for (int p : {3, 5, 7}) {
        for (int rep = 0; rep < 25; ++rep) {
            CycNum x = random_cyc(rng, p);
            CycNum y = random_cyc(rng, p);
            CycNum z = random_cyc(rng, p);

            CHECK((x + y) * z == x * z + y * z);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * y == y * x);
            CHECK(x - x == CycNum::zero_in(p));

            // multiplication cross-checked against raw convolution
            RawCyc rx(p), ry(p);
            for (int i = 0; i + 1 < p; ++i) { rx.c[i] = x.c[i]; ry.c[i] = y.c[i]; }
            CHECK(raw_matches(raw_mul(rx, ry), x * y));

            if (!is_zero(x)) {
                CHECK(inv(x) * x == CycNum(1));
                CHECK(pow(x, -2) == inv(x * x));
            }
            for (int j = 1; j < p; ++j) {
                CHECK(galois(x, j) * galois(y, j) == galois(x * y, j));
                CHECK(galois(x, j) + galois(y, j) == galois(x + y, j));
                for (int k = 1; k < p; ++k)
                    CHECK(galois(galois(x, j), k) == galois(x, (j * k) % p));
            }
            CHECK(conj(conj(x)) == x);
            // norm = product over the full Galois orbit is rational
            CycNum norm(1);
            for (int j = 1; j < p; ++j) norm *= galois(x, j);
            CHECK(is_rational(norm));
        }
    }
    CHECK_THROWS_AS(inv(CycNum::zero_in(5)), math_error);
    CHECK_THROWS_AS(galois(CycNum::root(5), 5), invalid_input);
    CHECK_THROWS_AS(galois(CycNum::root(5), 0), invalid_input);
}

TEST_CASE("cyclotomic scalar promotion") {
    CycNum w = CycNum::root(5);
    CHECK(CycNum(2) + w == CycNum::scalar_in(5, Rational(2)) + w);
    CHECK(CycNum(Rational(1) / 2) * CycNum(4) == CycNum(2));
    CHECK(CycNum(3) == CycNum::scalar_in(7, Rational(3)));
    CHECK(inv(CycNum(4)) == CycNum(Rational(1) / 4));
    CHECK(is_rational(w * conj(w) * inv(w * conj(w))));
    CHECK_THROWS_AS(CycNum::root(3) + CycNum::root(5), math_error);

    // frozen p=3 identity: (1 + w)(1 + w^2) = 1
    CycNum u = CycNum(1) + CycNum::root(3);
    CHECK(u * (CycNum(1) + CycNum::root_power(3, 2)) == CycNum(1));
    CHECK(inv(u) == CycNum(1) + CycNum::root_power(3, 2));
}

TEST_CASE("cyclotomic ordering and printing") {
    CycNum w = CycNum::root(5);
    CHECK(cyc_less(CycNum(0), CycNum(1)));
    CHECK_FALSE(cyc_less(CycNum(1), CycNum(0)));
    CHECK_FALSE(cyc_less(w, w));
    CycNum a = w, b = w + CycNum(1);
    CHECK((cyc_less(a, b) || cyc_less(b, a)));

    CHECK(to_string(CycNum(0)) == "0");
    CHECK(to_string(CycNum(Rational(5) / 3)) == "5/3");
    CycNum x = CycNum(1) + CycNum(2) * w - pow(w, 3);
    CHECK(to_string(x) == "1+2*w-w^3");
    CHECK(to_string(-x) == "-1-2*w+w^3");
}

TEST_CASE("monomial orders discriminate correctly") {
    // x1^2 vs x0*x2: grevlex ranks x1^2 higher, grlex ranks x0*x2 higher
    Monomial x1sq(3), x0x2(3);
    x1sq.e = {0, 2, 0};
    x0x2.e = {1, 0, 1};
    CHECK(mono_cmp(x1sq, x0x2, MonomialOrder::grevlex) > 0);
    CHECK(mono_cmp(x1sq, x0x2, MonomialOrder::grlex) < 0);
    CHECK(mono_cmp(x1sq, x0x2, MonomialOrder::lex) < 0);

    Monomial one(3), x2cube(3);
    x2cube.e = {0, 0, 3};
    for (auto o : {MonomialOrder::grevlex, MonomialOrder::grlex})
        CHECK(mono_cmp(x2cube, one, o) > 0); // graded orders respect degree
    CHECK(mono_cmp(Monomial::var(3, 0), Monomial::var(3, 2), MonomialOrder::lex) > 0);

    CHECK(divides(x0x2, x0x2 * x1sq));
    CHECK_FALSE(divides(x1sq, x0x2));
    CHECK(quotient(x0x2 * x1sq, x1sq) == x0x2);
    CHECK(lcm(x1sq, x0x2).e == std::vector<int>{1, 2, 1});
    CHECK(parse_order("grevlex") == MonomialOrder::grevlex);
    CHECK_THROWS_AS(parse_order("degrevlex"), invalid_input);
}

TEST_CASE("multivariate polynomial arithmetic") {
    using P = MultiPoly<CycNum>;
    const auto O = MonomialOrder::grevlex;
    P x = P::variable(2, O, 0, CycNum(1));
    P y = P::variable(2, O, 1, CycNum(1));

    P f = (x + y) * (x - y);
    P g = x * x - y * y;
    CHECK(f == g);
    CHECK(f.degree() == 2);
    CHECK((f - g).is_zero_v());

    P h = (x + y) * (x + y);
    CHECK(h.leading_monomial().e == std::vector<int>{2, 0});
    CHECK(h.terms.size() == 3);
    CHECK(poly_to_string(h, default_names(2, "x")) == "x0^2+2*x0*x1+x1^2");

    // evaluate and substitute agree
    std::vector<CycNum> pt = {CycNum(3), CycNum(Rational(1) / 2)};
    CHECK(evaluate(f, pt) == CycNum(9) - CycNum(Rational(1) / 4));
    P swapped = substitute(f, {y, x});
    CHECK(swapped == -f);

    // division / gcd layer
    auto [q, r] = poly_divmod_single(h, x + y);
    CHECK(q == x + y);
    CHECK(is_zero(r));
    CHECK(poly_div_exact(f, x - y) == x + y);
    CHECK_THROWS_AS(poly_div_exact(f + P::constant(2, O, CycNum(1)), x - y), math_error);

    P gcd1 = poly_gcd(h * (x - y), (x + y) * (x * x + y * y));
    CHECK(gcd1 == x + y);
    P c5 = P::constant(2, O, CycNum(5));
    CHECK(poly_gcd(c5, c5) == P::constant(2, O, CycNum(1)));
}

TEST_CASE("parameter rationals reduce to canonical form") {
    ParamRat a = ParamRat::parameter(2, 0);
    ParamRat b = ParamRat::parameter(2, 1);

    // (a^2 - b^2)/(a - b) == a + b
    ParamRat lhs = (a * a - b * b) / (a - b);
    CHECK(lhs == a + b);
    CHECK(to_string(lhs) == "a+b");

    // denominator stays monic under the parameter order
    ParamRat frac = a / (b + b);
    CHECK(to_string(frac) == "(1/2*a)/(b)");
    CHECK(frac * ParamRat(2) * b == a);

    // scalar promotion mirrors CycNum
    CHECK(ParamRat(1) + a == a + ParamRat::scalar_in(2, CycNum(1)));
    CHECK((a - a) == ParamRat(0));
    CHECK(is_zero(a - a));
    CHECK_THROWS_AS(inv(a - a), math_error);
    CHECK_THROWS_AS(a / (b - b), math_error);

    ParamRat expr = inv(a + ParamRat(1));
    CHECK(expr * (a + ParamRat(1)) == ParamRat(1));

    // evaluation at cyclotomic points
    CycNum w = CycNum::root(5);
    CHECK(evaluate(lhs, {w, conj(w)}) == w + conj(w));

    // gcd cancellation with cyclotomic content
    MultiPoly<CycNum> num = ppoly(2, {{{2, 0}, 1}, {{0, 2}, -1}});
    MultiPoly<CycNum> den = ppoly(2, {{{1, 0}, 2}, {{0, 1}, 2}});
    ParamRat red = ParamRat::fraction(num, den);
    CHECK(red == (a - b) * inv(ParamRat(2)));
}
