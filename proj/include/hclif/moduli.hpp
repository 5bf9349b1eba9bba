#pragma once
#include <map>
#include <string>
#include <vector>

#include "clifford.hpp"
#include "heisenberg.hpp"

namespace hclif {

namespace detail {
inline Mat<CycNum> scaled_identity(int n, const CycNum& c) {
    Mat<CycNum> m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return m;
}
inline bool is_zero_mat(const Mat<CycNum>& m) {
    for (const auto& x : m.a)
        if (!is_zero(x)) return false;
    return true;
}
inline std::vector<CycNum> negated(std::vector<CycNum> v) {
    for (auto& x : v) x = -x;
    return v;
}
// pin promotable rational entries to the working field
inline std::vector<CycNum> in_field(std::vector<CycNum> v, int p) {
    for (auto& c : v)
        if (c.p == 0) c = CycNum::scalar_in(p, c.c[0]);
    return v;
}
} // namespace detail

// --- SL_2(F_p) / PSL_2(F_p) --------------------------------------------------

// row-major [[a, b], [c, d]] with det = 1
struct SL2 {
    int p = 0;
    int a = 1, b = 0, c = 0, d = 1;
};

inline SL2 make_sl2(int p, long long a, long long b, long long c, long long d) {
    CycNum::check_prime(p);
    SL2 g{p, mod_p(a, p), mod_p(b, p), mod_p(c, p), mod_p(d, p)};
    if (mod_p(static_cast<long long>(g.a) * g.d - static_cast<long long>(g.b) * g.c, p) != 1)
        throw invalid_input("matrix must have determinant 1 mod p");
    return g;
}

inline SL2 sl2_identity(int p) { return make_sl2(p, 1, 0, 0, 1); }
// the two generators: U of order 4 (2 in PSL), V of order 6 (3 in PSL)
inline SL2 sl2_U(int p) { return make_sl2(p, 0, -1, 1, 0); }
inline SL2 sl2_V(int p) { return make_sl2(p, 0, 1, -1, 1); }

inline SL2 sl2_mul(const SL2& x, const SL2& y) {
    if (x.p != y.p) throw invalid_input("matrices over different primes");
    return make_sl2(x.p, static_cast<long long>(x.a) * y.a + static_cast<long long>(x.b) * y.c,
                    static_cast<long long>(x.a) * y.b + static_cast<long long>(x.b) * y.d,
                    static_cast<long long>(x.c) * y.a + static_cast<long long>(x.d) * y.c,
                    static_cast<long long>(x.c) * y.b + static_cast<long long>(x.d) * y.d);
}

inline SL2 sl2_inv(const SL2& x) { return make_sl2(x.p, x.d, -x.b, -x.c, x.a); }

inline bool sl2_equal(const SL2& x, const SL2& y) {
    return x.p == y.p && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

inline bool psl2_equal(const SL2& x, const SL2& y) {
    if (x.p != y.p) return false;
    bool plus = x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    bool minus = x.a == mod_p(-y.a, x.p) && x.b == mod_p(-y.b, x.p) &&
                 x.c == mod_p(-y.c, x.p) && x.d == mod_p(-y.d, x.p);
    return plus || minus;
}

inline std::string to_string(const SL2& g) {
    return "[[" + std::to_string(g.a) + "," + std::to_string(g.b) + "],[" + std::to_string(g.c) +
           "," + std::to_string(g.d) + "]]";
}

// --- lifting to Heisenberg automorphisms -------------------------------------

struct AutLift {
    Heis img_e1, img_e2;
};

// e1 -> e1^a e2^c, e2 -> z^corr e1^b e2^d; the central correction is the
// smallest power making 1 an eigenvalue of the image of e2 in the V_1 action.
inline AutLift lift_automorphism(const HeisenbergGroup& G, const SL2& g) {
    const int p = G.p;
    if (g.p != p) throw invalid_input("matrix prime does not match the group");
    Heis f1 = G.make(0, g.a, g.c);
    for (int corr = 0; corr < p; ++corr) {
        Heis f2 = G.make(corr, g.b, g.d);
        auto M = rep_matrix_V(G, 1, f2);
        auto K = nullspace(M - Mat<CycNum>::identity(p));
        if (!K.empty()) {
            if (G.commutator(f1, f2) != G.z())
                throw consistency_error("lift does not preserve the commutator pairing");
            return {f1, f2};
        }
    }
    throw consistency_error("no central correction yields eigenvalue 1");
}

// --- the twist action on parameter points ------------------------------------

struct TwistResult {
    ModuliPoint image;
    Mat<CycNum> y_basis; // columns express the new generators in the old ones
};

inline TwistResult twist_action_full(const HeisenbergGroup& G, const SL2& g, const ModuliPoint& P) {
    const int p = G.p;
    if (P.p != p) throw invalid_input("point prime does not match the group");
    auto lift = lift_automorphism(G, g);

    // y_0: the eigenvalue-1 eigenvector of the image of e2; y_i = img(e1)^{-i} y_0
    auto M2 = rep_matrix_V(G, 1, lift.img_e2);
    auto K = nullspace(M2 - Mat<CycNum>::identity(p));
    if (K.size() != 1) throw consistency_error("eigenvalue-1 eigenspace is not a line");
    std::vector<CycNum> y0 = detail::in_field(K[0], p);
    auto M1inv = inverse(rep_matrix_V(G, 1, lift.img_e1));
    Mat<CycNum> Y(p, p);
    std::vector<CycNum> yi = y0;
    for (int i = 0; i < p; ++i) {
        if (i) yi = mat_vec(M1inv, yi);
        for (int u = 0; u < p; ++u) Y(u, i) = yi[u];
    }
    auto Yi = inverse(Y);

    // relation span in the new basis
    RowBasis<CycNum> span(p * p);
    for (const auto& r : presentation_relations(P)) {
        Mat<CycNum> T(p, p);
        T.a = r;
        auto Tp = Yi * T * transpose(Yi);
        span.add(Tp.a);
    }

    // solve for the parameter point whose family span matches
    const int h = (p - 1) / 2;
    const int inv2 = inv_mod_p(2, p);
    auto reduce_tensor = [&](const std::vector<CycNum>& t) { return span.reduce(t); };
    std::vector<std::vector<CycNum>> redAC(p * p), redSQ(p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) redAC[i * p + j] = reduce_tensor(anticommutator_rel(p, i, j));
    for (int k = 0; k < p; ++k) redSQ[k] = reduce_tensor(square_rel(p, k));

    std::vector<std::vector<CycNum>> rows;
    auto add_conditions = [&](int la, const std::vector<CycNum>& ra, int lb,
                              const std::vector<CycNum>& rb) {
        for (int t = 0; t < p * p; ++t) {
            if (is_zero(ra[t]) && is_zero(rb[t])) continue;
            std::vector<CycNum> row(h + 1, CycNum::zero_in(p));
            row[la] += ra[t];
            row[lb] += rb[t];
            rows.push_back(std::move(row));
        }
    };
    for (int i = 1; i <= h; ++i)
        for (int m = 0; m < p; ++m)
            add_conditions(0, redAC[mod_p(m, p) * p + mod_p(m + i, p)], i,
                           detail::negated(redSQ[mod_p(m + i * inv2, p)]));
    for (int k = 0; k < p; ++k)
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j)
                add_conditions(
                    i, redAC[mod_p(k - j * inv2, p) * p + mod_p(k + j * inv2, p)], j,
                    detail::negated(redAC[mod_p(k - i * inv2, p) * p + mod_p(k + i * inv2, p)]));

    auto ker = nullspace(Mat<CycNum>::from_rows(rows));
    if (ker.size() != 1)
        throw consistency_error("twisted relations do not define a unique family point");
    auto Pimg = make_moduli_point(p, ker[0]);

    // the family span at the image point must reproduce the twisted span exactly
    RowBasis<CycNum> check(p * p);
    for (const auto& r : presentation_relations(Pimg)) check.add(r);
    if (check.rows != span.rows) throw consistency_error("twisted relations left the family");
    return {std::move(Pimg), std::move(Y)};
}

inline ModuliPoint twist_action(const SL2& g, const ModuliPoint& P) {
    HeisenbergGroup G(P.p);
    return twist_action_full(G, g, P).image;
}

// --- orbits -------------------------------------------------------------------

namespace detail {
inline std::string moduli_key(const ModuliPoint& P) {
    auto n = normalize(P);
    std::string k;
    for (const auto& c : n.a) k += to_string(c) + "|";
    return k;
}
} // namespace detail

inline std::vector<ModuliPoint> moduli_orbit(const ModuliPoint& P, std::size_t max_size = 1000) {
    HeisenbergGroup G(P.p);
    std::vector<SL2> gens{sl2_U(P.p), sl2_V(P.p)};
    std::vector<ModuliPoint> orbit;
    std::map<std::string, bool> seen;
    std::vector<ModuliPoint> queue{P};
    seen[detail::moduli_key(P)] = true;
    while (!queue.empty()) {
        auto q = queue.back();
        queue.pop_back();
        orbit.push_back(q);
        if (orbit.size() + queue.size() > max_size) throw resource_limit("orbit exceeds bound");
        for (const auto& g : gens) {
            auto img = twist_action_full(G, g, q).image;
            auto key = detail::moduli_key(img);
            if (!seen[key]) {
                seen[key] = true;
                queue.push_back(img);
            }
        }
    }
    return orbit;
}

// --- fixed points in the ambient projective space -----------------------------

// eigenlines of the V_i matrix of a non-central element: exactly p of them
inline std::vector<std::vector<CycNum>> projective_fixed_points(const HeisenbergGroup& G, int i,
                                                                const Heis& h) {
    if (G.is_central(h)) throw invalid_input("central elements fix all of projective space");
    auto M = rep_matrix_V(G, i, h);
    std::vector<std::vector<CycNum>> lines;
    for (int m = 0; m < G.p; ++m) {
        auto shifted = M - detail::scaled_identity(G.p, CycNum::root_power(G.p, m));
        for (auto& v : nullspace(shifted)) lines.push_back(detail::in_field(v, G.p));
    }
    if (static_cast<int>(lines.size()) != G.p)
        throw consistency_error("expected exactly p eigenlines");
    return lines;
}

// --- quantum points -------------------------------------------------------------

// The p+1 parameter points whose algebra is the sign-commutative quantum space:
// the base point (1:0:...:0) plus, for each k, the solution of the rank-1
// conditions on M(s) at the stabilized squares-orbit representative
// s_i = rho^{k i(i+1)/2}, rho = omega^2.
inline std::vector<ModuliPoint> quantum_points(int p) {
    CycNum::check_prime(p);
    if (p == 2) throw invalid_input("need an odd prime");
    const int h = (p - 1) / 2;
    const int inv2 = inv_mod_p(2, p);
    const int inv4 = inv_mod_p(4, p);
    std::vector<ModuliPoint> out;
    {
        std::vector<CycNum> a(h + 1, CycNum::zero_in(p));
        a[0] = CycNum::scalar_in(p, Rational(1));
        out.push_back(make_moduli_point(p, a));
    }
    for (int k = 0; k < p; ++k) {
        std::vector<CycNum> s(p);
        for (int i = 0; i < p; ++i)
            s[i] = CycNum::root_power(p, 2LL * k * (static_cast<long long>(i) * (i + 1) / 2));
        // candidate magnitudes 2 w^{k d^2 / 4}; the signs are pinned by rank 1
        std::vector<CycNum> mag(h + 1);
        mag[0] = CycNum::scalar_in(p, Rational(1));
        for (int d = 1; d <= h; ++d)
            mag[d] = CycNum(2) * CycNum::root_power(p, mod_p(static_cast<long long>(k) * d % p * d % p * inv4, p));
        std::vector<ModuliPoint> found;
        for (int signs = 0; signs < (1 << h); ++signs) {
            std::vector<CycNum> a(h + 1);
            a[0] = mag[0];
            for (int d = 1; d <= h; ++d)
                a[d] = (signs >> (d - 1)) & 1 ? -mag[d] : mag[d];
            Mat<CycNum> M(p, p);
            for (int u = 0; u < p; ++u)
                for (int v = 0; v < p; ++v) {
                    int idx = mod_p((u + v) * inv2, p);
                    M(u, v) = (u == v) ? CycNum(2) * a[0] * s[idx]
                                       : a[fold_distance(p, v - u)] * s[idx];
                }
            if (rank(M) == 1) found.push_back(make_moduli_point(p, a));
        }
        if (found.size() != 1)
            throw consistency_error("rank-1 conditions did not pin a unique point");
        out.push_back(found[0]);
    }
    return out;
}

inline bool is_quantum_point(const ModuliPoint& P) {
    for (const auto& q : quantum_points(P.p))
        if (proj_equal(P, q)) return true;
    return false;
}

// --- projective frame fitting ---------------------------------------------------

// The projective map sending n+2 domain points (in general position) to n+2
// image points, as an (n+1)x(n+1) matrix, unique up to scale.
inline Mat<CycNum> fit_projective(const std::vector<std::vector<CycNum>>& dom,
                                  const std::vector<std::vector<CycNum>>& img) {
    if (dom.size() < 2 || dom.size() != img.size())
        throw invalid_input("need equally many domain and image points");
    const int n1 = static_cast<int>(dom[0].size()); // n+1 coordinates
    if (static_cast<int>(dom.size()) != n1 + 1)
        throw invalid_input("need exactly n+2 points for a frame in P^n");
    auto frame_matrix = [&](const std::vector<std::vector<CycNum>>& pts) {
        Mat<CycNum> B(n1, n1);
        for (int j = 0; j < n1; ++j)
            for (int u = 0; u < n1; ++u) B(u, j) = pts[j][u];
        auto lambda = solve(B, pts[n1]);
        for (int j = 0; j < n1; ++j) {
            if (is_zero(lambda[j])) throw invalid_input("frame points are degenerate");
            for (int u = 0; u < n1; ++u) B(u, j) = B(u, j) * lambda[j];
        }
        return B;
    };
    return frame_matrix(img) * inverse(frame_matrix(dom));
}

// The matrix of the twist action of g on the parameter space, up to scale.
inline Mat<CycNum> moduli_matrix(const SL2& g, int p) {
    HeisenbergGroup G(p);
    const int n1 = (p + 1) / 2;
    std::vector<std::vector<CycNum>> dom, img;
    for (int j = 0; j <= n1; ++j) {
        std::vector<CycNum> c(n1, CycNum::zero_in(p));
        if (j < n1)
            c[j] = CycNum::scalar_in(p, Rational(1));
        else
            for (auto& x : c) x = CycNum::scalar_in(p, Rational(1));
        dom.push_back(c);
        img.push_back(twist_action_full(G, g, make_moduli_point(p, c)).image.a);
    }
    auto N = fit_projective(dom, img);
    // spot-check the fit on one more point
    std::vector<CycNum> extra(n1);
    for (int j = 0; j < n1; ++j) extra[j] = CycNum::scalar_in(p, Rational(j + 1));
    auto expect = twist_action_full(G, g, make_moduli_point(p, extra)).image;
    if (!proj_equal(make_moduli_point(p, mat_vec(N, extra)), expect))
        throw consistency_error("frame fit does not reproduce the action");
    return N;
}

// --- the quantum/hyperplane duality ----------------------------------------------

// generators of the p+1 Sylow p-subgroups: I + v (-y x) for v = (x, y) in P^1(F_p)
inline std::vector<SL2> sylow_generators(int p) {
    std::vector<SL2> gens;
    gens.push_back(make_sl2(p, 1, 0, 1, 1)); // v = (0, 1)
    for (int y = 0; y < p; ++y) gens.push_back(make_sl2(p, 1 - y, 1, -static_cast<long long>(y) * y, 1 + y)); // v = (1, y)
    return gens;
}

struct DualityResult {
    SL2 generator;
    std::vector<ModuliPoint> fixed_points;   // (p+1)/2 points, the input first
    std::vector<CycNum> hyperplane_normal;   // annihilator of the non-input fixed points
};

inline DualityResult duality_map(const ModuliPoint& Q) {
    const int p = Q.p;
    if (!is_quantum_point(Q)) throw invalid_input("duality is defined on quantum points only");
    HeisenbergGroup G(p);
    const int n1 = (p + 1) / 2;

    SL2 gen = sl2_identity(p);
    bool found = false;
    for (const auto& g : sylow_generators(p)) {
        if (proj_equal(twist_action_full(G, g, Q).image, Q)) {
            gen = g;
            found = true;
            break;
        }
    }
    if (!found) throw consistency_error("no Sylow generator fixes the point");

    auto N = moduli_matrix(gen, p);
    // normalize so the eigenvalue on Q is 1; then N^p must be scalar-free identity
    auto NQ = mat_vec(N, normalize(Q).a);
    auto Qn = normalize(Q).a;
    CycNum mu;
    bool mu_set = false;
    for (int j = 0; j < n1 && !mu_set; ++j)
        if (!is_zero(Qn[j])) {
            mu = NQ[j] / Qn[j];
            mu_set = true;
        }
    if (!mu_set || is_zero(mu)) throw consistency_error("generator does not act on the point");
    {
        CycNum imu = inv(mu);
        for (auto& x : N.a) x *= imu;
    }
    if (!detail::is_zero_mat(mat_pow(N, p) - Mat<CycNum>::identity(n1)))
        throw consistency_error("normalized action is not of order p");

    DualityResult out;
    out.generator = gen;
    out.fixed_points.push_back(normalize(Q));
    std::vector<std::vector<CycNum>> others;
    for (int m = 0; m < p; ++m) {
        auto shifted = N - detail::scaled_identity(n1, CycNum::root_power(p, m));
        for (auto& v : nullspace(shifted)) {
            auto pt = make_moduli_point(p, detail::in_field(v, p));
            if (proj_equal(pt, Q)) continue;
            out.fixed_points.push_back(normalize(pt));
            others.push_back(normalize(pt).a);
        }
    }
    if (static_cast<int>(out.fixed_points.size()) != n1)
        throw consistency_error("expected (p+1)/2 fixed parameter points");

    auto ker = nullspace(Mat<CycNum>::from_rows(others));
    if (ker.size() != 1) throw consistency_error("fixed points do not span a hyperplane");
    out.hyperplane_normal = detail::in_field(ker[0], p);
    return out;
}

} // namespace hclif
