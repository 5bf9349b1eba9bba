#pragma once
#include <string>
#include <vector>

#include "heisenberg.hpp"
#include "quad_algebra.hpp"

namespace hclif {

// --- truncated power-series helpers over an exact field -----------------------

template <class F>
inline std::vector<F> poly_mul_trunc(const std::vector<F>& a, const std::vector<F>& b, int upto) {
    std::vector<F> r(upto + 1, F(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= upto; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= upto; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

template <class F>
inline std::vector<F> poly_pow_trunc(const std::vector<F>& a, int e, int upto) {
    std::vector<F> r{F(1)};
    r.resize(upto + 1, F(0));
    std::vector<F> base = a;
    while (e > 0) {
        if (e & 1) r = poly_mul_trunc(r, base, upto);
        base = poly_mul_trunc(base, base, upto);
        e >>= 1;
    }
    return r;
}

// numer(t)/denom(t) as a power series; denom(0) must be invertible
template <class F>
inline std::vector<F> series_quotient(const std::vector<F>& numer, const std::vector<F>& denom,
                                      int upto) {
    if (denom.empty() || is_zero(denom[0]))
        throw math_error("series denominator has zero constant term");
    F d0inv = inv(denom[0]);
    std::vector<F> c(upto + 1, F(0));
    for (int k = 0; k <= upto; ++k) {
        F acc = k < static_cast<int>(numer.size()) ? numer[k] : F(0);
        for (int i = 1; i <= k && i < static_cast<int>(denom.size()); ++i)
            acc -= denom[i] * c[k - i];
        c[k] = acc * d0inv;
    }
    return c;
}

// --- closed-form graded character predictions ----------------------------------

// The graded pieces these formulas describe, for the standard p-dimensional
// module with its weight grading.
enum class SeriesModel {
    tensor_algebra,      // T(V)
    exterior_algebra,    // Lambda(V)
    symmetric_algebra,   // S(V)
    clifford_algebra,    // regular family member
    squares_subalgebra,  // C[x_0^2, ..., x_{p-1}^2]
    center               // predicted center of a regular member
};

// Truncated character series of the model at the class of h.  Central classes
// z^k get the omega^k closed forms; every non-central class shares one series.
inline std::vector<CycNum> predicted_series(SeriesModel model, const HeisenbergGroup& G,
                                            const Heis& h, int upto) {
    const int p = G.p;
    auto cyc = [&](long long k) { return CycNum::root_power(p, k); };
    auto one = CycNum::scalar_in(p, Rational(1));
    auto zero = CycNum::zero_in(p);
    std::vector<CycNum> out(upto + 1, zero);
    if (G.is_central(h)) {
        long long k = h.r;
        switch (model) {
        case SeriesModel::tensor_algebra: {
            // 1/(1 - p w^k t)
            CycNum cur = one;
            for (int n = 0; n <= upto; ++n) {
                out[n] = cur;
                cur = cur * CycNum(p) * cyc(k);
            }
            return out;
        }
        case SeriesModel::exterior_algebra: // (1 + w^k t)^p
            return poly_pow_trunc<CycNum>({one, cyc(k)}, p, upto);
        case SeriesModel::symmetric_algebra:
        case SeriesModel::clifford_algebra: // 1/(1 - w^k t)^p
            return series_quotient<CycNum>({one}, poly_pow_trunc<CycNum>({one, -cyc(k)}, p, upto),
                                           upto);
        case SeriesModel::squares_subalgebra: // 1/(1 - w^{2k} t^2)^p
            return series_quotient<CycNum>(
                {one}, poly_pow_trunc<CycNum>({one, zero, -cyc(2 * k)}, p, upto), upto);
        case SeriesModel::center: { // (1 + t^p)/(1 - w^{2k} t^2)^p
            std::vector<CycNum> numer(p + 1, zero);
            numer[0] = one;
            numer[p] = one;
            return series_quotient<CycNum>(
                numer, poly_pow_trunc<CycNum>({one, zero, -cyc(2 * k)}, p, upto), upto);
        }
        }
    } else {
        switch (model) {
        case SeriesModel::tensor_algebra: // 1
            out[0] = one;
            return out;
        case SeriesModel::exterior_algebra: // 1 + t^p
            out[0] = one;
            if (upto >= p) out[p] = one;
            return out;
        case SeriesModel::symmetric_algebra:
        case SeriesModel::clifford_algebra:
        case SeriesModel::center: // 1/(1 - t^p)
            for (int n = 0; n <= upto; n += p) out[n] = one;
            return out;
        case SeriesModel::squares_subalgebra: // 1/(1 - t^{2p})
            for (int n = 0; n <= upto; n += 2 * p) out[n] = one;
            return out;
        }
    }
    throw math_error("unreachable series model");
}

// --- numeric character series of a graded quadratic algebra --------------------

// Per-conjugacy-class truncated character series: coeff[c][n] is the trace of
// the class-c representative acting on the degree-n piece.
struct CharacterSeries {
    int p = 0;
    int upto = 0;
    std::vector<Heis> reps;
    std::vector<std::vector<CycNum>> coeff;
};

// The action of h on the generators: the standard module matrix for the primal
// side, its contragredient for the Koszul-dual side.
inline Mat<CycNum> generator_action(const HeisenbergGroup& G, const Heis& h, bool dual_side) {
    auto M = rep_matrix_V(G, 1, h);
    return dual_side ? contragredient(M) : M;
}

inline CharacterSeries character_series(GradedAlgebra& A, const HeisenbergGroup& G, int upto,
                                        bool dual_side = false) {
    if (A.algebra().p != G.p) throw invalid_input("algebra and group prime mismatch");
    CharacterSeries cs;
    cs.p = G.p;
    cs.upto = upto;
    cs.reps = G.class_reps();
    cs.coeff.reserve(cs.reps.size());
    for (const auto& h : cs.reps)
        cs.coeff.push_back(A.character_values(upto, generator_action(G, h, dual_side)));
    return cs;
}

// Truncated Koszul identity residuals per class: coefficients of
// Ch_A(g,t) * conj(Ch_B(g,-t)) - 1 for B the Koszul dual of A.
inline std::vector<std::vector<CycNum>> koszul_identity_residuals(GradedAlgebra& A,
                                                                  GradedAlgebra& B,
                                                                  const HeisenbergGroup& G,
                                                                  int upto) {
    auto reps = G.class_reps();
    std::vector<std::vector<CycNum>> res;
    res.reserve(reps.size());
    for (const auto& h : reps) {
        auto gA = generator_action(G, h, false);
        auto gB = generator_action(G, h, true);
        std::vector<CycNum> row(upto + 1, CycNum::zero_in(G.p));
        for (int n = 0; n <= upto; ++n) row[n] = koszul_equivariant_residual(A, B, n, gA, gB);
        row[0] -= CycNum::scalar_in(G.p, Rational(1));
        res.push_back(std::move(row));
    }
    return res;
}

// Closed-form predicted character series of the center of a regular member.
inline CharacterSeries center_series_prediction(const HeisenbergGroup& G, int upto) {
    CharacterSeries cs;
    cs.p = G.p;
    cs.upto = upto;
    cs.reps = G.class_reps();
    for (const auto& h : cs.reps)
        cs.coeff.push_back(predicted_series(SeriesModel::center, G, h, upto));
    return cs;
}

} // namespace hclif
