#pragma once
#include <functional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "linalg.hpp"

namespace hclif {

// Group element in normal form z^r e1^s e2^t, exponents in [0, p).
struct Heis {
    int r = 0, s = 0, t = 0;
};

inline bool operator==(const Heis& a, const Heis& b) { return a.r == b.r && a.s == b.s && a.t == b.t; }
inline bool operator!=(const Heis& a, const Heis& b) { return !(a == b); }

// Extraspecial group of order p^3 and exponent p, presented on generators
// e1, e2 with central commutator z = e1 e2 e1^{-1} e2^{-1}.
struct HeisenbergGroup {
    int p;

    explicit HeisenbergGroup(int p_) : p(p_) {
        if (!is_prime(p_) || p_ == 2) throw invalid_input("group needs an odd prime, got " + std::to_string(p_));
    }

    Heis id() const { return {0, 0, 0}; }
    Heis z(int r = 1) const { return {mod_p(r, p), 0, 0}; }
    Heis e1(int s = 1) const { return {0, mod_p(s, p), 0}; }
    Heis e2(int t = 1) const { return {0, 0, mod_p(t, p)}; }
    Heis make(int r, int s, int t) const { return {mod_p(r, p), mod_p(s, p), mod_p(t, p)}; }

    // e1 e2 = z e2 e1, so e2^t e1^{s'} = z^{-t s'} e1^{s'} e2^t.
    Heis mul(const Heis& a, const Heis& b) const {
        return make(a.r + b.r - a.t * b.s, a.s + b.s, a.t + b.t);
    }

    Heis inv(const Heis& a) const { return make(-a.r - a.s * a.t, -a.s, -a.t); }

    Heis pow(Heis a, long long k) const {
        k = mod_p(k, p); // exponent p
        Heis r = id();
        while (k > 0) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    Heis commutator(const Heis& a, const Heis& b) const {
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }

    Heis conjugate(const Heis& g, const Heis& h) const { return mul(mul(g, h), inv(g)); }

    bool is_central(const Heis& a) const { return a.s == 0 && a.t == 0; }

    std::vector<Heis> elements() const {
        std::vector<Heis> out;
        out.reserve(p * p * p);
        for (int r = 0; r < p; ++r)
            for (int s = 0; s < p; ++s)
                for (int t = 0; t < p; ++t) out.push_back({r, s, t});
        return out;
    }

    // Classes: p central singletons {z^r}, then one class of size p for each
    // (s,t) != (0,0) collecting all central parts.
    int num_classes() const { return p * p + p - 1; }

    int class_index(const Heis& h) const {
        if (is_central(h)) return h.r;
        return p + h.s * p + h.t - 1;
    }

    std::vector<Heis> class_reps() const {
        std::vector<Heis> reps;
        reps.reserve(num_classes());
        for (int r = 0; r < p; ++r) reps.push_back({r, 0, 0});
        for (int s = 0; s < p; ++s)
            for (int t = 0; t < p; ++t)
                if (s || t) reps.push_back({0, s, t});
        return reps;
    }

    std::vector<int> class_sizes() const {
        std::vector<int> sz(num_classes(), p);
        for (int r = 0; r < p; ++r) sz[r] = 1;
        return sz;
    }
};

// p-dimensional module V_i (i nonzero mod p): e1 shifts the basis x_j -> x_{j-1}
// (indices mod p), e2 scales x_j by w^{ij}, z acts by w^i.
inline Mat<CycNum> rep_matrix_V(const HeisenbergGroup& G, int i, const Heis& h) {
    const int p = G.p;
    if (mod_p(i, p) == 0) throw invalid_input("module index must be nonzero mod p");
    Mat<CycNum> m(p, p);
    for (int j = 0; j < p; ++j) {
        // e2^t then e1^s then z^r on x_j
        CycNum c = CycNum::root_power(p, static_cast<long long>(i) * (h.r + static_cast<long long>(h.t) * j));
        m(mod_p(j - h.s, p), j) = c;
    }
    return m;
}

// One-dimensional module W_{ab}: e1 -> w^a, e2 -> w^b, z -> 1.
inline CycNum rep_scalar_W(const HeisenbergGroup& G, int a, int b, const Heis& h) {
    return CycNum::root_power(G.p, static_cast<long long>(a) * h.s + static_cast<long long>(b) * h.t);
}

// Full character table.  Irreducible order: W(0,0), W(0,1), ..., W(p-1,p-1)
// (a-major), then V(1), ..., V(p-1).
struct CharacterTable {
    int p = 0;
    std::vector<Heis> reps;
    std::vector<int> sizes;
    std::vector<std::string> names;
    std::vector<int> dims;
    std::vector<std::vector<CycNum>> chars; // chars[k][c] = value on class c
};

inline CharacterTable character_table(const HeisenbergGroup& G) {
    const int p = G.p;
    CharacterTable T;
    T.p = p;
    T.reps = G.class_reps();
    T.sizes = G.class_sizes();
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            std::vector<CycNum> row;
            row.reserve(T.reps.size());
            for (const auto& h : T.reps) row.push_back(rep_scalar_W(G, a, b, h));
            T.names.push_back("W(" + std::to_string(a) + "," + std::to_string(b) + ")");
            T.dims.push_back(1);
            T.chars.push_back(std::move(row));
        }
    for (int i = 1; i < p; ++i) {
        std::vector<CycNum> row;
        row.reserve(T.reps.size());
        for (const auto& h : T.reps) {
            if (G.is_central(h))
                row.push_back(CycNum(p) * CycNum::root_power(p, static_cast<long long>(i) * h.r));
            else
                row.push_back(CycNum::zero_in(p));
        }
        T.names.push_back("V(" + std::to_string(i) + ")");
        T.dims.push_back(p);
        T.chars.push_back(std::move(row));
    }
    return T;
}

// <f, g> = (1/|G|) sum over classes of |class| * f * conj(g).
inline CycNum inner_product(const CharacterTable& T, const std::vector<CycNum>& f,
                            const std::vector<CycNum>& g) {
    CycNum acc = CycNum::zero_in(T.p);
    for (std::size_t c = 0; c < T.reps.size(); ++c)
        acc += CycNum(T.sizes[c]) * f[c] * conj(g[c]);
    return acc / CycNum(T.p * T.p * T.p);
}

// Multiplicity of each irreducible in the class function f.
inline std::vector<Rational> decompose(const CharacterTable& T, const std::vector<CycNum>& f) {
    std::vector<Rational> mult;
    mult.reserve(T.chars.size());
    for (const auto& chi : T.chars) {
        CycNum m = inner_product(T, f, chi);
        if (!is_rational(m))
            throw consistency_error("irrational multiplicity in character decomposition");
        mult.push_back(rational_value(m));
    }
    return mult;
}

// As above but demands genuine non-negative integer multiplicities.
inline std::vector<long long> decompose_integral(const CharacterTable& T,
                                                 const std::vector<CycNum>& f) {
    auto mult = decompose(T, f);
    std::vector<long long> out;
    out.reserve(mult.size());
    for (const auto& m : mult) {
        if (denominator(m) != 1 || m < 0)
            throw consistency_error("character is not a non-negative integral combination");
        out.push_back(static_cast<long long>(numerator(m)));
    }
    return out;
}

inline std::vector<CycNum> pointwise_product(const std::vector<CycNum>& f,
                                             const std::vector<CycNum>& g) {
    std::vector<CycNum> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * g[i];
    return r;
}

namespace detail {

// chi(g^m) for every class rep g and 1 <= m <= kmax.
inline std::vector<std::vector<CycNum>> power_sums(const HeisenbergGroup& G,
                                                   const std::vector<CycNum>& chi, int kmax) {
    auto reps = G.class_reps();
    std::vector<std::vector<CycNum>> ps(kmax + 1,
                                        std::vector<CycNum>(reps.size(), CycNum::zero_in(G.p)));
    for (std::size_t c = 0; c < reps.size(); ++c) {
        Heis g = G.id();
        for (int m = 1; m <= kmax; ++m) {
            g = G.mul(g, reps[c]);
            ps[m][c] = chi[G.class_index(g)];
        }
    }
    return ps;
}

} // namespace detail

// Characters of the exterior powers Lambda^0..Lambda^kmax via Newton's
// identities: k*e_k = sum_{m=1..k} (-1)^{m-1} e_{k-m} p_m.
inline std::vector<std::vector<CycNum>> exterior_power_characters(const HeisenbergGroup& G,
                                                                  const std::vector<CycNum>& chi,
                                                                  int kmax) {
    auto ps = detail::power_sums(G, chi, kmax);
    std::size_t nc = chi.size();
    std::vector<std::vector<CycNum>> e(kmax + 1, std::vector<CycNum>(nc, CycNum::zero_in(G.p)));
    for (std::size_t c = 0; c < nc; ++c) e[0][c] = CycNum::scalar_in(G.p, Rational(1));
    for (int k = 1; k <= kmax; ++k)
        for (std::size_t c = 0; c < nc; ++c) {
            CycNum acc = CycNum::zero_in(G.p);
            for (int m = 1; m <= k; ++m) {
                CycNum term = e[k - m][c] * ps[m][c];
                acc += (m % 2 == 1) ? term : -term;
            }
            e[k][c] = acc / CycNum(k);
        }
    return e;
}

// Characters of the symmetric powers S^0..S^kmax: k*h_k = sum h_{k-m} p_m.
inline std::vector<std::vector<CycNum>> symmetric_power_characters(const HeisenbergGroup& G,
                                                                   const std::vector<CycNum>& chi,
                                                                   int kmax) {
    auto ps = detail::power_sums(G, chi, kmax);
    std::size_t nc = chi.size();
    std::vector<std::vector<CycNum>> h(kmax + 1, std::vector<CycNum>(nc, CycNum::zero_in(G.p)));
    for (std::size_t c = 0; c < nc; ++c) h[0][c] = CycNum::scalar_in(G.p, Rational(1));
    for (int k = 1; k <= kmax; ++k)
        for (std::size_t c = 0; c < nc; ++c) {
            CycNum acc = CycNum::zero_in(G.p);
            for (int m = 1; m <= k; ++m) acc += h[k - m][c] * ps[m][c];
            h[k][c] = acc / CycNum(k);
        }
    return h;
}

} // namespace hclif
