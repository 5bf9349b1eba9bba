#pragma once
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace hclif {

// Hilbert series numer(t) / (1-t)^denom_pow with integer numerator.
struct HilbertSeries {
    std::vector<Integer> numer; // little-endian; no trailing zeros
    int denom_pow = 0;
};

namespace detail {

using ZPoly = std::vector<Integer>;

inline void zp_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

inline ZPoly zp_add(ZPoly a, const ZPoly& b, int shift = 0) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
    zp_trim(a);
    return a;
}

// 1 - t^e
inline ZPoly zp_one_minus_power(int e) {
    ZPoly f(e + 1, Integer(0));
    f[0] = 1;
    f[e] = -1;
    return f;
}

// Keep only minimal generators of the monomial ideal.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  int da = a.degree(), db = b.degree();
                  if (da != db) return da < db;
                  return a.e < b.e;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool covered = false;
        for (const auto& g : out)
            if (divides(g, m)) { covered = true; break; }
        if (!covered) out.push_back(m);
    }
    return out;
}

inline std::string ideal_key(const std::vector<Monomial>& gens) {
    std::string k;
    for (const auto& m : gens) {
        for (int e : m.e) {
            k += std::to_string(e);
            k += ',';
        }
        k += ';';
    }
    return k;
}

// Numerator of the Hilbert series of S/I over denominator (1-t)^nvars.
// Pivot recursion N(I) = N(I + (x)) + t * N(I : x) on a most-used variable.
inline ZPoly hilbert_numer(std::vector<Monomial> gens, int nvars,
                           std::map<std::string, ZPoly>& memo) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {Integer(1)};
    if (gens[0].is_one()) return {};

    bool all_pure = true;
    for (const auto& m : gens) {
        int nz = 0;
        for (int v = 0; v < nvars; ++v)
            if (m.e[v] > 0) ++nz;
        if (nz > 1) { all_pure = false; break; }
    }
    if (all_pure) { // distinct pure powers: product of (1 - t^{e_v})
        ZPoly r{Integer(1)};
        for (const auto& m : gens) r = zp_mul(r, zp_one_minus_power(m.degree()));
        return r;
    }

    std::string key = ideal_key(gens);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // Count variable occurrences over MIXED generators only: a pivot that
    // appears just in a pure power x^1 would leave I + (x) = I and loop.
    std::vector<int> freq(nvars, 0);
    for (const auto& m : gens) {
        int nz = 0;
        for (int v = 0; v < nvars; ++v)
            if (m.e[v] > 0) ++nz;
        if (nz < 2) continue;
        for (int v = 0; v < nvars; ++v)
            if (m.e[v] > 0) ++freq[v];
    }
    int pv = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    // I + (x_pv): drop every generator containing x_pv, add x_pv itself
    std::vector<Monomial> plus{Monomial::var(nvars, pv)};
    for (const auto& m : gens)
        if (m.e[pv] == 0) plus.push_back(m);
    // I : x_pv: x_pv-exponents decremented where positive
    std::vector<Monomial> colon;
    for (auto m : gens) {
        if (m.e[pv] > 0) --m.e[pv];
        colon.push_back(std::move(m));
    }

    ZPoly r = zp_add(hilbert_numer(std::move(plus), nvars, memo),
                     hilbert_numer(std::move(colon), nvars, memo), /*shift=*/1);
    memo.emplace(std::move(key), r);
    return r;
}

} // namespace detail

// Hilbert series of S/(lead) in lowest terms: numerator not divisible by
// (1-t), denominator (1-t)^denom_pow.
inline HilbertSeries hilbert_series(const std::vector<Monomial>& lead, int nvars) {
    std::map<std::string, detail::ZPoly> memo;
    HilbertSeries hs;
    hs.numer = detail::hilbert_numer(lead, nvars, memo);
    hs.denom_pow = nvars;
    if (hs.numer.empty()) { // zero ring
        hs.denom_pow = 0;
        return hs;
    }
    auto at_one = [&] {
        Integer s = 0;
        for (const auto& c : hs.numer) s += c;
        return s;
    };
    while (hs.denom_pow > 0 && at_one() == 0) {
        // synthetic division by (1 - t): q_i = h_i + q_{i-1}
        detail::ZPoly q(hs.numer.size() - 1, Integer(0));
        Integer carry = 0;
        for (std::size_t i = 0; i + 1 < hs.numer.size(); ++i) {
            carry += hs.numer[i];
            q[i] = carry;
        }
        detail::zp_trim(q);
        hs.numer = std::move(q);
        --hs.denom_pow;
        if (hs.numer.empty()) { hs.denom_pow = 0; break; }
    }
    return hs;
}

// Coefficients of the series through degree `upto` inclusive.
inline std::vector<Integer> expand(const HilbertSeries& hs, int upto) {
    std::vector<Integer> out(upto + 1, Integer(0));
    // 1/(1-t)^d has coefficients C(k+d-1, d-1)
    std::vector<Integer> base(upto + 1, Integer(0));
    if (hs.denom_pow == 0) {
        base[0] = 1;
    } else {
        base[0] = 1;
        for (int k = 1; k <= upto; ++k)
            base[k] = base[k - 1] * (k + hs.denom_pow - 1) / k;
    }
    for (std::size_t i = 0; i < hs.numer.size(); ++i) {
        if (hs.numer[i] == 0) continue;
        for (int k = static_cast<int>(i); k <= upto; ++k)
            out[k] += hs.numer[i] * base[k - static_cast<int>(i)];
    }
    return out;
}

// Power-series expansion of numer(t)/denom(t); denom[0] must be nonzero.
inline std::vector<Rational> expand_rational(const std::vector<Rational>& numer,
                                             const std::vector<Rational>& denom, int upto) {
    if (denom.empty() || denom[0].is_zero())
        throw math_error("series denominator has zero constant term");
    std::vector<Rational> c(upto + 1, Rational(0));
    for (int k = 0; k <= upto; ++k) {
        Rational acc = k < static_cast<int>(numer.size()) ? numer[k] : Rational(0);
        for (int i = 1; i <= k && i < static_cast<int>(denom.size()); ++i)
            acc -= denom[i] * c[k - i];
        c[k] = acc / denom[0];
    }
    return c;
}

// Projective dimension (-1 for empty) and degree read off the reduced series.
struct ProjectiveProfile {
    int dim = -1;
    Integer degree = 0;
};

inline ProjectiveProfile projective_profile(const HilbertSeries& hs) {
    ProjectiveProfile pr;
    pr.dim = hs.denom_pow - 1;
    pr.degree = 0;
    for (const auto& c : hs.numer) pr.degree += c;
    return pr;
}

inline std::string to_string(const HilbertSeries& hs) {
    std::string n;
    for (std::size_t i = 0; i < hs.numer.size(); ++i) {
        const Integer& c = hs.numer[i];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        std::string term;
        if (i == 0) {
            term = mag.str();
        } else {
            std::string tpow = i == 1 ? "t" : "t^" + std::to_string(i);
            term = (mag == 1) ? tpow : mag.str() + "*" + tpow;
        }
        if (n.empty())
            n = (c < 0 ? "-" : "") + term;
        else
            n += (c < 0 ? "-" : "+") + term;
    }
    if (n.empty()) n = "0";
    if (hs.denom_pow == 0) return n;
    std::string d = hs.denom_pow == 1 ? "(1-t)" : "(1-t)^" + std::to_string(hs.denom_pow);
    return "(" + n + ")/" + d;
}

} // namespace hclif
