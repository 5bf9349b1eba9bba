#pragma once
#include <vector>
#include <string>
#include <numeric>

#include "error.hpp"

namespace hclif {

enum class MonomialOrder { grevlex, grlex, lex };

inline std::string to_string(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::grevlex: return "grevlex";
        case MonomialOrder::grlex:   return "grlex";
        case MonomialOrder::lex:     return "lex";
    }
    return "?";
}

inline MonomialOrder parse_order(const std::string& s) {
    if (s == "grevlex") return MonomialOrder::grevlex;
    if (s == "grlex")   return MonomialOrder::grlex;
    if (s == "lex")     return MonomialOrder::lex;
    throw invalid_input("unknown monomial order: '" + s + "'");
}

struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial var(int nvars, int i, int k = 1) {
        Monomial m(nvars);
        m.e[i] = k;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (int x : e) if (x != 0) return false;
        return true;
    }
};

inline bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
inline bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] -= a.e[i];
        if (r.e[i] < 0) throw math_error("monomial quotient is not a monomial");
    }
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

// -1, 0, +1 for a < b, a == b, a > b under the given order.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder o) {
    switch (o) {
        case MonomialOrder::lex: {
            for (std::size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        case MonomialOrder::grlex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        case MonomialOrder::grevlex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder o) {
    return mono_cmp(a, b, o) < 0;
}

// "x0^2*x3" style with the given variable names; "1" for the unit.
inline std::string mono_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::vector<std::string> default_names(int nvars, const std::string& stem) {
    std::vector<std::string> v;
    v.reserve(nvars);
    for (int i = 0; i < nvars; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

} // namespace hclif
