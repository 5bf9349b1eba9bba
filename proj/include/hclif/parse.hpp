#pragma once

// Text grammar for exact coordinates.  A coordinate expression is built from
// integers, rationals "n/d", and the primitive root symbol "w", combined with
// +, -, *, ^ and parentheses.  Points are comma-separated coordinate lists;
// "inf" names the point at infinity on the p = 3 parameter line.

#include <cctype>
#include <string>
#include <vector>

#include "clifford.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace hclif {

namespace parsedetail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw invalid_input("parse error at position " + std::to_string(i) + ": " + what +
                            " in \"" + s + "\"");
    }
};

inline Integer read_integer(Cursor& cur) {
    cur.skip();
    std::size_t start = cur.i;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
    if (cur.i == start) cur.fail("expected digits");
    return Integer(cur.s.substr(start, cur.i - start));
}

inline CycNum parse_expr(Cursor& cur, int p);

inline CycNum parse_atom(Cursor& cur, int p) {
    char c = cur.peek();
    if (c == '(') {
        cur.eat('(');
        CycNum v = parse_expr(cur, p);
        if (!cur.eat(')')) cur.fail("expected ')'");
        return v;
    }
    if (c == 'w') {
        cur.eat('w');
        return CycNum::root(p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = read_integer(cur);
        if (cur.peek() == '/') {
            cur.eat('/');
            Integer den = read_integer(cur);
            if (den == 0) cur.fail("zero denominator");
            return CycNum(Rational(num, den));
        }
        return CycNum(Rational(num));
    }
    cur.fail("expected number, 'w', or '('");
}

inline CycNum parse_factor(Cursor& cur, int p) {
    if (cur.eat('-')) return -parse_factor(cur, p);
    if (cur.eat('+')) return parse_factor(cur, p);
    CycNum base = parse_atom(cur, p);
    if (cur.eat('^')) {
        bool neg = cur.eat('-');
        Integer e = read_integer(cur);
        if (e > 1000000) cur.fail("exponent too large");
        long long k = e.convert_to<long long>();
        if (neg) {
            // only the root and +-1 have cheap inverses; reduce w^-k mod p
            CycNum probe = base;
            if (probe == CycNum::root(p)) return CycNum::root_power(p, -k);
            if (probe == CycNum(1)) return base;
            if (probe == CycNum(-1)) return (k % 2 == 0) ? CycNum(1) : CycNum(-1);
            cur.fail("negative exponents are only supported on w and units");
        }
        return pow(base, k);
    }
    return base;
}

inline CycNum parse_term(Cursor& cur, int p) {
    CycNum v = parse_factor(cur, p);
    for (;;) {
        if (cur.eat('*')) {
            v = v * parse_factor(cur, p);
            continue;
        }
        // juxtaposition before 'w' or '(' reads as a product: 2w^3, 3(1+w)
        char c = cur.peek();
        if (c == 'w' || c == '(') {
            v = v * parse_factor(cur, p);
            continue;
        }
        return v;
    }
}

inline CycNum parse_expr(Cursor& cur, int p) {
    CycNum v = parse_term(cur, p);
    for (;;) {
        if (cur.eat('+'))
            v = v + parse_term(cur, p);
        else if (cur.eat('-'))
            v = v - parse_term(cur, p);
        else
            return v;
    }
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string piece;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(piece);
            piece.clear();
        } else {
            piece.push_back(c);
        }
    }
    parts.push_back(piece);
    return parts;
}

}  // namespace parsedetail

// One coordinate; the result lives in the level-p cyclotomic field.
inline CycNum parse_coordinate(const std::string& text, int p) {
    parsedetail::Cursor cur{text};
    CycNum v = parsedetail::parse_expr(cur, p);
    if (!cur.done()) cur.fail("trailing input");
    if (v.p == 0) v = CycNum::scalar_in(p, v.c[0]);
    return v;
}

// Point grammar.  Accepted shapes, with h = (p-1)/2:
//   h+1 entries  -> projective coordinates (a_0 : ... : a_h)
//   h   entries  -> affine parameters; the list fills a_h..a_1 with a_0 = 1,
//                   so "t" at p = 3 means (1 : t) and "a,b" at p = 5 means
//                   (1 : b : a) -- the last-listed parameter scales the
//                   nearest-neighbour pairing.
//   "inf"        -> (0 : 1) at p = 3
// With abc = true (p = 5 only) three entries A,B,C name the coefficients in
// the reverse order (A = a_2, B = a_1, C = a_0).
inline ModuliPoint parse_point(const std::string& text, int p, bool abc = false) {
    CycNum::check_prime(p);
    const int h = (p - 1) / 2;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (trimmed == "inf") {
        if (p != 3) throw invalid_input("'inf' names a point only on the p = 3 line");
        return p3_infinity();
    }
    auto parts = parsedetail::split_commas(text);
    std::vector<CycNum> vals;
    vals.reserve(parts.size());
    for (const auto& piece : parts) vals.push_back(parse_coordinate(piece, p));
    if (abc) {
        if (p != 5 || vals.size() != 3)
            throw invalid_input("ABC coordinates take exactly three entries at p = 5");
        return abc_point(vals[0], vals[1], vals[2]);
    }
    if (static_cast<int>(vals.size()) == h + 1) return make_moduli_point(p, vals);
    if (static_cast<int>(vals.size()) == h) {
        std::vector<CycNum> a(h + 1, CycNum::zero_in(p));
        a[0] = CycNum::scalar_in(p, Rational(1));
        for (int j = 0; j < h; ++j) a[h - j] = vals[j];
        return make_moduli_point(p, a);
    }
    throw invalid_input("expected " + std::to_string(h) + " affine or " + std::to_string(h + 1) +
                        " projective coordinates for p = " + std::to_string(p));
}

}  // namespace hclif
