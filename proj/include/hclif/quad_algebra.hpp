#pragma once
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "linalg.hpp"

namespace hclif {

// Quadratic algebra T(V)/(R): V with basis x_0..x_{n-1} over Q(w_p), R a
// space of degree-2 relation tensors.  A relation is stored as a dense
// vector r of length n*n with r[u*n+v] the coefficient of x_u x_v.  Each
// generator carries a Z_p weight; relations must be weight-homogeneous,
// which lets the graded computations run blockwise per weight class.
struct QuadraticAlgebra {
    int p = 0;
    int n = 0;
    std::vector<int> weights;                // size n, entries in [0,p)
    std::vector<std::vector<CycNum>> rel;    // canonical RREF rows, each length n*n
    std::vector<int> rel_weight;             // weight class of each canonical relation

    int pair_weight(int u, int v) const { return mod_p(weights[u] + weights[v], p); }
};

inline QuadraticAlgebra make_quadratic_algebra(int p, int n, std::vector<int> weights,
                                               const std::vector<std::vector<CycNum>>& relations) {
    QuadraticAlgebra A;
    A.p = p;
    A.n = n;
    if (weights.empty()) weights.assign(n, 0);
    if (static_cast<int>(weights.size()) != n) throw invalid_input("weight count != generator count");
    for (int& w : weights) w = mod_p(w, p);
    A.weights = std::move(weights);

    RowBasis<CycNum> rb(n * n);
    for (const auto& r : relations) {
        if (static_cast<int>(r.size()) != n * n) throw invalid_input("relation vector has wrong length");
        rb.add(r);
    }
    A.rel = rb.rows;
    for (const auto& r : A.rel) {
        int w = -1;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (is_zero(r[u * n + v])) continue;
                int pw = A.pair_weight(u, v);
                if (w < 0) w = pw;
                if (pw != w) throw consistency_error("relation is not weight-homogeneous");
            }
        A.rel_weight.push_back(w < 0 ? 0 : w);
    }
    return A;
}

inline Mat<CycNum> relation_matrix(const QuadraticAlgebra& A) {
    Mat<CycNum> m(static_cast<int>(A.rel.size()), A.n * A.n);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = A.rel[i][j];
    return m;
}

// Same relation span (canonical forms are directly comparable).
inline bool same_algebra(const QuadraticAlgebra& a, const QuadraticAlgebra& b) {
    return a.p == b.p && a.n == b.n && a.weights == b.weights && a.rel == b.rel;
}

// Quadratic dual on V*: relations = annihilator of R under the pairing
// <x*_u x*_v, x_a x_b> = delta_{ua} delta_{vb}; generator weights negate.
inline QuadraticAlgebra koszul_dual(const QuadraticAlgebra& A) {
    std::vector<int> wts(A.n);
    for (int i = 0; i < A.n; ++i) wts[i] = mod_p(-A.weights[i], A.p);
    return make_quadratic_algebra(A.p, A.n, std::move(wts), nullspace(relation_matrix(A)));
}

// g acting on V by M (columns = images of basis vectors); returns whether
// the induced map g (x) g maps R into itself, i.e. g is an automorphism of A.
inline bool preserves_relations(const QuadraticAlgebra& A, const Mat<CycNum>& M) {
    RowBasis<CycNum> rb(A.n * A.n);
    for (const auto& r : A.rel) rb.add(r);
    for (const auto& r : A.rel) {
        std::vector<CycNum> img(A.n * A.n, CycNum::zero_in(A.p));
        for (int u = 0; u < A.n; ++u)
            for (int v = 0; v < A.n; ++v) {
                if (is_zero(r[u * A.n + v])) continue;
                for (int a = 0; a < A.n; ++a) {
                    if (is_zero(M(a, u))) continue;
                    for (int b = 0; b < A.n; ++b) {
                        if (is_zero(M(b, v))) continue;
                        img[a * A.n + b] += r[u * A.n + v] * M(a, u) * M(b, v);
                    }
                }
            }
        if (!rb.contains(img)) return false;
    }
    return true;
}

inline Mat<CycNum> contragredient(const Mat<CycNum>& M) { return transpose(inverse(M)); }

// Graded pieces A_0, A_1, ... computed by the quotient recursion
// A_d = (V (x) A_{d-1}) / image(R (x) A_{d-2}), with elimination done one
// weight class at a time.  Each level keeps a multiplication table
// expressing x_v * b_m in the next basis, which drives both the recursion
// and group-action matrices.
class GradedAlgebra {
public:
    struct Level {
        int dim = 0;
        std::vector<int> weight;                 // per basis element
        std::vector<std::pair<int, int>> word;   // (generator, parent index); degree >= 1
        // mult[v][m] = x_v * b_m^{(d-1)} expressed in this level's basis
        std::vector<std::vector<std::vector<std::pair<int, CycNum>>>> mult;
    };

    explicit GradedAlgebra(QuadraticAlgebra alg, std::size_t max_total_dim = 500000)
        : alg_(std::move(alg)), max_total_dim_(max_total_dim) {}

    const QuadraticAlgebra& algebra() const { return alg_; }

    int dim(int d) {
        extend_to(d);
        return levels_[d].dim;
    }

    const Level& level(int d) {
        extend_to(d);
        return levels_[d];
    }

    void extend_to(int dmax) {
        while (static_cast<int>(levels_.size()) <= dmax) compute_next();
    }

    // Matrices of the algebra map induced by g: V -> V (columns = images) on
    // the pieces of degree 0..d.  g must preserve the relations.
    std::vector<Mat<CycNum>> action_chain(int d, const Mat<CycNum>& M) {
        extend_to(d);
        std::vector<Mat<CycNum>> out;
        Mat<CycNum> cur(1, 1);
        cur(0, 0) = CycNum::scalar_in(alg_.p, Rational(1));
        out.push_back(cur);
        for (int deg = 1; deg <= d; ++deg) {
            cur = lift_action(deg, M, cur);
            out.push_back(cur);
        }
        return out;
    }

    Mat<CycNum> action_matrix(int d, const Mat<CycNum>& M) { return action_chain(d, M).back(); }

    // Traces of the action across degrees 0..d.
    std::vector<CycNum> character_values(int d, const Mat<CycNum>& M) {
        auto chain = action_chain(d, M);
        std::vector<CycNum> tr;
        tr.reserve(chain.size());
        for (const auto& a : chain) {
            CycNum t = CycNum::zero_in(alg_.p);
            for (int i = 0; i < a.rows; ++i) t += a(i, i);
            tr.push_back(t);
        }
        return tr;
    }

    CycNum character_value(int d, const Mat<CycNum>& M) { return character_values(d, M)[d]; }

    // Coordinates of the product x_{w[0]} x_{w[1]} ... x_{w[k-1]} in the
    // degree-k basis (independent path for tests and base-point work).
    std::vector<CycNum> word_coords(const std::vector<int>& w) {
        int d = static_cast<int>(w.size());
        extend_to(d);
        std::vector<CycNum> cur{CycNum::scalar_in(alg_.p, Rational(1))};
        for (int step = 1; step <= d; ++step) {
            int v = w[d - step]; // multiply on the left, rightmost factor first
            const Level& L = levels_[step];
            std::vector<CycNum> nxt(L.dim, CycNum::zero_in(alg_.p));
            for (int m = 0; m < static_cast<int>(cur.size()); ++m) {
                if (is_zero(cur[m])) continue;
                for (const auto& [k, c] : L.mult[v][m]) nxt[k] += cur[m] * c;
            }
            cur = std::move(nxt);
        }
        return cur;
    }

private:
    QuadraticAlgebra alg_;
    std::size_t max_total_dim_;
    std::size_t total_dim_ = 0;
    std::vector<Level> levels_;

    Mat<CycNum> lift_action(int d, const Mat<CycNum>& M, const Mat<CycNum>& prev) {
        const Level& L = levels_[d];
        const int n = alg_.n;
        Mat<CycNum> out(L.dim, L.dim);
        for (auto& v : out.a) v = CycNum::zero_in(alg_.p);
        int prev_dim = d == 1 ? 1 : levels_[d - 1].dim;
        for (int j = 0; j < L.dim; ++j) {
            auto [i, k] = L.word[j];
            // g(b_j) = sum_u M(u,i) x_u * (prev column k)
            for (int u = 0; u < n; ++u) {
                if (is_zero(M(u, i))) continue;
                for (int l = 0; l < prev_dim; ++l) {
                    CycNum c = M(u, i) * prev(l, k);
                    if (is_zero(c)) continue;
                    for (const auto& [idx, mc] : L.mult[u][l]) out(idx, j) += c * mc;
                }
            }
        }
        return out;
    }

    void compute_next() {
        int d = static_cast<int>(levels_.size());
        const int n = alg_.n;
        const int p = alg_.p;
        Level L;
        if (d == 0) {
            L.dim = 1;
            L.weight = {0};
            levels_.push_back(std::move(L));
            total_dim_ += 1;
            return;
        }
        if (d == 1) {
            L.dim = n;
            L.weight = alg_.weights;
            L.word.resize(n);
            L.mult.assign(n, std::vector<std::vector<std::pair<int, CycNum>>>(1));
            for (int i = 0; i < n; ++i) {
                L.word[i] = {i, 0};
                L.mult[i][0] = {{i, CycNum::scalar_in(p, Rational(1))}};
            }
            levels_.push_back(std::move(L));
            total_dim_ += n;
            return;
        }

        const Level& Lm1 = levels_[d - 1];
        const Level& Lm2 = levels_[d - 2];
        const int ncols = n * Lm1.dim;

        // weight classes of the columns (i, k) -> i*dim + k
        std::vector<int> colw(ncols), pos_in_class(ncols);
        std::vector<std::vector<int>> cols_of(p);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < Lm1.dim; ++k) {
                int c = i * Lm1.dim + k;
                colw[c] = mod_p(alg_.weights[i] + Lm1.weight[k], p);
                pos_in_class[c] = static_cast<int>(cols_of[colw[c]].size());
                cols_of[colw[c]].push_back(c);
            }

        // rows of R (x) A_{d-2}, bucketed by weight class
        std::vector<std::vector<std::vector<CycNum>>> rows_of(p);
        for (std::size_t ri = 0; ri < alg_.rel.size(); ++ri) {
            const auto& r = alg_.rel[ri];
            for (int m = 0; m < Lm2.dim; ++m) {
                int w = mod_p(alg_.rel_weight[ri] + Lm2.weight[m], p);
                std::vector<CycNum> row(cols_of[w].size(), CycNum::zero_in(p));
                bool nonzero = false;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        const CycNum& cv = r[u * n + v];
                        if (is_zero(cv)) continue;
                        for (const auto& [k, mc] : Lm1.mult[v][m]) {
                            int c = u * Lm1.dim + k;
                            row[pos_in_class[c]] += cv * mc;
                            nonzero = true;
                        }
                    }
                if (nonzero) rows_of[w].push_back(std::move(row));
            }
        }

        // eliminate per class; collect pivot columns and their expressions
        std::vector<bool> is_pivot(ncols, false);
        std::vector<std::vector<std::pair<int, CycNum>>> expr(ncols); // pivot col -> sum over free cols
        for (int w = 0; w < p; ++w) {
            if (rows_of[w].empty()) continue;
            RowBasis<CycNum> rb(static_cast<int>(cols_of[w].size()));
            for (auto& row : rows_of[w]) rb.add(std::move(row));
            for (int i = 0; i < rb.rank(); ++i) {
                int local_piv = rb.pivots[i];
                int gc = cols_of[w][local_piv];
                is_pivot[gc] = true;
                auto& e = expr[gc];
                const auto& row = rb.rows[i];
                for (int j = local_piv + 1; j < static_cast<int>(row.size()); ++j)
                    if (!is_zero(row[j])) e.emplace_back(cols_of[w][j], -row[j]);
            }
        }

        // new basis = free columns in ascending global order
        std::vector<int> basis_of_col(ncols, -1);
        for (int c = 0; c < ncols; ++c) {
            if (is_pivot[c]) continue;
            basis_of_col[c] = L.dim++;
            L.weight.push_back(colw[c]);
            L.word.emplace_back(c / Lm1.dim, c % Lm1.dim);
        }
        total_dim_ += L.dim;
        if (total_dim_ > max_total_dim_)
            throw resource_limit("graded dimension budget exceeded at degree " + std::to_string(d));

        L.mult.assign(n, std::vector<std::vector<std::pair<int, CycNum>>>(Lm1.dim));
        for (int c = 0; c < ncols; ++c) {
            auto& out = L.mult[c / Lm1.dim][c % Lm1.dim];
            if (!is_pivot[c]) {
                out = {{basis_of_col[c], CycNum::scalar_in(p, Rational(1))}};
            } else {
                for (const auto& [fc, coef] : expr[c]) out.emplace_back(basis_of_col[fc], coef);
            }
        }
        levels_.push_back(std::move(L));
    }
};

// Numeric Koszul residuals r_n = sum_{j=0..n} (-1)^j dim A_{n-j} dim B_j;
// zero through the checked range when B is the Koszul dual of a Koszul A.
inline std::vector<long long> koszul_numeric_residuals(GradedAlgebra& A, GradedAlgebra& B, int upto) {
    std::vector<long long> res(upto + 1, 0);
    for (int nn = 0; nn <= upto; ++nn) {
        long long acc = 0;
        for (int j = 0; j <= nn; ++j) {
            long long term = static_cast<long long>(A.dim(nn - j)) * B.dim(j);
            acc += (j % 2 == 0) ? term : -term;
        }
        res[nn] = acc;
    }
    return res;
}

// Equivariant residual sum_j (-1)^j chi_{A_{n-j}}(g) * conj(chi_{B_j}(g));
// gB is g's action on the dual generators (contragredient of gA).
inline CycNum koszul_equivariant_residual(GradedAlgebra& A, GradedAlgebra& B, int nn,
                                          const Mat<CycNum>& gA, const Mat<CycNum>& gB) {
    auto chiA = A.character_values(nn, gA);
    auto chiB = B.character_values(nn, gB);
    CycNum acc = CycNum::zero_in(A.algebra().p);
    for (int j = 0; j <= nn; ++j) {
        CycNum t = chiA[nn - j] * conj(chiB[j]);
        acc += (j % 2 == 0) ? t : -t;
    }
    return acc;
}

} // namespace hclif
