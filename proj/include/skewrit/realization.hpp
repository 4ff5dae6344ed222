#ifndef SKEWRIT_REALIZATION_HPP
#define SKEWRIT_REALIZATION_HPP

#include <optional>
#include <vector>

#include "skewrit/genlin.hpp"
#include "skewrit/pencil.hpp"

namespace skewrit {

struct NotDefinedAtShift : std::domain_error {
    NotDefinedAtShift() : std::domain_error("pencil is singular at the shift point") {}
};

// Recognizable generalized series c (I - M)^{-1} b = sum_k c M^k b over the
// m x m coefficient algebra, expanded around the shift tuple.
template <class F>
struct LinearRep {
    size_t s = 0;
    size_t m = 0;
    int nvars = 0;
    std::vector<Mat<F>> c;                       // s blocks, row
    std::vector<std::vector<GenLinForm<F>>> M;   // s x s
    std::vector<Mat<F>> b;                       // s blocks, column
    std::vector<Mat<F>> shift;
};

// Writes L(x + u) = L(u) + L_lin(x), factors out L(u)^{-1}, and reads off the
// Neumann series: c is the coordinate block-row of the pencil's output row, b
// the matching block-column of L(u)^{-1}.
template <class F>
LinearRep<F> realize_shifted(const FormulaPtr& f, const std::vector<Mat<F>>& u, size_t m,
                             const F& like) {
    LinearPencil L = build_pencil(f);
    Mat<F> lu = pencil_at(L, u, m, like);
    auto elim = eliminate(lu, true);
    if (!elim.inverse) throw NotDefinedAtShift();
    const Mat<F>& linv = *elim.inverse;

    LinearRep<F> rep;
    rep.s = L.size;
    rep.m = m;
    rep.nvars = L.nvars;
    rep.shift = u;
    Mat<F> im = Mat<F>::identity(m, like);
    Mat<F> zm = Mat<F>::zero(m, m, like);
    for (size_t k1 = 0; k1 < L.size; ++k1) {
        rep.c.push_back(k1 == L.out_i ? im : zm);
        rep.b.push_back(linv.block(k1 + 1, L.out_j + 1, m));
    }
    rep.M.assign(L.size, std::vector<GenLinForm<F>>(L.size));
    auto lift = [&](const Rat& r) { return from_rat(like, r); };
    for (int k = 1; k <= L.nvars; ++k) {
        const Mat<Rat>& ak = L.mats[static_cast<size_t>(k)];
        if (ak.is_zero()) continue;
        Mat<F> g = -(linv * kron(ak.map(lift), im));
        for (size_t k1 = 0; k1 < L.size; ++k1)
            for (size_t k2 = 0; k2 < L.size; ++k2) {
                Mat<F> blk = g.block(k1 + 1, k2 + 1, m);
                if (blk.is_zero()) continue;
                rep.M[k1][k2].summands.push_back({std::move(blk), k, im});
            }
    }
    return rep;
}

// Generalized ABP computing the homogeneous degree-d part c M^d b.
template <class F>
GenABP<F> truncate(const LinearRep<F>& rep, size_t d) {
    GenABP<F> abp;
    abp.width = rep.s;
    abp.coeff_dim = rep.m;
    abp.c = rep.c;
    abp.b = rep.b;
    for (size_t k = 0; k < d; ++k) abp.layers.push_back(rep.M);
    return abp;
}

struct ZeroTestVerdict {
    bool zero;
    size_t degree;  // least nonzero degree when zero == false
};

namespace detail {

// Echelon-form row space over F with deterministic pivots.
template <class F>
class RowSpace {
public:
    bool add(std::vector<F> row) {
        for (auto& [piv, basis] : rows_) {
            if (piv >= row.size()) continue;
            if (detail::scalar_is_zero(row[piv])) continue;
            F factor = row[piv];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= factor * basis[j];
        }
        size_t piv = row.size();
        for (size_t j = 0; j < row.size(); ++j)
            if (!detail::scalar_is_zero(row[j])) {
                piv = j;
                break;
            }
        if (piv == row.size()) return false;
        F lead_inv = inv(row[piv]);
        for (auto& a : row) a = a * lead_inv;
        rows_.push_back({piv, std::move(row)});
        return true;
    }
    const std::vector<std::pair<size_t, std::vector<F>>>& rows() const { return rows_; }
    size_t dim() const { return rows_.size(); }

private:
    std::vector<std::pair<size_t, std::vector<F>>> rows_;
};

}  // namespace detail

// Flattened weighted-automaton view of psi(rep): the per-variable, per-matrix-
// unit transition matrices of the noncommutative ABPs computing the entries of
// psi(S^{d}).
template <class F>
struct PsiAutomaton {
    size_t dim;                      // s * m
    size_t m;
    std::vector<std::vector<F>> c_rows;   // m rows of length dim
    std::vector<std::vector<F>> b_cols;   // m columns of length dim
    std::vector<Mat<F>> transitions;      // one per (i, j, var) triple
};

template <class F>
PsiAutomaton<F> psi_automaton(const LinearRep<F>& rep, const F& like) {
    size_t s = rep.s, m = rep.m, dim = s * m;
    PsiAutomaton<F> out;
    out.dim = dim;
    out.m = m;
    out.c_rows.assign(m, std::vector<F>(dim, zero_like(like)));
    out.b_cols.assign(m, std::vector<F>(dim, zero_like(like)));
    for (size_t k1 = 0; k1 < s; ++k1)
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                out.c_rows[i][k1 * m + j] = rep.c[k1].at(i, j);
                out.b_cols[j][k1 * m + i] = rep.b[k1].at(i, j);
            }
    // transition for z_{i,j,k}: block (k1,k2) += a[:,i] * b[j,:] per summand
    for (int k = 1; k <= rep.nvars; ++k)
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                Mat<F> t = Mat<F>::zero(dim, dim, like);
                bool touched = false;
                for (size_t k1 = 0; k1 < s; ++k1)
                    for (size_t k2 = 0; k2 < s; ++k2)
                        for (const auto& su : rep.M[k1][k2].summands) {
                            if (su.var != k) continue;
                            touched = true;
                            for (size_t r = 0; r < m; ++r)
                                for (size_t c2 = 0; c2 < m; ++c2)
                                    t.at(k1 * m + r, k2 * m + c2) +=
                                        su.a.at(r, i) * su.b.at(j, c2);
                        }
                if (touched) out.transitions.push_back(std::move(t));
            }
    return out;
}

// Tests S^{d} = c M^d b for d = 0 .. 2sm - 1 by tracking the span of word
// coefficient rows of the psi-expansion degree by degree; returns the least
// nonzero degree.
template <class F>
ZeroTestVerdict zero_test_rep(const LinearRep<F>& rep, const F& like) {
    PsiAutomaton<F> aut = psi_automaton(rep, like);
    size_t bound = 2 * rep.s * rep.m;  // degrees 0 .. bound-1
    auto hits_b = [&](const detail::RowSpace<F>& space) {
        for (const auto& [piv, u] : space.rows())
            for (const auto& bc : aut.b_cols) {
                F acc = zero_like(like);
                for (size_t t = 0; t < u.size(); ++t) acc += u[t] * bc[t];
                if (!detail::scalar_is_zero(acc)) return true;
            }
        return false;
    };
    // basis of span{ C_i T_w : |w| = d }, advanced one degree at a time
    detail::RowSpace<F> level;
    for (const auto& r : aut.c_rows) level.add(r);
    for (size_t d = 0; d < bound; ++d) {
        if (hits_b(level)) return {false, d};
        if (level.dim() == 0) break;  // every later homogeneous part vanishes
        detail::RowSpace<F> next;
        for (const auto& [piv, u] : level.rows())
            for (const auto& t : aut.transitions) {
                std::vector<F> v(aut.dim, zero_like(like));
                for (size_t a = 0; a < aut.dim; ++a) {
                    if (detail::scalar_is_zero(u[a])) continue;
                    for (size_t b2 = 0; b2 < aut.dim; ++b2) v[b2] += u[a] * t.at(a, b2);
                }
                next.add(std::move(v));
            }
        level = std::move(next);
    }
    return {true, 0};
}

}  // namespace skewrit

#endif
