#ifndef SKEWRIT_PENCIL_HPP
#define SKEWRIT_PENCIL_HPP

#include <vector>

#include "skewrit/formula.hpp"
#include "skewrit/matrix.hpp"

namespace skewrit {

// Linear pencil L = A_0 + sum_k A_k x_k over Q with a designated output
// entry: wherever the formula is defined, L(point) is invertible and the
// formula value is block (out_i, out_j) of L(point)^{-1}. Size <= 2 * size(f).
struct LinearPencil {
    size_t size = 0;
    int nvars = 0;
    std::vector<Mat<Rat>> mats;  // A_0, A_1, ..., A_n
    size_t out_i = 0, out_j = 0;  // 0-based entry
};

LinearPencil build_pencil(const FormulaPtr& f);

// A_0 (x) I_m + sum A_k (x) p_k
template <class F>
Mat<F> pencil_at(const LinearPencil& L, const std::vector<Mat<F>>& point, size_t m,
                 const F& like) {
    Mat<F> im = Mat<F>::identity(m, like);
    auto lift = [&](const Rat& r) { return from_rat(like, r); };
    Mat<F> acc = kron(L.mats[0].map(lift), im);
    for (int k = 1; k <= L.nvars; ++k) {
        if (L.mats[static_cast<size_t>(k)].is_zero()) continue;
        acc = acc + kron(L.mats[static_cast<size_t>(k)].map(lift),
                         point.at(static_cast<size_t>(k - 1)));
    }
    return acc;
}

}  // namespace skewrit

#endif
