#ifndef SKEWRIT_GENLIN_HPP
#define SKEWRIT_GENLIN_HPP

#include <vector>

#include "skewrit/matrix.hpp"

namespace skewrit {

// One generalized linear form  sum_t  a_t * x_{k_t} * b_t  with matrix
// coefficients a_t, b_t of a shared dimension m.
template <class F>
struct GenLinForm {
    struct Summand {
        Mat<F> a;
        int var;  // 1-based variable index
        Mat<F> b;
    };
    std::vector<Summand> summands;

    bool empty() const { return summands.empty(); }

    // substitute matrices for the variables; iota embeds the coefficients
    template <class Iota>
    Mat<F> eval(const std::vector<Mat<F>>& point, size_t dim, const F& like, Iota&& iota) const {
        Mat<F> acc = Mat<F>::zero(dim, dim, like);
        for (const auto& s : summands) {
            const Mat<F>& p = point.at(static_cast<size_t>(s.var - 1));
            acc = acc + iota(s.a) * p * iota(s.b);
        }
        return acc;
    }
};

// Layered generalized ABP: boundary row c (1 x r of m x m blocks), `degree`
// layers of r x r generalized linear forms, boundary column b.
template <class F>
struct GenABP {
    size_t width = 0;
    size_t coeff_dim = 0;  // m
    std::vector<Mat<F>> c;                                // width blocks
    std::vector<std::vector<std::vector<GenLinForm<F>>>> layers;  // [layer][row][col]
    std::vector<Mat<F>> b;

    size_t degree() const { return layers.size(); }
};

}  // namespace skewrit

#endif
