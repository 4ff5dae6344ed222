#ifndef SKEWRIT_MATRIX_HPP
#define SKEWRIT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skewrit/rational.hpp"

namespace skewrit {

namespace detail {
// ADL trampoline: member functions of Mat would hide a namespace-scope
// is_zero, and qualified lookup would bind before the scalar overloads are
// declared.
template <class F>
bool scalar_is_zero(const F& x) {
    return is_zero(x);
}
}  // namespace detail

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("matrix is singular") {}
};
struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& w) : std::invalid_argument(w) {}
};

// Dense row-major matrix over an exact field scalar F. All entries are kept in
// one field (same cyclotomic order etc.); the scalar operations themselves
// reject cross-field mixing.
template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols, const F& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}
    Mat(size_t rows, size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw ShapeMismatch("entry count != rows*cols");
    }

    static Mat zero(size_t rows, size_t cols, const F& like) {
        return Mat(rows, cols, zero_like(like));
    }
    static Mat identity(size_t n, const F& like) {
        Mat m = zero(n, n, like);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one_like(like);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return e_.empty(); }
    const F& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    F& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const std::vector<F>& entries() const { return e_; }
    const F& like() const {
        if (e_.empty()) throw std::logic_error("empty matrix has no exemplar");
        return e_.front();
    }

    bool is_zero() const {
        for (const auto& a : e_)
            if (!detail::scalar_is_zero(a)) return false;
        return true;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& a : r.e_) a = -a;
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("add: shape mismatch");
        Mat r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("mul: inner dimensions differ");
        Mat r = Mat::zero(a.rows_, b.cols_, a.like());
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a.at(i, k);
                if (detail::scalar_is_zero(aik)) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b.at(k, j);
                    if (detail::scalar_is_zero(bkj)) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Mat scaled(const F& s) const {
        Mat r = *this;
        for (auto& a : r.e_) a = a * s;
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (!(a.e_[i] == b.e_[i])) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    template <class Fn>
    auto map(Fn&& fn) const -> Mat<std::decay_t<decltype(fn(std::declval<const F&>()))>> {
        using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
        std::vector<G> out;
        out.reserve(e_.size());
        for (const auto& a : e_) out.push_back(fn(a));
        return Mat<G>(rows_, cols_, std::move(out));
    }

    // (A kron B)[(i-1)*rB + r, (j-1)*cB + c] = A[i,j] * B[r,c]
    friend Mat kron(const Mat& a, const Mat& b) {
        Mat r = Mat::zero(a.rows_ * b.rows_, a.cols_ * b.cols_, a.like());
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) {
                if (detail::scalar_is_zero(a.at(i, j))) continue;
                for (size_t p = 0; p < b.rows_; ++p)
                    for (size_t q = 0; q < b.cols_; ++q)
                        r.at(i * b.rows_ + p, j * b.cols_ + q) = a.at(i, j) * b.at(p, q);
            }
        return r;
    }

    // m x m submatrix at 1-based block position (bi, bj)
    Mat block(size_t bi, size_t bj, size_t m) const {
        if (rows_ % m != 0 || cols_ % m != 0) throw ShapeMismatch("block size does not divide");
        if (bi < 1 || bj < 1 || bi > rows_ / m || bj > cols_ / m)
            throw ShapeMismatch("block index out of range");
        Mat r = Mat::zero(m, m, like());
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) r.at(i, j) = at((bi - 1) * m + i, (bj - 1) * m + j);
        return r;
    }

    void set_block(size_t bi, size_t bj, size_t m, const Mat& v) {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) at((bi - 1) * m + i, (bj - 1) * m + j) = v.at(i, j);
    }

private:
    size_t rows_, cols_;
    std::vector<F> e_;
};

// True when the matrix has the circulant-shift support: nonzeros only at
// (i, i+1) and (n, 1). The zero matrix also qualifies.
template <class F>
bool is_cir_shaped(const Mat<F>& a) {
    if (a.rows() != a.cols() || a.rows() < 2) return false;
    size_t n = a.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            bool allowed = (j == i + 1) || (i == n - 1 && j == 0);
            if (!allowed && !is_zero(a.at(i, j))) return false;
        }
    return true;
}

// Gaussian elimination driver with deterministic pivoting: first nonzero
// entry in column order. Returns (det, rank, inverse?) in one pass.
template <class F>
struct EliminationResult {
    F det;
    size_t rank;
    std::optional<Mat<F>> inverse;
};

template <class F>
EliminationResult<F> eliminate(Mat<F> a, bool want_inverse) {
    const F one = one_like(a.like());
    const F zero = zero_like(a.like());
    size_t n = a.rows(), m = a.cols();
    Mat<F> inv_acc = want_inverse ? Mat<F>::identity(n, a.like()) : Mat<F>();
    F det = one;
    size_t rank = 0;
    size_t col = 0;
    for (size_t row = 0; row < n && col < m; ++col) {
        size_t piv = row;
        while (piv < n && is_zero(a.at(piv, col))) ++piv;
        if (piv == n) {
            det = zero;
            continue;
        }
        if (piv != row) {
            for (size_t j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(row, j));
            if (want_inverse)
                for (size_t j = 0; j < n; ++j) std::swap(inv_acc.at(piv, j), inv_acc.at(row, j));
            det = -det;
        }
        F p = a.at(row, col);
        det = det * p;
        F pinv = inv(p);
        for (size_t j = 0; j < m; ++j) a.at(row, j) = a.at(row, j) * pinv;
        if (want_inverse)
            for (size_t j = 0; j < n; ++j) inv_acc.at(row, j) = inv_acc.at(row, j) * pinv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || is_zero(a.at(i, col))) continue;
            F f = a.at(i, col);
            for (size_t j = 0; j < m; ++j) a.at(i, j) -= f * a.at(row, j);
            if (want_inverse)
                for (size_t j = 0; j < n; ++j) inv_acc.at(i, j) -= f * inv_acc.at(row, j);
        }
        ++rank;
        ++row;
    }
    if (rank < n) det = zero;
    EliminationResult<F> r{det, rank, std::nullopt};
    if (want_inverse && rank == n && n == m) r.inverse = std::move(inv_acc);
    return r;
}

template <class F>
F det(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("det: not square");
    if (a.rows() == 0) throw ShapeMismatch("det: empty");
    // circulant-shift matrices short-circuit to +- product of entries
    if (is_cir_shaped(a)) {
        size_t n = a.rows();
        F p = a.at(n - 1, 0);
        for (size_t i = 0; i + 1 < n; ++i) p = p * a.at(i, i + 1);
        return (n % 2 == 0) ? -p : p;
    }
    return eliminate(a, false).det;
}

template <class F>
size_t rank(const Mat<F>& a) {
    if (a.empty()) return 0;
    return eliminate(a, false).rank;
}

template <class F>
Mat<F> inverse(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("inverse: not square");
    auto r = eliminate(a, true);
    if (!r.inverse) throw SingularMatrix();
    return *r.inverse;
}

template <class F>
bool invertible(const Mat<F>& a) {
    if (a.rows() != a.cols()) return false;
    return eliminate(a, false).rank == a.rows();
}

// Consistent solve of A x = rhs; free variables are set to zero. Returns
// nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(Mat<F> a, std::vector<F> rhs) {
    size_t n = a.rows(), m = a.cols();
    if (rhs.size() != n) throw ShapeMismatch("solve_linear: rhs length");
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t piv = row;
        while (piv < n && is_zero(a.at(piv, col))) ++piv;
        if (piv == n) continue;
        if (piv != row) {
            for (size_t j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(row, j));
            std::swap(rhs[piv], rhs[row]);
        }
        F pinv = inv(a.at(row, col));
        for (size_t j = 0; j < m; ++j) a.at(row, j) = a.at(row, j) * pinv;
        rhs[row] = rhs[row] * pinv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || is_zero(a.at(i, col))) continue;
            F f = a.at(i, col);
            for (size_t j = 0; j < m; ++j) a.at(i, j) -= f * a.at(row, j);
            rhs[i] -= f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (!is_zero(rhs[i])) return std::nullopt;
    std::vector<F> x(m, zero_like(rhs.empty() ? a.like() : rhs.front()));
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = rhs[r];
    return x;
}

}  // namespace skewrit

#endif
