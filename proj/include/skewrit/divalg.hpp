#ifndef SKEWRIT_DIVALG_HPP
#define SKEWRIT_DIVALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "skewrit/ktower.hpp"
#include "skewrit/matrix.hpp"

namespace skewrit {

// The cyclic algebra D = (K/F, sigma, z) with x^ell = z and x b = sigma(b) x.
struct DivAlgebra {
    uint64_t ell;
    uint32_t kappa;

    DivAlgebra(uint64_t ell_, uint32_t kappa_) : ell(ell_), kappa(kappa_) {
        if (!is_power_of_two(ell) || ell < 2)
            throw std::invalid_argument("algebra index must be a power of two >= 2");
        if (kappa == 0) throw std::invalid_argument("kappa must be >= 1");
    }
    Sigma sigma() const { return Sigma(ell, kappa); }
    KElem kzero() const { return KElem::zero(ell); }
    KElem kone() const { return KElem::one(ell); }

    friend bool operator==(const DivAlgebra& a, const DivAlgebra& b) {
        return a.ell == b.ell && a.kappa == b.kappa;
    }
};

// b_0 + b_1 x + ... + b_{ell-1} x^{ell-1} with b_i in K.
class DElem {
public:
    DElem(DivAlgebra alg, std::vector<KElem> coeffs) : alg_(alg), c_(std::move(coeffs)) {
        if (c_.size() != alg_.ell) throw std::invalid_argument("DElem needs exactly ell coefficients");
        for (const auto& b : c_)
            if (b.order() != alg_.ell) throw FieldMismatch("DElem coefficient order mismatch");
    }

    static DElem zero(const DivAlgebra& alg) {
        return DElem(alg, std::vector<KElem>(alg.ell, KElem::zero(alg.ell)));
    }
    static DElem one(const DivAlgebra& alg) {
        DElem e = zero(alg);
        e.c_[0] = KElem::one(alg.ell);
        return e;
    }
    static DElem from_k(const DivAlgebra& alg, const KElem& b) {
        DElem e = zero(alg);
        e.c_[0] = b;
        return e;
    }
    // b * x^k
    static DElem monomial(const DivAlgebra& alg, const KElem& b, size_t k) {
        DElem e = zero(alg);
        e.c_[k % alg.ell] = b;  // valid for k < ell; higher powers fold via d_mul
        return e;
    }
    static DElem x(const DivAlgebra& alg) { return monomial(alg, KElem::one(alg.ell), 1); }

    const DivAlgebra& algebra() const { return alg_; }
    const std::vector<KElem>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& b : c_)
            if (!b.is_zero()) return false;
        return true;
    }

    friend bool operator==(const DElem& a, const DElem& b) {
        return a.alg_ == b.alg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const DElem& a, const DElem& b) { return !(a == b); }

    DElem operator-() const {
        std::vector<KElem> r;
        for (const auto& b : c_) r.push_back(-b);
        return DElem(alg_, std::move(r));
    }

private:
    DivAlgebra alg_;
    std::vector<KElem> c_;
};

DElem d_add(const DElem& u, const DElem& v);
// expands with x^i b = sigma^i(b) x^i and folds x^(i+j) via x^ell = z
DElem d_mul(const DElem& u, const DElem& v);
DElem d_scale(const DElem& u, const KElem& s);

// cir(v_1, ..., v_ell): entry (i, i+1) = v_i for i <= ell-1, entry (ell, 1) = v_ell
Mat<KElem> cir(const std::vector<KElem>& v);

// Regular left-multiplication representation: sum_i M(b_i) M(x)^i, with
// M(x) = cir(1, ..., 1, z) and M(b) = diag(b, sigma(b), ..., sigma^{ell-1}(b)).
Mat<KElem> matrix_rep(const DElem& u);

// C_{i,j} = M(omega^{j-1}) M(x^{i-1}), 1-based indices.
Mat<KElem> basis_C(const DivAlgebra& alg, size_t i, size_t j);

// Expands an arbitrary ell x ell matrix over K in the C basis (the K-span of
// the C_{i,j} is all of M_ell(K)); returns coefficients indexed by (i-1)*ell+(j-1).
std::vector<KElem> expand_in_C_basis(const DivAlgebra& alg, const Mat<KElem>& target);

// Reads a DElem off row 1 of its regular representation.
DElem delem_from_rep_row(const DivAlgebra& alg, const Mat<KElem>& rep);

// Inverse through the matrix representation; a verification re-encode guards
// the row readback. Throws SingularMatrix when the representation is singular.
DElem d_inverse(const DElem& u);

}  // namespace skewrit

#endif
