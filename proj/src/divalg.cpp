#include "skewrit/divalg.hpp"

namespace skewrit {

DElem d_add(const DElem& u, const DElem& v) {
    if (!(u.algebra() == v.algebra())) throw FieldMismatch("algebra mismatch");
    std::vector<KElem> r;
    r.reserve(u.coeffs().size());
    for (size_t i = 0; i < u.coeffs().size(); ++i) r.push_back(u.coeffs()[i] + v.coeffs()[i]);
    return DElem(u.algebra(), std::move(r));
}

DElem d_mul(const DElem& u, const DElem& v) {
    if (!(u.algebra() == v.algebra())) throw FieldMismatch("algebra mismatch");
    const DivAlgebra& alg = u.algebra();
    Sigma s = alg.sigma();
    uint64_t ell = alg.ell;
    KElem z = KElem::z(ell);
    std::vector<KElem> r(ell, KElem::zero(ell));
    for (uint64_t i = 0; i < ell; ++i) {
        const KElem& ui = u.coeffs()[i];
        if (ui.is_zero()) continue;
        for (uint64_t j = 0; j < ell; ++j) {
            const KElem& vj = v.coeffs()[j];
            if (vj.is_zero()) continue;
            KElem term = ui * sigma_apply(vj, s, i);
            uint64_t k = i + j;
            if (k >= ell) term = term * z;
            r[k % ell] += term;
        }
    }
    return DElem(alg, std::move(r));
}

DElem d_scale(const DElem& u, const KElem& s) {
    std::vector<KElem> r;
    for (const auto& b : u.coeffs()) r.push_back(b * s);
    return DElem(u.algebra(), std::move(r));
}

Mat<KElem> cir(const std::vector<KElem>& v) {
    if (v.empty()) throw std::invalid_argument("cir needs at least one entry");
    size_t ell = v.size();
    uint64_t order = v.front().order();
    Mat<KElem> m = Mat<KElem>::zero(ell, ell, KElem::zero(order));
    for (size_t i = 0; i + 1 < ell; ++i) m.at(i, i + 1) = v[i];
    m.at(ell - 1, 0) = v[ell - 1];
    return m;
}

Mat<KElem> matrix_rep(const DElem& u) {
    const DivAlgebra& alg = u.algebra();
    uint64_t ell = alg.ell;
    Sigma s = alg.sigma();
    KElem z = KElem::z(ell);
    Mat<KElem> m = Mat<KElem>::zero(ell, ell, KElem::zero(ell));
    for (uint64_t r = 0; r < ell; ++r)
        for (uint64_t c = 0; c < ell; ++c) {
            uint64_t slot = (c + ell - r) % ell;
            const KElem& b = u.coeffs()[slot];
            if (b.is_zero()) continue;
            KElem e = sigma_apply(b, s, r);
            if (c < r) e = e * z;
            m.at(r, c) = e;
        }
    return m;
}

Mat<KElem> basis_C(const DivAlgebra& alg, size_t i, size_t j) {
    if (i < 1 || i > alg.ell || j < 1 || j > alg.ell)
        throw std::out_of_range("basis_C index out of range");
    return matrix_rep(
        DElem::monomial(alg, KElem::omega_pow(alg.ell, static_cast<int64_t>(j - 1)), i - 1));
}

std::vector<KElem> expand_in_C_basis(const DivAlgebra& alg, const Mat<KElem>& target) {
    uint64_t ell = alg.ell;
    if (target.rows() != ell || target.cols() != ell)
        throw ShapeMismatch("expand_in_C_basis: wrong dimension");
    size_t n2 = static_cast<size_t>(ell * ell);
    // columns: vec(C_{i,j}); rows: matrix positions. With sigma of order
    // 2^kappa the span is the K-hull of D, not all of M_ell(K); inputs outside
    // it are rejected.
    Mat<KElem> a = Mat<KElem>::zero(n2, n2, KElem::zero(ell));
    for (size_t i = 1; i <= ell; ++i)
        for (size_t j = 1; j <= ell; ++j) {
            Mat<KElem> c = basis_C(alg, i, j);
            size_t col = (i - 1) * ell + (j - 1);
            for (size_t r = 0; r < ell; ++r)
                for (size_t cc = 0; cc < ell; ++cc) a.at(r * ell + cc, col) = c.at(r, cc);
        }
    std::vector<KElem> rhs;
    rhs.reserve(n2);
    for (size_t r = 0; r < ell; ++r)
        for (size_t cc = 0; cc < ell; ++cc) rhs.push_back(target.at(r, cc));
    auto sol = solve_linear(a, rhs);
    if (!sol) throw SingularMatrix();
    return *sol;
}

DElem delem_from_rep_row(const DivAlgebra& alg, const Mat<KElem>& rep) {
    std::vector<KElem> coeffs;
    for (uint64_t c = 0; c < alg.ell; ++c) coeffs.push_back(rep.at(0, c));
    return DElem(alg, std::move(coeffs));
}

DElem d_inverse(const DElem& u) {
    if (u.is_zero()) throw DivisionByZero();
    Mat<KElem> rep = matrix_rep(u);
    Mat<KElem> repinv = inverse(rep);  // throws SingularMatrix when singular
    DElem candidate = delem_from_rep_row(u.algebra(), repinv);
    // the readback is only valid when the matrix inverse is itself a regular
    // representation; re-encode and compare
    if (matrix_rep(candidate) != repinv)
        throw std::logic_error("matrix inverse is not inside the algebra image");
    return candidate;
}

}  // namespace skewrit
