#ifndef SKEWRIT_GENABP_HPP
#define SKEWRIT_GENABP_HPP

#include <cstdint>
#include <vector>

#include "skewrit/commpoly.hpp"
#include "skewrit/divalg.hpp"
#include "skewrit/genlin.hpp"
#include "skewrit/hitset.hpp"

namespace skewrit {

enum class Iota { AKronI, IKronA };

// Permutation q0 of dimension d*ell with q0 (I_d kron a) q0^{-1} = a kron I_d:
// entry (i*d + j, j*ell + i) = 1 for 0 <= i < ell, 0 <= j < d.
template <class F>
Mat<F> q0_matrix(size_t ell, size_t d, const F& like) {
    size_t n = ell * d;
    Mat<F> q = Mat<F>::zero(n, n, like);
    for (size_t i = 0; i < ell; ++i)
        for (size_t j = 0; j < d; ++j) q.at(i * d + j, j * ell + i) = one_like(like);
    return q;
}
inline Mat<Rat> q0_matrix(size_t ell, size_t d) { return q0_matrix(ell, d, Rat(0)); }

// Evaluates the layered product with coefficients embedded by the chosen
// inclusion map; the point dimension must be a multiple of the coefficient
// dimension.
template <class F>
Mat<F> eval_genabp(const GenABP<F>& B, const std::vector<Mat<F>>& point, Iota io) {
    if (point.empty()) throw std::invalid_argument("eval_genabp: empty point");
    size_t m = B.coeff_dim;
    size_t dim = point.front().rows();
    if (dim % m != 0) throw ShapeMismatch("point dimension is not a multiple of the coefficient dimension");
    size_t k = dim / m;
    const F& like = point.front().like();
    Mat<F> ik = Mat<F>::identity(k, like);
    auto iota = [&](const Mat<F>& a) { return io == Iota::AKronI ? kron(a, ik) : kron(ik, a); };

    size_t r = B.width;
    // boundary row as dim x (r*dim)
    Mat<F> row = Mat<F>::zero(dim, r * dim, like);
    for (size_t a = 0; a < r; ++a) row.set_block(1, a + 1, dim, iota(B.c[a]));
    for (const auto& layer : B.layers) {
        Mat<F> lm = Mat<F>::zero(r * dim, r * dim, like);
        for (size_t a = 0; a < r; ++a)
            for (size_t b = 0; b < r; ++b) {
                if (layer[a][b].empty()) continue;
                lm.set_block(a + 1, b + 1, dim, layer[a][b].eval(point, dim, like, iota));
            }
        row = row * lm;
    }
    Mat<F> col = Mat<F>::zero(r * dim, dim, like);
    for (size_t b = 0; b < r; ++b) col.set_block(b + 1, 1, dim, iota(B.b[b]));
    return row * col;
}

// Packing of the commuting variables y_{i,j,k,l}: i, j in [ell], k in [n],
// l in [d], all 1-based in the ids.
struct YVarPacker {
    size_t ell, n, d;
    uint32_t pack(size_t i, size_t j, size_t k, size_t l) const {
        return static_cast<uint32_t>((((i - 1) * ell + (j - 1)) * n + (k - 1)) * d + (l - 1));
    }
    void unpack(uint32_t id, size_t& i, size_t& j, size_t& k, size_t& l) const {
        l = id % d + 1;
        id /= static_cast<uint32_t>(d);
        k = id % n + 1;
        id /= static_cast<uint32_t>(n);
        j = id % ell + 1;
        i = id / ell + 1;
    }
};

// The block circulant-shift substitution for x_k: block (l, l+1) = Z_{k,l},
// block (d, 1) = Z_{k,d}, with fully symbolic entries.
Mat<CommPoly<KElem>> ztilde_matrix(const YVarPacker& pk, size_t k, uint64_t order);

// One diagonal block of the Z-substituted evaluation: a set-multilinear ABP of
// width r*ell whose layer l reads the variable block pi_i(l).
struct SmlAbp {
    size_t width = 0;  // r * ell
    size_t ell = 0;
    std::vector<size_t> block_order;  // pi_i(l) for l = 1..d
    Mat<KElem> start;                 // ell x width
    struct LinTerm {
        uint32_t var;  // packed y id
        KElem coeff;
    };
    std::vector<std::vector<std::vector<std::vector<LinTerm>>>> layers;  // [layer][row][col]
    Mat<KElem> finish;                // width x ell
};

// The d diagonal blocks B^{pi_i} of B(Z) under iota' = I_d kron a.
std::vector<SmlAbp> shifted_cyclic_eval(const GenABP<KElem>& B, const YVarPacker& pk);

// Symbolic expansion of one block to an ell x ell polynomial matrix.
Mat<CommPoly<KElem>> expand_sml(const SmlAbp& abp);

// Read-once oblivious form: y_{i,j,k,l} becomes v_l^(base^2 i + base j + k).
struct Roabp {
    size_t width = 0;
    size_t ell = 0;
    uint64_t base = 0;
    std::vector<size_t> var_order;  // the v_l read at each layer
    Mat<KElem> start, finish;
    // [layer][row][col] -> univariate polynomial in the layer's variable
    std::vector<std::vector<std::vector<Poly<KElem>>>> layers;
};

// base = ell + 1 when ell > max(n, d) (the paper's regime), otherwise
// max(ell, n, d) + 1; exponent injectivity is certified.
Roabp to_roabp(const SmlAbp& block, const YVarPacker& pk);

Mat<KElem> eval_roabp(const Roabp& r, const std::vector<Rat>& assignment);

struct RoabpHittingOptions {
    size_t exhaustive_nvars_limit = 4;
    size_t max_assignments = 64;
    uint64_t seed = 20240814;
};
struct RoabpHittingSet {
    std::string mode;  // "exhaustive-grid" or "seeded-random"
    uint64_t degree_bound = 0;
    std::vector<std::vector<Rat>> assignments;
};
// Grid {0..delta}^nvars when nvars is small, else seeded random assignments
// with a root-counting repetition bound; both truncated deterministically.
RoabpHittingSet roabp_hitting_set(size_t nvars, size_t width, uint64_t degree_per_var,
                                  const RoabpHittingOptions& opt = {});

// Certification family: small generalized ABPs with known nonzeroness.
struct GenAbpFamily {
    std::vector<std::pair<std::string, GenABP<KElem>>> members;
};
// a x_1 b for a, b in {1, x, omega} plus the single variables x_1..x_n.
GenAbpFamily default_family(const DivAlgebra& alg, int nvars);

struct StrongHitsetOptions {
    size_t max_points = 8;
    size_t max_candidates = 64;
    bool use_pil_patterns = true;  // deterministic small-value y assignments
    uint64_t pil_span = 5;
    RoabpHittingOptions roabp;
};

// Candidate points from ROABP assignments (and small deterministic value
// patterns), materialized as q0-conjugated block substitutions over D and
// kept only when certified against the family.
HittingSet strong_hitting_set_genabp(int n, int r, int d, const DivAlgebra& alg,
                                     const StrongHitsetOptions& opt = {});

}  // namespace skewrit

#endif
