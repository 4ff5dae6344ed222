#ifndef SKEWRIT_FSGEN_HPP
#define SKEWRIT_FSGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewrit/divalg.hpp"
#include "skewrit/hitset.hpp"
#include "skewrit/ktower.hpp"
#include "skewrit/poly.hpp"

namespace skewrit {

struct ScheduleError : std::invalid_argument {
    explicit ScheduleError(const std::string& w) : std::invalid_argument(w) {}
};

enum class ScheduleMode { PaperFaithful, Desk };

// Parameter schedule of the sigma-compatible generator: kappa fixes the tower
// (L = 2*kappa, ell = 2^L, a_i = kappa - i) and the per-level combinator
// exponents mu_i = 2^{kappa+i-1} + 1 and value sets W_i = <omega_i>.
struct ParamSchedule {
    int n = 1;
    int r = 1;
    uint32_t d = 0;       // log2 of the degree
    uint64_t dtilde = 1;  // 2^d
    int m = 1;            // degree bound of the seed polynomials
    uint32_t kappa = 1;
    uint32_t L = 2;
    uint64_t ell = 4;     // only valid when materializable()
    std::vector<uint32_t> a;        // a_1 > ... > a_d >= 1
    std::vector<uint64_t> w_size;   // |W_i| = 2^{L - a_i}
    ScheduleMode mode = ScheduleMode::Desk;

    bool materializable() const { return L <= 16; }
    uint64_t mu(uint32_t level) const {  // modulo ell, for exponent arithmetic
        uint64_t m2 = 1;
        for (uint32_t i = 0; i < kappa + level - 1; ++i) m2 = (m2 * 2) % ell;
        return (m2 + 1) % ell;
    }
    std::string ell_text() const { return "2^" + std::to_string(L); }
};

// desk_kappa is used only in Desk mode; PaperFaithful derives kappa from the
// paper's formula kappa = 2d + ceil(2 log2(nmr)) + 1.
ParamSchedule schedule(int n, int r, uint64_t dtilde, int m, ScheduleMode mode,
                       uint32_t desk_kappa = 0);

// Level-t generator: per variable i and position j < 2^t, a univariate
// polynomial over K in the last seed coordinate, the earlier seeds already
// substituted. Positions satisfy f^i_{j+1} = sigma(f^i_j) coefficient-wise.
struct Generator {
    uint32_t level = 0;
    std::vector<uint64_t> alpha_exps;              // alpha_t = omega_t^{j_t}
    std::vector<std::vector<Poly<KElem>>> polys;   // [variable][position]
};

// f^i_0(u) = u^{i-1}: a Vandermonde hitting map for single linear layers.
Generator base_generator(const ParamSchedule& sched);

// One Forbes-Shpilka combination step with the Lagrange combinator on nodes
// 1..r^2; alpha is given as the exponent j of alpha_t = omega_t^j in W_t.
Generator combine(const Generator& g, const ParamSchedule& sched, uint64_t alpha_exp);

// Fills positions 2^d .. ell-1 by repeated coefficient-wise sigma.
std::vector<std::vector<Poly<KElem>>> sigma_extend(const Generator& g,
                                                   const ParamSchedule& sched);

struct MaterializeResult {
    bool ok = false;
    std::string reason;
    bool det_nonzero = false;
    bool sigma_chain_ok = false;
    std::vector<Mat<KElem>> point;  // n circulant ell x ell matrices
    std::vector<DElem> delems;      // the same points as algebra elements
};

// Evaluates the extended generator at the final seed coordinate v and builds
// the circulant substitutions cir(f_0(v), ..., z f_{ell-1}(v)); the point is
// certified (sigma chain, algebra membership, nonzero determinant) or dropped.
MaterializeResult materialize(const Generator& g, const ParamSchedule& sched, const Rat& v);

// Desk-mode rank/span surrogate for the combinator's guarantee at one alpha:
// the coefficient span of the split product is contained in the span of the
// combined product, for deterministic pseudo-random matrix samples.
bool validate_alpha_span(const Generator& g, const ParamSchedule& sched, uint64_t alpha_exp,
                         uint64_t seed);

struct FsDeskCaps {
    size_t max_alpha_per_level = 8;
    size_t max_v_values = 8;
    size_t max_points = 64;
    bool validate_alphas = false;  // run the span check per candidate alpha
};

// Cartesian enumeration of seeds (alpha_1, ..., alpha_d, v) in lexicographic
// order, materialized and certified.
HittingSet hitting_set_in_D(const ParamSchedule& sched, const FsDeskCaps& caps = {});

// --- rational Forbes-Shpilka (height-0 over Q) -----------------------------

// The same recursion run over Q with the root of unity replaced by the
// infinite-order element 2; used for the nilpotent upper-shift substitutions
// of the height-two assembly step.
struct RationalFsOptions {
    size_t alpha_values_per_level = 2;  // alpha ranges over powers of two
    size_t v_values = 3;
    size_t max_points = 16;
};

// Returns one (dtilde+1)-dimensional nilpotent upper-shift matrix per
// variable for every enumerated seed.
std::vector<std::vector<Mat<Rat>>> rational_fs_points(int nvars, int r, uint64_t dtilde,
                                                      const RationalFsOptions& opt);

}  // namespace skewrit

#endif
