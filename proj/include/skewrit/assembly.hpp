#ifndef SKEWRIT_ASSEMBLY_HPP
#define SKEWRIT_ASSEMBLY_HPP

#include <functional>

#include "skewrit/formula.hpp"
#include "skewrit/fsgen.hpp"
#include "skewrit/genabp.hpp"
#include "skewrit/hitset.hpp"

namespace skewrit {

// T = {0, 1, ..., N} with N from the bivariate degree bound of the pencil
// elimination: entries of L^{-1} for a size-2s pencil at m-dimensional points
// of entry degree d' have numerator and denominator degree <= 2 s m d', and
// the scaling argument multiplies numerator and denominator roots.
struct ScalingSet {
    std::vector<Rat> values;
    uint64_t bound = 0;  // N
    nlohmann::json derivation;
};
ScalingSet scaling_set(uint64_t s, uint64_t m, uint64_t dprime);

// Desk-mode sizing: every enumerated component is capped; the caps are part
// of the produced certification metadata.
struct DeskProfile {
    uint32_t kappa = 2;             // ell = 2^(2 kappa) = 16
    int h0_width = 2;               // fsgen ABP width r
    size_t h0_max_points = 6;
    size_t h0_max_v = 4;
    int genabp_degree = 1;          // block count d of the strong genabp set
    size_t h1_max_points = 2;
    size_t t_cap = 3;               // scaling values kept from T
    size_t h2_shift_cap = 8;        // height-1 points reused as shifts
    uint64_t fs_dhat = 1;           // truncation degree bound used at height 2
    size_t fs_max_points = 3;
    size_t t2_cap = 3;              // transfer grid per coordinate
    size_t max_scan_points = 5000;
};

HittingSet hs_height0(int n, int s, const DeskProfile& profile = {});
HittingSet strong_hs_height1(int n, int s, const DeskProfile& profile = {});
HittingSet hs_height2(int n, int s, const DeskProfile& profile = {});

struct Verdict {
    bool zero = true;
    bool randomized = false;
    size_t witness_index = 0;
    std::vector<Mat<Rat>> witness_q;
    std::vector<Mat<KElem>> witness_k;
    nlohmann::json report;
};

using EvalOracleQ = std::function<EvalResult<Rat>(const std::vector<Mat<Rat>>&)>;
using EvalOracleK = std::function<EvalResult<KElem>(const std::vector<Mat<KElem>>&)>;

// Evaluates the hitting set in enumeration order; the first defined nonzero
// value is the witness. NotDefined points are non-witnesses.
Verdict blackbox_scan_q(const EvalOracleQ& oracle, const HittingSet& hs);
Verdict blackbox_scan_k(const EvalOracleK& oracle, const HittingSet& hs);

// Formula front end: builds the height-appropriate set, scans it (with an
// exact re-verification of any witness before reporting), and emits a report.
Verdict blackbox_test(const FormulaPtr& f, int n, int s, int height,
                      const DeskProfile& profile = {});

// Randomized oracle: uniform small-entry rational tuples per dimension
// 1..max_dim; any defined nonzero value is a witness (re-verified trivially).
Verdict random_oracle_test(const FormulaPtr& f, size_t max_dim, size_t trials, uint64_t seed);

}  // namespace skewrit

#endif
