#ifndef SKEWRIT_HITSET_HPP
#define SKEWRIT_HITSET_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "skewrit/ktower.hpp"
#include "skewrit/matrix.hpp"

namespace skewrit {

// An ordered list of n-tuples of square matrices over K or Q, with the
// parameters that produced it and per-point certification records.
struct HittingSet {
    // header
    int n = 0;
    int s = 0;
    int height = 0;
    size_t dim = 0;
    std::string field;  // "Q" or "K"
    uint64_t ell = 0;
    uint32_t kappa = 0;
    uint32_t L = 0;
    int r = 0;
    uint64_t dtilde = 0;
    int blockdim = 0;  // genabp block count d, when applicable
    std::string mode;  // "desk" etc.

    std::vector<std::vector<Mat<KElem>>> kpoints;
    std::vector<std::vector<Mat<Rat>>> qpoints;
    std::vector<nlohmann::json> certs;  // one record per point
    std::vector<nlohmann::json> dropped;  // log of rejected candidates

    size_t count() const { return field == "K" ? kpoints.size() : qpoints.size(); }
};

}  // namespace skewrit

#endif
