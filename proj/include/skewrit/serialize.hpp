#ifndef SKEWRIT_SERIALIZE_HPP
#define SKEWRIT_SERIALIZE_HPP

#include <json.hpp>

#include "skewrit/divalg.hpp"
#include "skewrit/hitset.hpp"
#include "skewrit/realization.hpp"

namespace skewrit {

using nlohmann::json;

// rationals as "p/q" with "/q" omitted when q = 1
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

// cyclotomic coefficient: array of "p/q" by ascending omega-power
json to_json(const CycloElem& c);
CycloElem cyclo_from_json(uint64_t order, const json& j);

// KElem: [num, den], each an array of cyclotomic coefficients by ascending
// z-degree
json to_json(const KElem& e);
KElem kelem_from_json(uint64_t order, const json& j);

// matrices: array of rows of serialized field elements
json to_json(const Mat<Rat>& m);
json to_json(const Mat<KElem>& m);
Mat<Rat> qmat_from_json(const json& j);
Mat<KElem> kmat_from_json(uint64_t order, const json& j);

// DElem: the ell coefficients plus (ell, kappa)
json to_json(const DElem& d);

json to_json(const HittingSet& hs);
HittingSet hitset_from_json(const json& j);

// LinearRep: the matrix format plus the shift record
json to_json(const LinearRep<Rat>& rep);

// point file for the CLI: {"field": "Q", "dim": m, "matrices": [...]}
std::vector<Mat<Rat>> qpoint_from_json(const json& j);

}  // namespace skewrit

#endif
