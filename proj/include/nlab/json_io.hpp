#pragma once

#include "nlab/family.hpp"
#include "nlab/momenta.hpp"
#include "nlab/verify.hpp"

#include <json.hpp>

namespace nlab {

using json = nlohmann::json;

// Conventions: complex numbers as [re, im]; matrices as row-major arrays of
// rows; every element record carries its lattice label.

json to_json(cplx v);
cplx cplx_from_json(const json& j);

json to_json(const IMat& m);
IMat imat_from_json(const json& j);
json to_json(const IVec& v);
IVec ivec_from_json(const json& j);
json to_json(const RVec& v);
RVec rvec_from_json(const json& j);
json to_json(const CVec& v);
CVec cvec_from_json(const json& j);

json to_json(const ParabolicElement& g);
ParabolicElement parabolic_from_json(const json& j);

json to_json(const PiElement& p);

json to_json(const TorusPoint& p);
json to_json(const SpecialFamily& fam);
SpecialFamily family_from_json(const json& j);
json to_json(const FamilyReport& rep);

json to_json(const Lattice& l, const HeteroticTriplet& h);
json to_json(const SweepResult& r);
json to_json(const std::vector<SweepResult>& rs);

}  // namespace nlab
