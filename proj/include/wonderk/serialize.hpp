#pragma once

#include <json.hpp>

#include "wonderk/equivariant.hpp"
#include "wonderk/fan.hpp"
#include "wonderk/ordinary.hpp"
#include "wonderk/report.hpp"
#include "wonderk/steinberg.hpp"

namespace wonderk {

using Json = nlohmann::ordered_json;

/// {"terms":[{"exp":[...],"coef":"decimal"}]}
Json to_json(const LaurentPoly &p);
/// Throws ValidationError("MalformedJson") on schema mismatch.
LaurentPoly laurent_from_json(const Json &j, int rank, int blocks);

Json subset_json(Subset I); // [1,3]

Json roots_json(const RootSystem &rs);
Json weyl_json(const WeylGroup &W);
Json csets_json(const WeylGroup &W);
/// Basis f_v with cells; the determinant only when |W| is within the
/// table gate (null otherwise).
Json steinberg_json(const SteinbergSystem &S);
/// All a^w_{v,v'}; gated by kTableLimit.
Json ctable_json(const SteinbergSystem &S);

Json kgb_json(const WeylGroup &W, const KGBElement &a); // {"1":0,"s":1}
Json kx_json(const WeylGroup &W, const KXElement &x);
Json ktable_json(const SteinbergSystem &S, const KXTable &t);

Json decomposition_json(const WeylGroup &W, const WonderfulDecomposition &d);
WonderfulDecomposition decomposition_from_json(const WeylGroup &W, const Json &j);

Json fan_json(const Fan &fan); // {"rays":[[..]],"cones":[[..]]}, nonzero cones
/// Reads a user subdivision of the positive chamber and validates it.
Fan fan_from_json(const Json &j, int rank);

Json report_json(const Report &r);

} // namespace wonderk
