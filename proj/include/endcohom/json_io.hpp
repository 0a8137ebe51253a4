#pragma once

#include "json.hpp"

#include "endcohom/base_rings.hpp"
#include "endcohom/classify.hpp"
#include "endcohom/end_algebras.hpp"
#include "endcohom/endsum_invariant.hpp"
#include "endcohom/heights.hpp"
#include "endcohom/quotients.hpp"
#include "endcohom/rays.hpp"

namespace endcohom::json_io {

using nlohmann::json;

/// Integers fitting in int64 become JSON numbers, others decimal strings.
json int_to_json(const Int& n);
Int int_from_json(const json& j);

json to_json(const HeightSeq& h);
HeightSeq height_from_json(const json& j);

/// {"prefix":[..],"tail":[terms],"den":d}; "den" only when the tail has
/// non-integral coefficients.
json to_json(const PowerSeries& s);
PowerSeries series_from_json(const json& j);

json to_json(const PQElem& q);
json to_json(const KQElem& k);
KQElem kq_from_json(const json& j);
json to_json(const GElem& g);
GElem g_from_json(const json& j);

json to_json(const BaseRing& r);
/// Either a ring object or a builtin name such as "Torus3" or "Surface(2)".
BaseRing ring_from_json(const json& j);

json to_json(const ModuleShape& m);
json to_json(const AlgElem& e);
json describe(const EndAlgebra& a);

Ambient ambient_from_json(const json& j);
RayDatum ray_from_json(const json& j);

/// Shape descriptors: stringer, surgered, ladder, wedge, endsum. End-sum
/// classes are ray data ({"ambient":"stringer"} is the straight ray).
EndAlgebra algebra_from_json(const json& j);

json to_json(const TrueVec& v);
json to_json(const InvariantResult& r);

SpaceSpec space_from_json(const json& j);
json to_json(const Verdict& v);

}  // namespace endcohom::json_io
