#pragma once

#include "qdtm/distribution.hpp"
#include "qdtm/interval_set.hpp"
#include "qdtm/measure.hpp"
#include "qdtm/pwl.hpp"
#include "qdtm/space.hpp"
#include "qdtm/step_function.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qdtm {

using nlohmann::json;

// Wire formats (rationals are "p" or "p/q" strings; endpoints use the
// "-inf" / "inf" sentinels):
//   Interval        ["lo", "hi", lo_open, hi_open]
//   IntervalSet     [Interval, ...]
//   Space           {"kind":"line"} | {"kind":"compact","a":"0","b":"1"}
//   PwlFunction     {"space":..., "breakpoints":[["x","y"],...]}
//   Dtm             {"kind":"simple","D":["0","1"]} | {"kind":"dirac","x":"1/2"}
//                   | {"kind":"lebesgue","I":["0","1"]}
//                   | {"kind":"combo","terms":[["2",{...}],...]}
//   BoundaryMeasure {"atoms":[["loc","mass"],...],
//                    "density":[["lo","hi","value"],...]}

json to_json(const Rational& v);
json to_json(const Interval& iv);
json to_json(const IntervalSet& set);
json to_json(const Space& space);
json to_json(const PwlFunction& f);
json to_json(const Profile& phi);
json to_json(const MonotonePwFunction& g);
json to_json(const BoundaryMeasure& m);
json to_json(const Dtm& mu);

Rational rational_from_json(const json& j);
Interval interval_from_json(const json& j);
IntervalSet interval_set_from_json(const json& j);
Space space_from_json(const json& j);
PwlFunction pwl_from_json(const json& j);
Dtm dtm_from_json(const json& j, const Space& space);

/// CSV with header t,L1,L2,R1,R2: one row per breakpoint and per segment
/// midpoint, rationals in canonical string form.
std::string bundle_csv(const DistributionBundle& bundle);

}  // namespace qdtm
