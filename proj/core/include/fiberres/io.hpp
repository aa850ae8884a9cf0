#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fiberres/betti_table.hpp"
#include "fiberres/complex.hpp"
#include "fiberres/fiber.hpp"
#include "fiberres/homcheck.hpp"
#include "fiberres/power_series.hpp"
#include "fiberres/ring.hpp"

namespace fiberres {

using json = nlohmann::json;

/// {"variables": [...], "field": "F_32003", "blocks": {"a": [...], "b": [...]}}
json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const json& j);

/// {"ring": ..., "modules": {"n": [twists]}, "differentials": {"n": [[entries]]}}
json complex_to_json(const ChainComplex& C);
/// Fine degrees are inferred from the entries when possible.
ChainComplex complex_from_json(const json& j);

json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const RingSpec& ring, const json& j);

/// {"totals": {"l": n}, "graded": {"l,k": n}}
json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const json& j);

json series_to_json(const PowerSeries& s);
json report_to_json(const HomologyReport& r);

/// {"ring", "Ip", "I", "Jp", "J"} with optional "X", "Y", "S", "T" complexes.
json instance_to_json(const FiberInstance& inst);
FiberInstance instance_from_json(const json& j);

} // namespace fiberres
