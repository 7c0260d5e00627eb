#pragma once
// Canonical JSON (sorted keys, no whitespace) for the library types.

#include <string>

#include "json.hpp"

#include "kfh/alexander.hpp"
#include "kfh/braid.hpp"
#include "kfh/grid.hpp"
#include "kfh/hfk.hpp"
#include "kfh/poly.hpp"

namespace kfh {

using Json = nlohmann::json;

std::string canonical(const Json& j);

Json to_json(const HalfLaurent& p);
HalfLaurent poly_from_json(const Json& j);

Json to_json(const BraidWord& b);
BraidWord braid_from_json(const Json& j);

Json to_json(const GridDiagram& g);
GridDiagram grid_from_json(const Json& j);

Json to_json(const TwistFamilySpec& s);
Json to_json(const MutantPairSpec& s);

Json to_json(const BigradedRanks& r);
BigradedRanks ranks_from_json(const Json& j);
// columns M, A, rank; A written as an integer or with a .5
std::string ranks_csv(const BigradedRanks& r);

Json to_json(const RecursionReport& r);
Json to_json(const StabilizationFit& f);
Json to_json(const SkeinReport& r);

}  // namespace kfh
