#pragma once

#include <json.hpp>

#include "sflab/alpha.hpp"
#include "sflab/analysis.hpp"
#include "sflab/bounds.hpp"
#include "sflab/constructions.hpp"
#include "sflab/extremal.hpp"
#include "sflab/geometry.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema = 1;

/// {"num": "...", "den": "..."} with decimal strings, so values of any size
/// survive.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const SetFamily& family);
SetFamily family_from_json(const Json& j);

Json to_json(const Sunflower& sunflower);
Json to_json(const InequalityReport& report);
Json to_json(const FamilyAnalysis& analysis);
Json to_json(const BoundValue& bound);
Json to_json(const ExtremalResult& result);
Json to_json(const AlphaEstimate& estimate);
Json to_json(const LowerBoundReport& report);
Json to_json(const Disk& disk);

/// Wraps a command payload with the schema version and command name.
Json envelope(const std::string& command, Json payload);

} // namespace sflab
