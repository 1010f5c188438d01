#pragma once

#include <string>

#include <json.hpp>

#include "tss/graph.hpp"
#include "tss/group_desc.hpp"
#include "tss/mcg.hpp"
#include "tss/picard.hpp"
#include "tss/surface.hpp"
#include "tss/verify.hpp"

namespace tss {

using Json = nlohmann::json;

/// Parses a TSS document. Strict: unknown keys are rejected, rationals are
/// "p/q" strings, dangling references and non-positive periods are parse
/// errors. Throws ParseError with position information on bad JSON.
TssSurface parse_tss(const std::string& text);

Json to_json(const TssSurface& s);
Json to_json(const ValidationReport& r);
Json to_json(const LabeledGraph& g);
Json to_json(const GraphMap& m);
GraphMap graph_map_from_json(const Json& j);
Json to_json(const GroupDescription& d);
Json to_json(const PicardGroupDescription& d);
Json to_json(const PicardElement& e);
PicardElement element_from_json(const PicardGroupDescription& d, const Json& j);
Json to_json(const VerificationReport& r);
Json to_json(const SymplecticPicardReport& r);

}  // namespace tss
