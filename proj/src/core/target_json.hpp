#ifndef HOMCOUNT_CORE_TARGET_JSON_HPP
#define HOMCOUNT_CORE_TARGET_JSON_HPP

#include <string>

#include <json.hpp>

#include "graph.hpp"

namespace homcount {

// {"n": int, "loops": [int...], "edges": [[u,v]...]} with u < v, both
// lists sorted.
nlohmann::json targetToJson(const TargetGraph& h);
TargetGraph targetFromJson(const nlohmann::json& j);
TargetGraph targetFromJsonText(const std::string& text);

// Named target families: K<q>, Kloop<k>, Kb<k>, <m>xK<t>, Turan<t>_<x>,
// with or without the leading "named:".
TargetGraph targetFromName(const std::string& name);

}  // namespace homcount

#endif
