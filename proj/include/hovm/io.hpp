#pragma once

#include <json.hpp>
#include <vector>

#include "hovm/catO.hpp"
#include "hovm/characters.hpp"
#include "hovm/hovm.hpp"
#include "hovm/resolutions.hpp"

namespace hovm {

using nlohmann::json;

Gcm gcm_from_json(const json& j);
json gcm_to_json(const Gcm& g);
HighestWeight weight_from_json(const Gcm& g, const json& j);
json weight_to_json(const HighestWeight& w);
std::vector<NodeSet> sets_from_json(const Gcm& g, const json& j);
json sets_to_json(const std::vector<NodeSet>& sets);
json set_to_json(NodeSet s);
Depth depth_from_json(const Gcm& g, const json& j);
json depths_to_json(const std::vector<Depth>& ds);
json character_to_json(const Character& ch);
json resolution_to_json(const Resolution& res, const Gcm& g);
json reciprocity_to_json(const BlockHoles& bh, const ReciprocityTable& t);
json kl_to_json(const KlBases& kl);

}  // namespace hovm
