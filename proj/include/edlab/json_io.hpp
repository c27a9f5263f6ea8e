#pragma once

#include <string>

#include <json.hpp>

#include "edlab/bipanpositionable.hpp"
#include "edlab/closed_sets.hpp"
#include "edlab/game.hpp"

namespace edlab {

// JSON shapes are the stable machine interface; the text renderings in the
// CLI are for humans and may change. Field order is part of the contract, so
// everything goes through ordered_json.

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);  // "distance" | "path"

const char* verdict_name(BipanVerdict v);

nlohmann::ordered_json to_json(const SearchOutcome& o);
nlohmann::ordered_json to_json(const SolveResult& r);
nlohmann::ordered_json to_json(const BipanReport& r);

}  // namespace edlab
