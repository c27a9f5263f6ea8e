#include "edlab/json_io.hpp"

#include "edlab/errors.hpp"

namespace edlab {

using nlohmann::ordered_json;

std::string variant_name(Variant v) { return v == Variant::path ? "path" : "distance"; }

Variant parse_variant(const std::string& s) {
  if (s == "distance") return Variant::distance;
  if (s == "path") return Variant::path;
  throw InvalidParameter("unknown variant '" + s + "' (expected distance or path)");
}

const char* verdict_name(BipanVerdict v) {
  switch (v) {
    case BipanVerdict::yes: return "yes";
    case BipanVerdict::no: return "no";
    default: return "budget-exceeded";
  }
}

ordered_json to_json(const SearchOutcome& o) {
  ordered_json j;
  j["optimum"] = o.optimum;
  j["witness"] = o.witness.to_vector();
  if (o.anchor)
    j["anchor"] = *o.anchor;
  else
    j["anchor"] = nullptr;
  j["status"] = o.status == SearchOutcome::Status::optimal ? "optimal" : "budget-exceeded";
  j["nodes"] = o.nodes_explored;
  return j;
}

ordered_json to_json(const SolveResult& r) {
  ordered_json j;
  if (r.status == SolveResult::Status::exact)
    j["value"] = r.value;
  else
    j["value"] = nullptr;
  if (r.bounds.upper > 0)
    j["bounds"] = ordered_json::array({r.bounds.lower, r.bounds.upper});
  else
    j["bounds"] = nullptr;
  j["variant"] = variant_name(r.variant);
  j["start"] = r.start;
  j["status"] = r.status == SolveResult::Status::exact ? "exact" : "budget-exceeded";
  j["states"] = r.states_expanded;
  if (r.trace.empty()) {
    j["trace"] = nullptr;
  } else {
    ordered_json steps = ordered_json::array();
    for (const TraceStep& t : r.trace) steps.push_back(ordered_json::array({t.call, t.response}));
    j["trace"] = steps;
  }
  return j;
}

ordered_json to_json(const BipanReport& r) {
  ordered_json j;
  j["verdict"] = verdict_name(r.verdict);
  if (r.counterexample) {
    ordered_json c;
    c["x"] = r.counterexample->x;
    c["y"] = r.counterexample->y;
    c["k"] = r.counterexample->k;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  j["triples"] = r.triples_checked;
  j["nodes"] = r.nodes_explored;
  return j;
}

}  // namespace edlab
