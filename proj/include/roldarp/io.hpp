#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "roldarp/adversary.hpp"
#include "roldarp/offline.hpp"
#include "roldarp/reduction.hpp"

namespace roldarp {

using Json = nlohmann::ordered_json;

// Instance file:
//   {nodes, origin, weights: [[u,v,w],...], unit, T, preemption, R?,
//    requests: [{id, s, d, t, r, group?}, ...]}
// Revenues are strings ("3", "2.5", "7/2"); plain JSON integers are also
// accepted on input.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// {algorithm, entries: [{id, q}, ...]} (+ feasible when false).
Json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const Json& j);

Json stats_to_json(const SearchStats& s);

// {nodes, weights: [[u,v,w],...], k?}
TspInstance tsp_from_json(const Json& j);
Json tsp_to_json(const TspInstance& tsp);

// {kind, b, eps, edge?: [u,v], edge2?: [x,y], b1?, b2?}
AdversaryConfig adversary_from_json(const Json& j);
Json adversary_to_json(const AdversaryConfig& cfg);

// Any subset of {nodes:[lo,hi], T:[lo,hi], requests:[lo,hi], revenue:[lo,hi],
// denominators:[...], saturated, unit, max_weight}; missing keys keep the
// defaults.
Profile profile_from_json(const Json& j, Profile base = {});

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Revenue revenue_from_json(const Json& j);

}  // namespace roldarp
