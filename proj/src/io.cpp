#include "roldarp/io.hpp"

#include <fstream>
#include <sstream>

namespace roldarp {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> edges;
  if (!j.is_array()) parse_error("'weights' must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) parse_error("weight entries are [u, v, w]");
    try {
      edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>(), e[2].get<Weight>()});
    } catch (const nlohmann::json::exception& ex) {
      parse_error(std::string("weight entry: ") + ex.what());
    }
  }
  return edges;
}

Json edges_to_json(const Graph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back(Json::array({e.u, e.v, e.w}));
  return out;
}

std::pair<NodeId, NodeId> pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) parse_error("edge must be [u, v]");
  return {j[0].get<NodeId>(), j[1].get<NodeId>()};
}

IntRange range_from_json(const Json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>(), j.get<std::int64_t>()};
  if (!j.is_array() || j.size() != 2) parse_error("range must be [lo, hi] or an integer");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

Revenue revenue_from_json(const Json& j) {
  if (j.is_string()) return parse_revenue(j.get<std::string>());
  if (j.is_number_integer()) return Revenue(j.get<std::int64_t>());
  parse_error("revenue must be a string or an integer");
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["nodes"] = inst.graph.node_count();
  j["origin"] = inst.graph.origin();
  j["weights"] = edges_to_json(inst.graph);
  j["unit"] = inst.graph.unit_flag();
  j["T"] = inst.time_limit;
  j["preemption"] = inst.preemption;
  if (inst.goal) j["R"] = format_revenue(*inst.goal);
  Json reqs = Json::array();
  for (const Request& r : inst.requests) {
    Json jr;
    jr["id"] = r.id;
    jr["s"] = r.source;
    jr["d"] = r.destination;
    jr["t"] = r.release;
    jr["r"] = format_revenue(r.revenue);
    if (r.group) jr["group"] = *r.group;
    reqs.push_back(std::move(jr));
  }
  j["requests"] = std::move(reqs);
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  const int nodes = get<int>(j, "nodes");
  const NodeId origin = get<NodeId>(j, "origin");
  const bool unit = j.contains("unit") ? get<bool>(j, "unit") : false;
  inst.graph = Graph::from_edges(nodes, origin, edges_from_json(field(j, "weights")), unit);
  inst.time_limit = get<Time>(j, "T");
  inst.preemption = j.contains("preemption") && get<bool>(j, "preemption");
  if (j.contains("R") && !j.at("R").is_null()) inst.goal = revenue_from_json(j.at("R"));
  if (j.contains("requests")) {
    for (const auto& jr : field(j, "requests")) {
      Request r;
      r.id = get<RequestId>(jr, "id");
      r.source = get<NodeId>(jr, "s");
      r.destination = get<NodeId>(jr, "d");
      r.release = get<Time>(jr, "t");
      r.revenue = revenue_from_json(field(jr, "r"));
      if (jr.contains("group")) r.group = get<int>(jr, "group");
      inst.requests.push_back(r);
    }
  }
  canonicalize(inst);
  return inst;
}

Json schedule_to_json(const Schedule& s) {
  Json j;
  j["algorithm"] = s.algorithm;
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(Json{{"id", e.id}, {"q", e.start}});
  j["entries"] = std::move(entries);
  if (!s.feasible) j["feasible"] = false;
  return j;
}

Schedule schedule_from_json(const Json& j) {
  Schedule s;
  s.algorithm = j.contains("algorithm") ? get<std::string>(j, "algorithm") : "";
  for (const auto& e : field(j, "entries")) s.entries.push_back({get<RequestId>(e, "id"), get<Time>(e, "q")});
  s.feasible = !j.contains("feasible") || get<bool>(j, "feasible");
  return s;
}

Json stats_to_json(const SearchStats& s) {
  return Json{{"expanded", s.expanded}, {"pruned", s.pruned}};
}

TspInstance tsp_from_json(const Json& j) {
  TspInstance tsp;
  const int nodes = get<int>(j, "nodes");
  std::vector<Edge> edges = edges_from_json(field(j, "weights"));
  bool unit = std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.w == 1; });
  tsp.graph = Graph::from_edges(nodes, 0, edges, unit);
  if (j.contains("k")) tsp.budget = get<Weight>(j, "k");
  return tsp;
}

Json tsp_to_json(const TspInstance& tsp) {
  Json j;
  j["nodes"] = tsp.graph.node_count();
  j["weights"] = edges_to_json(tsp.graph);
  if (tsp.budget > 0) j["k"] = tsp.budget;
  return j;
}

AdversaryConfig adversary_from_json(const Json& j) {
  AdversaryConfig cfg;
  cfg.kind = parse_adversary_kind(get<std::string>(j, "kind"));
  if (j.contains("b")) cfg.b = revenue_from_json(j.at("b"));
  if (j.contains("eps")) cfg.eps = revenue_from_json(j.at("eps"));
  if (j.contains("edge") && !j.at("edge").is_null()) cfg.edge = pair_from_json(j.at("edge"));
  if (j.contains("edge2") && !j.at("edge2").is_null()) cfg.edge2 = pair_from_json(j.at("edge2"));
  if (j.contains("b1")) cfg.b1 = revenue_from_json(j.at("b1"));
  if (j.contains("b2")) cfg.b2 = revenue_from_json(j.at("b2"));
  return cfg;
}

Json adversary_to_json(const AdversaryConfig& cfg) {
  Json j;
  j["kind"] = std::string(to_string(cfg.kind));
  j["b"] = format_revenue(cfg.b);
  j["eps"] = format_revenue(cfg.eps);
  if (cfg.edge) j["edge"] = Json::array({cfg.edge->first, cfg.edge->second});
  if (cfg.edge2) j["edge2"] = Json::array({cfg.edge2->first, cfg.edge2->second});
  if (cfg.b1) j["b1"] = format_revenue(*cfg.b1);
  if (cfg.b2) j["b2"] = format_revenue(*cfg.b2);
  return j;
}

Profile profile_from_json(const Json& j, Profile base) {
  try {
    if (j.contains("nodes")) base.nodes = range_from_json(j.at("nodes"));
    if (j.contains("T")) base.horizon = range_from_json(j.at("T"));
    if (j.contains("requests")) base.requests = range_from_json(j.at("requests"));
    if (j.contains("revenue")) base.revenue = range_from_json(j.at("revenue"));
    if (j.contains("denominators")) base.denominators = j.at("denominators").get<std::vector<std::int64_t>>();
    if (j.contains("saturated")) base.saturated = j.at("saturated").get<bool>();
    if (j.contains("unit")) base.unit = j.at("unit").get<bool>();
    if (j.contains("max_weight")) base.max_weight = j.at("max_weight").get<Weight>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("profile: ") + e.what());
  }
  return base;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace roldarp
