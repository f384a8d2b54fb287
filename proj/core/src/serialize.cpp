#include "matchkit/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace matchkit {

json bicycle_to_json(const ConformalBicycle& b) {
  return json{
      {"kind", b.parity == Parity::Odd ? "odd_bicycle" : "even_bicycle"},
      {"cycle1", b.cycle1.vertices},
      {"cycle1_edges", b.cycle1.edge_ids},
      {"cycle2", b.cycle2.vertices},
      {"cycle2_edges", b.cycle2.edge_ids},
      {"complement_matching", b.complement_matching.edge_ids},
  };
}

ConformalBicycle bicycle_from_json(const json& j) {
  ConformalBicycle b;
  std::string kind = j.at("kind").get<std::string>();
  require(kind == "odd_bicycle" || kind == "even_bicycle", ErrorCode::ParseError,
          "unknown certificate kind '" + kind + "'");
  b.parity = kind == "odd_bicycle" ? Parity::Odd : Parity::Even;
  b.cycle1.vertices = j.at("cycle1").get<std::vector<int>>();
  b.cycle1.edge_ids = j.at("cycle1_edges").get<std::vector<int>>();
  b.cycle2.vertices = j.at("cycle2").get<std::vector<int>>();
  b.cycle2.edge_ids = j.at("cycle2_edges").get<std::vector<int>>();
  b.complement_matching.edge_ids =
      j.at("complement_matching").get<std::vector<int>>();
  return b;
}

json matching_to_json(const PerfectMatching& m) { return json(m.edge_ids); }

json edge_vector_to_json(const EdgeVector& x) {
  json j = json::object();
  for (std::size_t id = 0; id < x.coords.size(); ++id)
    j[std::to_string(id)] = rational_to_string(x.coords[id]);
  return j;
}

EdgeVector edge_vector_from_json(const MultiGraph& g, const json& j) {
  EdgeVector x = zero_vector(g);
  for (auto& [key, value] : j.items()) {
    int id = std::stoi(key);
    require(id >= 0 && id < g.m(), ErrorCode::ParseError,
            "edge id " + key + " out of range");
    x.coords[id] = rational_from_string(value.get<std::string>());
  }
  return x;
}

json decomposition_to_json(const DecompositionNode& node) {
  json j;
  j["order"] = node.graph.n();
  j["size"] = node.graph.m();
  if (node.leaf) {
    j["leaf"] = *node.leaf == LeafKind::Brick ? "brick" : "brace";
    j["graph"] = format_mcg(node.graph);
    return j;
  }
  j["cut_shore"] = node.cut->shore;
  j["cut_boundary"] = node.cut->boundary;
  j["shore_child"] = decomposition_to_json(*node.shore_child);
  j["co_shore_child"] = decomposition_to_json(*node.co_shore_child);
  return j;
}

json skeleton_to_json(const SkeletonGraph& sk) {
  json nodes = json::array();
  for (const PerfectMatching& m : sk.nodes) nodes.push_back(m.edge_ids);
  json j;
  j["matchings"] = nodes;
  if (sk.diameter)
    j["diameter"] = *sk.diameter;
  else
    j["diameter"] = nullptr;
  return j;
}

json reduction_trace_to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const ReductionStep& s : t.steps) {
    steps.push_back(json{{"graph", format_mcg(s.graph)},
                         {"deleted_edge", s.deleted_edge},
                         {"index", s.index}});
  }
  return json{{"steps", steps},
              {"terminal", format_mcg(t.terminal)},
              {"terminal_family", t.family_label}};
}

json family_tag_to_json(const FamilyTag& tag) {
  json j;
  j["variant"] = family_variant_name(tag.variant);
  if (tag.variant == FamilyVariant::OddWheelMultiSpokes) j["k"] = tag.k;
  j["witness"] = tag.witness.mapping;
  j["canonical"] = format_mcg(tag.canonical);
  return j;
}

json decision_to_json(const Decision& d) {
  json j;
  j["both_properties"] = d.both_properties;
  j["retract_order"] = d.retract_used.graph.n();
  j["retract_trace"] = d.retract_used.vertex_trace;
  if (d.positive_certificate)
    j["family"] = family_tag_to_json(*d.positive_certificate);
  if (d.negative_certificate)
    j["bicycle"] = bicycle_to_json(*d.negative_certificate);
  j["witness_omitted"] = d.witness_omitted;
  return j;
}

std::string graph_digest(const MultiGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](std::uint64_t x) {
    h ^= x;
    h *= 0x100000001b3ull;
  };
  feed(static_cast<std::uint64_t>(g.n()));
  feed(static_cast<std::uint64_t>(g.m()));
  for (const Edge& e : g.edges()) {
    feed(static_cast<std::uint64_t>(std::min(e.u, e.v)));
    feed(static_cast<std::uint64_t>(std::max(e.u, e.v)));
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace matchkit
