#include "serialize.hpp"

#include <algorithm>
#include <sstream>

namespace endtree::io {

json names(const TruncatedGraph& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.name(v));
  return out;
}

VertexSet vertices(const TruncatedGraph& g, const json& names) {
  if (!names.is_array()) fail(ErrorCode::kParse, "expected an array of vertex ids");
  std::vector<Vertex> out;
  for (const auto& n : names) {
    if (!n.is_string()) fail(ErrorCode::kParse, "vertex ids must be strings");
    out.push_back(g.at(n.get<std::string>()));
  }
  return VertexSet(std::move(out));
}

json graph_json(const TruncatedGraph& g) {
  json j;
  auto p = g.to_payload();
  j["family"] = g.family();
  j["radius"] = g.radius();
  j["vertices"] = p.vertices;
  json edges = json::array();
  for (const auto& [u, v] : p.edges) edges.push_back({u, v});
  j["edges"] = edges;
  j["horizon"] = p.horizon;
  j["base"] = p.base;
  j["labels"] = p.labels;
  j["locally_finite"] = g.locally_finite();
  return j;
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::kParse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorCode::kParse, std::string("field '") + key + "' has the wrong type");
  }
}

TruncatedGraph::Payload payload_from_json(const json& j) {
  TruncatedGraph::Payload p;
  p.vertices = field<std::vector<std::string>>(j, "vertices");
  for (const auto& e : field<json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail(ErrorCode::kParse, "edges must be pairs of vertex ids");
    p.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  p.horizon = field<std::vector<std::string>>(j, "horizon");
  if (j.contains("base")) p.base = field<std::vector<std::string>>(j, "base");
  if (j.contains("labels"))
    p.labels = field<std::map<std::string, std::string>>(j, "labels");
  return p;
}

}  // namespace

TruncatedGraph graph_from_json(const json& j) {
  std::string family = j.contains("family") ? field<std::string>(j, "family") : "custom";
  int radius = j.contains("radius") ? field<int>(j, "radius") : 0;
  auto g = TruncatedGraph::from_payload(payload_from_json(j), family, radius);
  if (j.contains("locally_finite")) g.set_locally_finite(field<bool>(j, "locally_finite"));
  return g;
}

FamilySpec family_from_json(const json& j) {
  FamilySpec spec;
  spec.name = field<std::string>(j, "name");
  if (j.contains("parameters"))
    spec.parameters = field<std::map<std::string, int>>(j, "parameters");
  if (j.contains("graph")) spec.custom = payload_from_json(j.at("graph"));
  return spec;
}

json separation_json(const TruncatedGraph& g, const Separation& s) {
  return {{"A", names(g, s.a())},
          {"B", names(g, s.b())},
          {"separator", names(g, s.separator())},
          {"order", s.order()}};
}

json cut_json(const TruncatedGraph& g, const CutResult& c) {
  json paths = json::array();
  for (const auto& p : c.paths) {
    json path = json::array();
    for (Vertex v : p) path.push_back(g.name(v));
    paths.push_back(path);
  }
  return {{"value", c.value},
          {"unbounded", c.unbounded},
          {"cut", names(g, c.cut)},
          {"paths", paths}};
}

json degree_json(const DegreeReport& d) {
  json j = {{"radii", d.radii},
            {"values", d.values},
            {"thick", d.thick},
            {"stable", d.stable},
            {"cut", d.cut},
            {"radius", d.radii.back()}};
  j["value"] = d.thick ? json("Thick") : json(d.degree);
  return j;
}

json domination_json(const DominationReport& d) {
  return {{"radii", d.radii},
          {"radius", d.radii.back()},
          {"dominators", d.dominators},
          {"stable", d.stable},
          {"unstable", d.unstable}};
}

json sequence_json(const TruncatedGraph& g, const SeparatorSequence& s) {
  json seps = json::array();
  for (const auto& t : s.separators) seps.push_back(names(g, t));
  return {{"m", s.m}, {"radius", g.radius()}, {"separators", seps}};
}

json relevant_json(const TruncatedGraph& g, const RelevantSeparation& r,
                   int alpha) {
  json j = separation_json(g, r.sep);
  j["k"] = r.k;
  j["alpha"] = alpha;
  j["small_side"] = names(g, r.sep.a_only());
  json cert = json::array();
  for (const auto& p : r.certificate) {
    json path = json::array();
    for (Vertex v : p) path.push_back(g.name(v));
    cert.push_back(path);
  }
  j["certificate"] = cert;
  return j;
}

json alpha_json(const TruncatedGraph& g, const AlphaTable& a) {
  json ranks = json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) ranks[g.name(v)] = a.vertex_rank(v);
  int top = 0;
  for (int r : a.sep_ranks()) top = std::max(top, r);
  return {{"pool_size", a.pool().size()},
          {"max_alpha", top},
          {"vertex_alpha", ranks},
          {"locally_finite", g.locally_finite()}};
}

namespace {

std::string cycles(const TruncatedGraph& g, const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (seen[v] || p[v] == static_cast<Vertex>(v)) continue;
    out += "(";
    for (Vertex x = static_cast<Vertex>(v); !seen[x]; x = p[x]) {
      if (out.back() != '(') out += " ";
      out += g.name(x);
      seen[x] = 1;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

json automorphisms_json(const TruncatedGraph& g, const AutomorphismGroup& aut,
                        int margin) {
  json gens = json::array();
  for (const auto& p : aut.generators) gens.push_back(cycles(g, p));
  json orbits = json::array();
  for (const auto& o : aut.orbits) orbits.push_back(names(g, o));
  json j = {{"generators", gens},
            {"orbits", orbits},
            {"orbit_count", aut.orbits.size()},
            {"interior_orbit_count", orbit_count_interior(g, aut, margin)},
            {"margin", margin}};
  j["order"] = aut.large ? json("Large") : json(aut.order);
  return j;
}

json td_json(const TruncatedGraph& g, const TreeDecomposition& td) {
  json nodes = json::array();
  json parts = json::object();
  for (std::size_t i = 0; i < td.tree.nodes.size(); ++i) {
    const auto& n = td.tree.nodes[i];
    nodes.push_back({{"id", i},
                     {"A", names(g, n.sep.a())},
                     {"B", names(g, n.sep.b())},
                     {"level", n.level},
                     {"orbit", n.orbit},
                     {"synthetic", n.synthetic}});
    parts[std::to_string(i)] = names(g, td.parts[i]);
  }
  json edges = json::array();
  for (auto [s, t] : td.tree.edges) edges.push_back({s, t});
  return {{"graph", graph_json(g)}, {"k", td.k},        {"nodes", nodes},
          {"edges", edges},         {"parts", parts},   {"spine", td.tree.spine},
          {"root", td.tree.root}};
}

TreeDecomposition td_from_json(const TruncatedGraph& g, const json& j) {
  TreeDecomposition td;
  td.k = field<int>(j, "k");
  const json nodes = field<json>(j, "nodes");
  if (!nodes.is_array()) fail(ErrorCode::kParse, "nodes must be an array");
  const json parts = field<json>(j, "parts");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (field<std::size_t>(n, "id") != i)
      fail(ErrorCode::kParse, "node ids must be 0, 1, 2, ... in order");
    TdNode node;
    node.sep = unchecked_separation(vertices(g, field<json>(n, "A")),
                                    vertices(g, field<json>(n, "B")));
    node.level = field<int>(n, "level");
    node.orbit = field<int>(n, "orbit");
    node.synthetic = n.contains("synthetic") && field<bool>(n, "synthetic");
    td.tree.nodes.push_back(std::move(node));
    td.parts.push_back(vertices(g, field<json>(parts, std::to_string(i).c_str())));
  }
  for (const auto& e : field<json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2)
      fail(ErrorCode::kParse, "edges must be [child, parent] pairs");
    td.tree.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  td.tree.spine = field<std::vector<int>>(j, "spine");
  td.tree.root = field<int>(j, "root");
  return td;
}

json report_json(const TdReport& r) {
  return {{"passed", r.passed()},
          {"tree", r.tree_ok},
          {"T1", r.t1},
          {"coverage", r.coverage},
          {"T2", r.t2},
          {"T3", r.t3},
          {"adhesion", r.adhesion},
          {"adhesion_ok", r.adhesion_ok},
          {"associated", r.associated},
          {"display", r.display},
          {"one_ended", r.one_ended},
          {"depth_bound", r.depth_bound},
          {"invariant", r.invariant},
          {"tail_fixed", r.tail_fixed},
          {"failures", r.failures}};
}

json ray_json(const TruncatedGraph& g, const RayDecomposition& rd) {
  json slabs = json::array();
  for (const auto& s : rd.slabs) slabs.push_back(names(g, s));
  json interfaces = json::array();
  for (const auto& s : rd.interfaces) interfaces.push_back(names(g, s));
  return {{"m", rd.m},
          {"slabs", slabs},
          {"interfaces", interfaces},
          {"slab_paths", rd.slab_paths},
          {"conditions",
           {{"covers", rd.covers},
            {"interfaces", rd.interfaces_ok},
            {"linked", rd.linked},
            {"rayless", rd.rayless}}},
          {"passed", rd.passed()}};
}

json analysis_json(const Analysis& a) {
  json j = {{"family", a.family},
            {"degree", degree_json(a.degree)},
            {"dominators", domination_json(a.domination)},
            {"interior_orbit_counts", a.orbit_counts},
            {"consistency_warning", a.consistency_warning},
            {"locally_finite", a.locally_finite}};
  j["group_order"] = a.group_large ? json("Large") : json(a.group_order);
  if (a.consistency_warning) j["warning"] = a.warning;
  return j;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_dot(const TruncatedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quote(g.name(v));
    if (g.horizon().contains(v)) out << " [shape=box]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges())
    out << "  " << quote(g.name(u)) << " -- " << quote(g.name(v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string td_dot(const TruncatedGraph& g, const TreeDecomposition& td) {
  std::ostringstream out;
  out << "digraph T {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < td.tree.nodes.size(); ++i) {
    std::string label = std::to_string(i) + " (level " +
                        std::to_string(td.tree.nodes[i].level) + ")\\n";
    for (std::size_t k = 0; k < td.parts[i].size(); ++k)
      label += (k ? " " : "") + g.name(td.parts[i][k]);
    out << "  n" << i << " [label=" << quote(label) << "];\n";
  }
  for (auto [s, t] : td.tree.edges) out << "  n" << s << " -> n" << t << ";\n";
  out << "}\n";
  return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace endtree::io
