#include "endtree/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace endtree {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kHorizonSplit: return "HorizonSplit";
    case ErrorCode::kNotCovering: return "NotCovering";
    case ErrorCode::kCrossEdge: return "CrossEdge";
    case ErrorCode::kNoSeparator: return "NoSeparator";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kUnstable: return "Unstable";
    case ErrorCode::kBudget: return "Budget";
    case ErrorCode::kWrongOrder: return "WrongOrder";
    case ErrorCode::kSideDisconnected: return "SideDisconnected";
    case ErrorCode::kSeparatorNotAttached: return "SeparatorNotAttached";
    case ErrorCode::kHorizonOnWrongSide: return "HorizonOnWrongSide";
    case ErrorCode::kSmallerCutExists: return "SmallerCutExists";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kEmptyNiceSet: return "EmptyNiceSet";
    case ErrorCode::kNiceSetViolation: return "NiceSetViolation";
    case ErrorCode::kNotEnoughLevels: return "NotEnoughLevels";
    case ErrorCode::kNestednessViolation: return "NestednessViolation";
    case ErrorCode::kOutdegreeViolation: return "OutdegreeViolation";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> vs)
    : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::range(Vertex n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return from_sorted(std::move(v));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

// ---------------------------------------------------------------------------
// TruncatedGraph

TruncatedGraph TruncatedGraph::from_payload(const Payload& payload,
                                            std::string family, int radius) {
  TruncatedGraph g;
  g.family_ = std::move(family);
  g.radius_ = radius;

  std::set<std::string> unique(payload.vertices.begin(),
                               payload.vertices.end());
  if (unique.size() != payload.vertices.size())
    fail(ErrorCode::kInvalidGraph, "duplicate vertex id");
  if (unique.empty()) fail(ErrorCode::kInvalidGraph, "graph has no vertices");
  g.names_.assign(unique.begin(), unique.end());
  for (Vertex i = 0; i < g.vertex_count(); ++i) g.index_[g.names_[i]] = i;

  g.adj_.assign(g.names_.size(), {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [un, vn] : payload.edges) {
    auto u = g.find(un);
    auto v = g.find(vn);
    if (!u || !v)
      fail(ErrorCode::kInvalidGraph, "edge " + un + "-" + vn +
                                         " names an unknown vertex");
    if (*u == *v) fail(ErrorCode::kInvalidGraph, "self-loop at " + un);
    auto key = std::minmax(*u, *v);
    if (!seen.insert(key).second)
      fail(ErrorCode::kInvalidGraph, "parallel edge " + un + "-" + vn);
    g.adj_[*u].push_back(*v);
    g.adj_[*v].push_back(*u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edge_count_ = seen.size();

  g.labels_.assign(g.names_.size(), std::string());
  for (const auto& [name, label] : payload.labels) {
    auto v = g.find(name);
    if (!v) fail(ErrorCode::kInvalidGraph, "label for unknown vertex " + name);
    g.labels_[*v] = label;
  }

  std::vector<Vertex> horizon;
  for (const auto& name : payload.horizon) {
    auto v = g.find(name);
    if (!v) fail(ErrorCode::kInvalidGraph, "horizon vertex " + name + " unknown");
    horizon.push_back(*v);
  }
  g.horizon_ = VertexSet(std::move(horizon));
  if (g.horizon_.empty()) fail(ErrorCode::kInvalidGraph, "horizon is empty");

  if (!is_connected_set(g, g.all()))
    fail(ErrorCode::kInvalidGraph, "graph is not connected");

  if (!payload.base.empty()) {
    g.base_ = g.set_of(payload.base);
  } else {
    // Lexicographically least vertex at maximal distance from the horizon.
    auto dist = distances_from(g, g.horizon_);
    Vertex best = 0;
    for (Vertex v = 1; v < g.vertex_count(); ++v)
      if (dist[v] > dist[best]) best = v;
    g.base_ = VertexSet{best};
  }
  return g;
}

bool TruncatedGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Vertex> TruncatedGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex TruncatedGraph::at(const std::string& name) const {
  auto v = find(name);
  if (!v) fail(ErrorCode::kUnknownVertex, "unknown vertex id '" + name + "'");
  return *v;
}

VertexSet TruncatedGraph::set_of(const std::vector<std::string>& names) const {
  std::vector<Vertex> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(at(n));
  return VertexSet(std::move(out));
}

std::vector<std::string> TruncatedGraph::names_of(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(names_[v]);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> TruncatedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

TruncatedGraph::Payload TruncatedGraph::to_payload() const {
  Payload p;
  p.vertices = names_;
  for (auto [u, v] : edges()) p.edges.emplace_back(names_[u], names_[v]);
  p.horizon = names_of(horizon_);
  p.base = names_of(base_);
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (!labels_[v].empty()) p.labels[names_[v]] = labels_[v];
  return p;
}

void TruncatedGraph::check_vertices(const VertexSet& s) const {
  if (!s.empty() && (s[0] < 0 || s.items().back() >= vertex_count()))
    fail(ErrorCode::kUnknownVertex, "vertex index out of range");
}

// ---------------------------------------------------------------------------
// Basic traversal

VertexSet neighborhood(const TruncatedGraph& g, const VertexSet& s) {
  g.check_vertices(s);
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) out.push_back(w);
  return VertexSet(std::move(out));
}

std::vector<VertexSet> components(const TruncatedGraph& g,
                                  const VertexSet& removed) {
  g.check_vertices(removed);
  const Vertex n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

VertexSet horizon_component(const TruncatedGraph& g, const VertexSet& removed) {
  if (removed.intersects(g.horizon()))
    fail(ErrorCode::kHorizonSplit, "removed set meets the horizon");
  for (auto& c : components(g, removed)) {
    if (!c.intersects(g.horizon())) continue;
    if (!g.horizon().subset_of(c))
      fail(ErrorCode::kHorizonSplit,
           "horizon meets several components; radius too small");
    return c;
  }
  fail(ErrorCode::kInternal, "horizon vanished");
}

std::vector<int> distances_from(const TruncatedGraph& g,
                                const VertexSet& sources,
                                const VertexSet& blocked) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (blocked.contains(s)) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0 || blocked.contains(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

bool is_connected_set(const TruncatedGraph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<Vertex> stack{s[0]};
  seen[s[0]] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return count == s.size();
}

}  // namespace endtree
