#include "endtree/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <limits>
#include <map>
#include <set>

namespace endtree {
namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Unit-capacity max-flow on the split graph: vertex v becomes in(v) = 2v and
// out(v) = 2v+1; source and sink follow the 2n split nodes.
class SplitFlow {
 public:
  explicit SplitFlow(Vertex n) : n_(n), adj_(2 * static_cast<size_t>(n) + 2) {}

  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }
  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }

  void add_arc(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int run() {
    int flow = 0;
    std::vector<int> parent_arc(adj_.size());
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<int> queue{source()};
      parent_arc[source()] = -2;
      while (!queue.empty() && parent_arc[sink()] == -1) {
        int node = queue.front();
        queue.pop_front();
        for (int id : adj_[node]) {
          const Arc& a = arcs_[id];
          if (a.cap > 0 && parent_arc[a.to] == -1) {
            parent_arc[a.to] = id;
            queue.push_back(a.to);
          }
        }
      }
      if (parent_arc[sink()] == -1) return flow;
      for (int node = sink(); node != source();) {
        int id = parent_arc[node];
        arcs_[id].cap -= 1;
        arcs_[id ^ 1].cap += 1;
        node = arcs_[id ^ 1].to;
      }
      ++flow;
    }
  }

  std::vector<char> reachable() const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{source()};
    seen[source()] = 1;
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (int id : adj_[node]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

  // Flow on the forward arc `id` (even ids are forward arcs).
  int flow_on(int id) const { return arcs_[id ^ 1].cap; }

  // Splits the flow into source-sink walks, returning the vertices visited.
  std::vector<std::vector<Vertex>> decompose() {
    std::vector<std::vector<Vertex>> out;
    std::vector<int> used(arcs_.size(), 0);
    while (true) {
      std::vector<Vertex> walk;
      int node = source();
      bool found = false;
      while (node != sink()) {
        found = false;
        for (int id : adj_[node]) {
          if (id % 2 != 0) continue;
          if (flow_on(id) - used[id] <= 0) continue;
          used[id] += 1;
          node = arcs_[id].to;
          found = true;
          break;
        }
        if (!found) break;
        if (node < 2 * n_ && node % 2 == 0) walk.push_back(node / 2);
      }
      if (!found) break;
      out.push_back(std::move(walk));
    }
    return out;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };
  Vertex n_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

// Trims a walk to an X–Y path: from its last X vertex to the first Y vertex
// after it.
std::vector<Vertex> trim_to_xy(const std::vector<Vertex>& walk,
                               const VertexSet& x, const VertexSet& y) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (x.contains(walk[i])) start = i;
  std::size_t stop = walk.size() - 1;
  for (std::size_t i = start; i < walk.size(); ++i)
    if (y.contains(walk[i])) {
      stop = i;
      break;
    }
  return {walk.begin() + static_cast<long>(start),
          walk.begin() + static_cast<long>(stop) + 1};
}

}  // namespace

CutResult max_disjoint_paths(const TruncatedGraph& g, const VertexSet& x,
                             const VertexSet& y, const VertexSet& excluded,
                             PathMode mode) {
  g.check_vertices(x);
  g.check_vertices(y);
  g.check_vertices(excluded);
  if (x.empty() || y.empty())
    fail(ErrorCode::kInvalidArgument, "X and Y must be non-empty");
  if (x.intersects(excluded) || y.intersects(excluded))
    fail(ErrorCode::kInvalidArgument, "X and Y must avoid the excluded set");

  const Vertex n = g.vertex_count();
  CutResult result;
  if (mode == PathMode::kTerminals) {
    bool touching = x.intersects(y);
    for (Vertex v : x)
      for (Vertex w : g.neighbors(v)) touching = touching || y.contains(w);
    if (touching) {
      result.unbounded = true;
      result.value = n + 1;
      return result;
    }
  }

  SplitFlow flow(n);
  std::vector<char> blocked(n, 0);
  for (Vertex v : excluded) blocked[v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    bool terminal = x.contains(v) || y.contains(v);
    int cap = (mode == PathMode::kTerminals && terminal) ? kInf : 1;
    flow.add_arc(flow.in(v), flow.out(v), cap);
    for (Vertex w : g.neighbors(v))
      if (!blocked[w]) flow.add_arc(flow.out(v), flow.in(w), kInf);
  }
  for (Vertex v : x) flow.add_arc(flow.source(), flow.in(v), kInf);
  for (Vertex v : y) flow.add_arc(flow.out(v), flow.sink(), kInf);

  result.value = flow.run();
  auto seen = flow.reachable();
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < n; ++v)
    if (!blocked[v] && seen[flow.in(v)] && !seen[flow.out(v)]) cut.push_back(v);
  result.cut = VertexSet(std::move(cut));
  for (auto& walk : flow.decompose())
    result.paths.push_back(trim_to_xy(walk, x, y));
  std::sort(result.paths.begin(), result.paths.end());
  if (static_cast<int>(result.cut.size()) != result.value ||
      static_cast<int>(result.paths.size()) != result.value)
    fail(ErrorCode::kInternal, "max-flow certificate mismatch");
  return result;
}

std::vector<VertexSet> enumerate_minimal_separators(const TruncatedGraph& g,
                                                    Vertex u, Vertex v, int k,
                                                    std::size_t budget) {
  if (u == v || g.adjacent(u, v))
    fail(ErrorCode::kInvalidArgument,
         "minimal separators need distinct non-adjacent vertices");

  auto component_of = [&](Vertex s, const VertexSet& removed) {
    for (auto& c : components(g, removed))
      if (c.contains(s)) return c;
    return VertexSet{};
  };
  auto closed = [&](const VertexSet& s) { return s | neighborhood(g, s); };

  // Separators are generated by the closure "move one separator vertex to
  // u's side and take the neighbourhood of v's component".
  std::set<VertexSet> found;
  std::deque<VertexSet> queue;
  auto push = [&](const VertexSet& s) {
    if (found.insert(s).second) {
      if (found.size() > budget)
        fail(ErrorCode::kBudget, "minimal separator enumeration budget exceeded");
      queue.push_back(s);
    }
  };

  VertexSet start = neighborhood(g, component_of(v, closed(VertexSet{u})));
  if (start.empty()) return {};
  push(start);
  while (!queue.empty()) {
    VertexSet s = queue.front();
    queue.pop_front();
    VertexSet cu = component_of(u, s);
    for (Vertex x : s) {
      if (g.adjacent(x, v)) continue;
      VertexSet grown = closed(cu | VertexSet{x});
      VertexSet d = component_of(v, grown);
      if (d.empty()) continue;
      push(neighborhood(g, d));
    }
  }

  std::vector<VertexSet> out;
  for (const auto& s : found)
    if (static_cast<int>(s.size()) <= k) out.push_back(s);
  return out;
}

SeparatorSequence disjoint_separator_sequence(const TruncatedGraph& g, int m) {
  if (m < 1) fail(ErrorCode::kInvalidArgument, "m must be positive");
  auto dist = distances_from(g, g.base());
  SeparatorSequence seq;
  seq.m = m;
  int radius = 1;
  while (true) {
    std::vector<Vertex> ball;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (dist[v] >= 0 && dist[v] <= radius) ball.push_back(v);
    VertexSet b(std::move(ball));
    if (b.intersects(g.horizon())) break;
    CutResult cut = max_disjoint_paths(g, b, g.horizon());
    if (cut.unbounded) break;
    if (cut.value != m)
      fail(ErrorCode::kDegreeMismatch,
           "minimum cut between the radius-" + std::to_string(radius) +
               " ball and the horizon is " + std::to_string(cut.value) +
               ", expected " + std::to_string(m));
    seq.separators.push_back(cut.cut);
    int far = 0;
    for (Vertex v : cut.cut) far = std::max(far, dist[v]);
    radius = far + 2;
  }
  if (seq.separators.size() < 2)
    fail(ErrorCode::kExhausted,
         "fewer than two disjoint separators fit in the truncation");
  return seq;
}

CutResult boundary_to_horizon_cut(const TruncatedGraph& g) {
  auto dist = distances_from(g, g.base());
  int farthest = *std::max_element(dist.begin(), dist.end());
  int target = g.radius() > 0 ? std::min(g.radius(), farthest) : farthest;
  std::vector<Vertex> sphere;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == target) sphere.push_back(v);
  return max_disjoint_paths(g, VertexSet(std::move(sphere)), g.horizon(), {},
                            PathMode::kDisjoint);
}

namespace {

void check_radii(const std::vector<int>& radii, int cap) {
  if (radii.size() < 3)
    fail(ErrorCode::kInvalidArgument, "at least three radii are required");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1])
      fail(ErrorCode::kInvalidArgument, "radii must be strictly increasing");
  if (cap < 1) fail(ErrorCode::kInvalidArgument, "cap must be positive");
}

template <typename F>
auto sweep(const std::vector<int>& radii, F&& per_radius) {
  using R = decltype(per_radius(0));
  std::vector<std::future<R>> jobs;
  for (int r : radii)
    jobs.push_back(std::async(std::launch::async, per_radius, r));
  std::vector<R> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

DegreeReport end_vertex_degree(const FamilySpec& family,
                               const std::vector<int>& radii, int cap) {
  check_radii(radii, cap);
  DegreeReport report;
  report.radii = radii;
  auto cuts = sweep(radii, [&](int r) {
    auto g = generate_family(family, r);
    auto c = boundary_to_horizon_cut(g);
    return std::make_pair(c.value, g.names_of(c.cut));
  });
  for (auto& [value, cut] : cuts) report.values.push_back(value);
  report.cut = cuts.back().second;
  const auto& v = report.values;
  int last = v.back(), prev = v[v.size() - 2];
  report.stable = last == prev;
  report.thick = last >= cap || last > prev;
  report.degree = report.thick ? 0 : last;
  return report;
}

std::vector<Vertex> reference_ray(const TruncatedGraph& g) {
  Vertex start = g.base()[0];
  auto dist = distances_from(g, VertexSet{start});
  Vertex end = -1;
  for (Vertex h : g.horizon())
    if (end < 0 || dist[h] < dist[end]) end = h;
  std::vector<Vertex> path{end};
  while (path.back() != start) {
    Vertex v = path.back();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == dist[v] - 1) {
        path.push_back(w);
        break;
      }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int fan_to_ray(const TruncatedGraph& g, Vertex v,
               const std::vector<Vertex>& ray) {
  std::vector<Vertex> target;
  for (Vertex r : ray)
    if (r != v) target.push_back(r);
  VertexSet nb = neighborhood(g, VertexSet{v});
  if (nb.empty() || target.empty()) return 0;
  return max_disjoint_paths(g, nb, VertexSet(std::move(target)), VertexSet{v},
                            PathMode::kDisjoint)
      .value;
}

DominationReport find_dominating_vertices(const FamilySpec& family,
                                          const std::vector<int>& radii,
                                          int cap, bool strict) {
  check_radii(radii, cap);
  std::vector<int> last(radii.end() - 3, radii.end());
  auto graphs = sweep(last, [&](int r) { return generate_family(family, r); });

  // Fan sizes for the vertices present at all three radii.
  std::vector<std::string> common = graphs[0].names_of(graphs[0].all());
  auto fans = sweep(std::vector<int>{0, 1, 2}, [&](int i) {
    const auto& g = graphs[static_cast<size_t>(i)];
    auto ray = reference_ray(g);
    std::map<std::string, int> out;
    for (const auto& name : common)
      if (auto v = g.find(name)) out[name] = fan_to_ray(g, *v, ray);
    return out;
  });

  DominationReport report;
  report.radii = radii;
  for (const auto& name : common) {
    if (!fans[1].count(name) || !fans[2].count(name)) continue;
    int f1 = fans[0].at(name), f2 = fans[1].at(name), f3 = fans[2].at(name);
    bool dominating = f3 >= cap || (f1 < f2 && f2 < f3);
    if (dominating) {
      report.dominators.push_back(name);
    } else if (f3 > f2) {
      report.unstable.push_back(name);
    }
  }
  report.stable = report.unstable.empty();
  if (strict && !report.stable)
    fail(ErrorCode::kUnstable,
         "dominating-vertex candidates changed at the largest radius (first: " +
             report.unstable.front() + "); try larger radii");
  return report;
}

}  // namespace endtree
