#include "endtree/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>

namespace endtree {
namespace {

using Coloring = std::vector<int>;

int class_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Renumbers vertices by the rank of their signature. Ranks only depend on the
// signatures, so isomorphic inputs give corresponding outputs.
template <typename Sig>
Coloring rank_by(const std::vector<Sig>& sig) {
  std::vector<int> order(sig.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sig[a] < sig[b]; });
  Coloring out(sig.size());
  int color = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++color;
    out[order[i]] = color;
  }
  return out;
}

// Coarsest equitable refinement of c.
Coloring refine(const TruncatedGraph& g, Coloring c) {
  const Vertex n = g.vertex_count();
  int classes = class_count(c);
  std::vector<std::pair<int, std::vector<int>>> sig(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = c[v];
      sig[v].second.clear();
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(c[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    Coloring next = rank_by(sig);
    int next_classes = class_count(next);
    c = std::move(next);
    if (next_classes == classes) return c;
    classes = next_classes;
  }
}

Coloring individualize(const TruncatedGraph& g, const Coloring& c, Vertex v) {
  std::vector<std::pair<int, int>> sig(c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    sig[x] = {c[x], static_cast<Vertex>(x) == v ? 0 : 1};
  return refine(g, rank_by(sig));
}

std::vector<int> histogram(const Coloring& c) {
  std::vector<int> h(static_cast<std::size_t>(class_count(c)), 0);
  for (int x : c) ++h[x];
  return h;
}

// Least color whose cell is not a singleton, or -1 for discrete colorings.
int target_color(const Coloring& c) {
  auto h = histogram(c);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] > 1) return static_cast<int>(i);
  return -1;
}

std::vector<Vertex> cell(const Coloring& c, int color) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] == color) out.push_back(static_cast<Vertex>(v));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Search {
 public:
  Search(const TruncatedGraph& g, const SearchLimits& limits)
      : g_(g), limits_(limits) {}

  AutomorphismGroup run() {
    const Vertex n = g_.vertex_count();
    if (static_cast<std::size_t>(n) > limits_.max_vertices)
      fail(ErrorCode::kBudget, "graph exceeds the automorphism vertex cap");

    // Initial colors: degree, distance to the horizon, label.
    auto dist = distances_from(g_, g_.horizon());
    std::vector<std::tuple<int, int, std::string>> init(n);
    for (Vertex v = 0; v < n; ++v)
      init[v] = {g_.degree(v), dist[v], g_.label(v)};
    Coloring c = refine(g_, rank_by(init));

    // First path to a leaf.
    std::vector<Coloring> path{c};
    std::vector<Vertex> chosen;
    for (int t = target_color(path.back()); t >= 0;
         t = target_color(path.back())) {
      Vertex v = cell(path.back(), t).front();
      chosen.push_back(v);
      path.push_back(individualize(g_, path.back(), v));
    }
    for (const auto& p : path) hist_.push_back(histogram(p));
    leaf_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) leaf_[path.back()[v]] = v;

    AutomorphismGroup group;
    long double order = 1;
    for (int level = static_cast<int>(chosen.size()) - 1; level >= 0; --level) {
      const Coloring& here = path[static_cast<std::size_t>(level)];
      Vertex v = chosen[static_cast<std::size_t>(level)];
      UnionFind uf(static_cast<std::size_t>(n));
      auto absorb = [&](const Permutation& p) {
        for (Vertex x = 0; x < n; ++x) uf.unite(x, p[x]);
      };
      for (const auto& p : group.generators) absorb(p);
      std::vector<Vertex> failed;
      for (Vertex w : cell(here, target_color(here))) {
        if (uf.find(w) == uf.find(v)) continue;
        bool known_bad = false;
        for (Vertex f : failed) known_bad = known_bad || uf.find(f) == uf.find(w);
        if (known_bad) continue;
        Coloring start = individualize(g_, here, w);
        if (auto p = descend(start, static_cast<std::size_t>(level) + 1)) {
          group.generators.push_back(*p);
          absorb(*p);
        } else {
          failed.push_back(w);
        }
      }
      int orbit = 0;
      for (Vertex x = 0; x < n; ++x) orbit += uf.find(x) == uf.find(v);
      order *= orbit;
    }

    UnionFind all(static_cast<std::size_t>(n));
    for (const auto& p : group.generators)
      for (Vertex x = 0; x < n; ++x) all.unite(x, p[x]);
    group.orbit_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> orbits;
    for (Vertex x = 0; x < n; ++x) {
      int root = all.find(x);
      if (group.orbit_of[root] < 0) {
        group.orbit_of[root] = static_cast<int>(orbits.size());
        orbits.emplace_back();
      }
      group.orbit_of[x] = group.orbit_of[root];
      orbits[group.orbit_of[x]].push_back(x);
    }
    for (auto& o : orbits) group.orbits.push_back(VertexSet::from_sorted(o));
    group.large = order > static_cast<long double>(kLargeOrder);
    group.order = group.large ? 0 : static_cast<std::uint64_t>(order + 0.5L);
    return group;
  }

 private:
  std::optional<Permutation> descend(const Coloring& c, std::size_t depth) {
    if (++nodes_ > limits_.max_nodes)
      fail(ErrorCode::kBudget, "automorphism search node budget exceeded");
    if (depth >= hist_.size() || histogram(c) != hist_[depth]) return std::nullopt;
    int t = target_color(c);
    if (t < 0) {
      Permutation p(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) p[leaf_[c[v]]] = static_cast<Vertex>(v);
      if (is_automorphism(g_, p)) return p;
      return std::nullopt;
    }
    for (Vertex x : cell(c, t))
      if (auto p = descend(individualize(g_, c, x), depth + 1)) return p;
    return std::nullopt;
  }

  const TruncatedGraph& g_;
  SearchLimits limits_;
  std::vector<std::vector<int>> hist_;
  std::vector<Vertex> leaf_;  // leaf_[color] = vertex on the first leaf
  std::size_t nodes_ = 0;
};

}  // namespace

AutomorphismGroup automorphisms(const TruncatedGraph& g,
                                const SearchLimits& limits) {
  return Search(g, limits).run();
}

bool is_automorphism(const TruncatedGraph& g, const Permutation& p) {
  const Vertex n = g.vertex_count();
  if (static_cast<Vertex>(p.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex x : p) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != g.degree(p[v])) return false;
    for (Vertex w : g.neighbors(v))
      if (!g.adjacent(p[v], p[w])) return false;
  }
  return apply(p, g.horizon()) == g.horizon();
}

VertexSet apply(const Permutation& p, const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(p[v]);
  return VertexSet(std::move(out));
}

Separation apply(const Permutation& p, const Separation& s) {
  return unchecked_separation(apply(p, s.a()), apply(p, s.b()));
}

namespace {

template <typename T>
std::vector<T> closure(const AutomorphismGroup& aut, const T& seed,
                       std::size_t cap) {
  std::set<T> seen{seed};
  std::deque<T> queue{seed};
  while (!queue.empty()) {
    T cur = queue.front();
    queue.pop_front();
    for (const auto& p : aut.generators) {
      T img = endtree::apply(p, cur);
      if (seen.insert(img).second) {
        if (seen.size() > cap)
          fail(ErrorCode::kBudget, "orbit exceeds " + std::to_string(cap) +
                                       " images");
        queue.push_back(std::move(img));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<VertexSet> set_orbit(const AutomorphismGroup& aut,
                                 const VertexSet& s, std::size_t cap) {
  return closure(aut, s, cap);
}

std::vector<Separation> separation_orbit(const AutomorphismGroup& aut,
                                         const Separation& s, std::size_t cap) {
  return closure(aut, s, cap);
}

int orbit_count_interior(const TruncatedGraph& g, const AutomorphismGroup& aut,
                         int margin) {
  if (margin < 0 || (g.radius() > 0 && margin >= g.radius()))
    fail(ErrorCode::kInvalidArgument, "margin must lie in [0, radius)");
  auto dist = distances_from(g, g.horizon());
  std::set<int> seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= margin) seen.insert(aut.orbit_of[v]);
  return static_cast<int>(seen.size());
}

InvarianceResult check_family_invariance(const std::vector<Separation>& family,
                                         const AutomorphismGroup& aut) {
  std::set<Separation> members(family.begin(), family.end());
  for (std::size_t gi = 0; gi < aut.generators.size(); ++gi)
    for (std::size_t mi = 0; mi < family.size(); ++mi)
      if (!members.count(endtree::apply(aut.generators[gi], family[mi])))
        return {false, static_cast<int>(gi), static_cast<int>(mi)};
  return {};
}

IndependenceResult check_independence(const TruncatedGraph& g,
                                      const AutomorphismGroup& aut,
                                      const std::vector<Separation>& seps) {
  IndependenceResult result;
  for (const auto& s : seps) {
    for (const auto& p : aut.generators) {
      bool fixes = apply(p, s.a_only()) == s.a_only() &&
                   apply(p, s.b_only()) == s.b_only();
      for (Vertex v : s.separator()) fixes = fixes && p[v] == v;
      if (!fixes) continue;
      for (const VertexSet* side : {&s.a_only(), &s.b_only()}) {
        Permutation q(p.size());
        std::iota(q.begin(), q.end(), 0);
        for (Vertex v : *side) q[v] = p[v];
        ++result.checked;
        if (!is_automorphism(g, q)) ++result.failures;
      }
    }
  }
  return result;
}

TailResult tree_tail_check(const TreeAction& action) {
  TailResult result;
  const int len = static_cast<int>(action.ray.size());
  for (std::size_t gi = 0; gi < action.generators.size(); ++gi) {
    const auto& p = action.generators[gi];
    int start = len;
    while (start > 0 && p[action.ray[start - 1]] == action.ray[start - 1])
      --start;
    result.tail_start.push_back(start);
    if (start == len && result.fixes_tail) {
      result.fixes_tail = false;
      result.generator = static_cast<int>(gi);
    }
  }
  return result;
}

}  // namespace endtree
