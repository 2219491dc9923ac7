#pragma once

// Exhaustive reference implementations for small graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "endtree/graph.hpp"
#include "endtree/separations.hpp"

namespace endtree::oracle {

inline std::string vid(int i) {
  return std::string("x") + (i < 10 ? "0" : "") + std::to_string(i);
}

// Connected graph on n vertices: a random spanning tree plus each other pair
// with probability p. Horizon is the last vertex.
inline TruncatedGraph random_connected(std::mt19937& rng, int n, double p) {
  TruncatedGraph::Payload pl;
  for (int i = 0; i < n; ++i) pl.vertices.push_back(vid(i));
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.insert({j, i});
  }
  std::bernoulli_distribution extra(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (extra(rng)) edges.insert({i, j});
  for (auto [a, b] : edges) pl.edges.emplace_back(vid(a), vid(b));
  pl.horizon = {vid(n - 1)};
  pl.base = {vid(0)};
  return TruncatedGraph::from_payload(pl);
}

inline std::vector<VertexSet> subsets_of_size(const std::vector<Vertex>& pool,
                                              std::size_t size) {
  std::vector<VertexSet> out;
  if (size > pool.size()) return out;
  std::vector<char> pick(pool.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(size), 1);
  do {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) s.push_back(pool[i]);
    out.push_back(VertexSet::from_sorted(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline bool reaches(const TruncatedGraph& g, const VertexSet& x,
                    const VertexSet& y, const VertexSet& removed) {
  VertexSet from = x - removed;
  if (from.empty()) return false;
  auto dist = distances_from(g, from, removed);
  for (Vertex v : y)
    if (!removed.contains(v) && dist[v] >= 0) return true;
  return false;
}

// Smallest S avoiding X ∪ Y ∪ excluded that separates X from Y in
// G - excluded; |V| + 1 when X and Y touch.
inline int min_terminal_cut(const TruncatedGraph& g, const VertexSet& x,
                            const VertexSet& y, const VertexSet& excluded = {}) {
  if (x.intersects(y)) return g.vertex_count() + 1;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (y.contains(w)) return g.vertex_count() + 1;
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!x.contains(v) && !y.contains(v) && !excluded.contains(v)) pool.push_back(v);
  for (std::size_t size = 0; size <= pool.size(); ++size)
    for (const auto& s : subsets_of_size(pool, size))
      if (!reaches(g, x, y, s | excluded)) return static_cast<int>(size);
  return static_cast<int>(pool.size());
}

// Smallest S ⊆ V \ excluded meeting every X–Y path in G - excluded.
inline int min_disjoint_cut(const TruncatedGraph& g, const VertexSet& x,
                            const VertexSet& y, const VertexSet& excluded = {}) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!excluded.contains(v)) pool.push_back(v);
  for (std::size_t size = 0; size <= pool.size(); ++size)
    for (const auto& s : subsets_of_size(pool, size))
      if (!reaches(g, x, y, s | excluded)) return static_cast<int>(size);
  return static_cast<int>(pool.size());
}

inline VertexSet component_containing(const TruncatedGraph& g, Vertex v,
                                      const VertexSet& removed) {
  for (const auto& c : components(g, removed))
    if (c.contains(v)) return c;
  return {};
}

// All minimal u–v separators of size ≤ k: both sides' components are full.
inline std::vector<VertexSet> minimal_separators(const TruncatedGraph& g,
                                                 Vertex u, Vertex v, int k) {
  std::vector<Vertex> pool;
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != u && w != v) pool.push_back(w);
  std::vector<VertexSet> out;
  for (int size = 1; size <= k; ++size)
    for (const auto& s : subsets_of_size(pool, static_cast<std::size_t>(size))) {
      VertexSet cu = component_containing(g, u, s);
      if (cu.contains(v)) continue;
      VertexSet cv = component_containing(g, v, s);
      if (neighborhood(g, cu) == s && neighborhood(g, cv) == s) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Relevant separations by scanning every connected vertex set avoiding the
// horizon with |A\B| ≤ max_side and checking the definition directly.
inline std::vector<VertexSet> relevant_small_sides(const TruncatedGraph& g, int k,
                                                   int max_side) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.horizon().contains(v)) pool.push_back(v);
  std::vector<VertexSet> out;
  for (int size = 1; size <= max_side; ++size)
    for (const auto& c : subsets_of_size(pool, static_cast<std::size_t>(size))) {
      if (!is_connected_set(g, c)) continue;
      VertexSet s = neighborhood(g, c);
      if (static_cast<int>(s.size()) != k || s.intersects(g.horizon())) continue;
      if (min_disjoint_cut(g, s, g.horizon(), c) < k) continue;
      out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of adjacency- and horizon-preserving permutations.
inline std::uint64_t automorphism_count(const TruncatedGraph& g) {
  std::vector<Vertex> p(static_cast<std::size_t>(g.vertex_count()));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (Vertex v = 0; ok && v < g.vertex_count(); ++v) {
      ok = g.degree(v) == g.degree(p[v]) &&
           g.horizon().contains(v) == g.horizon().contains(p[v]);
      for (Vertex w : g.neighbors(v)) ok = ok && g.adjacent(p[v], p[w]);
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace endtree::oracle
