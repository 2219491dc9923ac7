#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "endtree/graph.hpp"
#include "endtree/separations.hpp"

namespace endtree {

// perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  std::vector<int> orbit_of;      // orbit index of each vertex
  std::vector<VertexSet> orbits;  // ordered by least vertex
  std::uint64_t order = 1;        // exact when !large
  bool large = false;             // order exceeds kLargeOrder
};

inline constexpr std::uint64_t kLargeOrder = 1'000'000'000ULL;

struct SearchLimits {
  std::size_t max_vertices = 5000;
  std::size_t max_nodes = 2'000'000;
};

// Adjacency-preserving permutations that map the horizon onto itself.
// Throws kBudget when the graph or the search tree exceeds the limits.
AutomorphismGroup automorphisms(const TruncatedGraph& g,
                                const SearchLimits& limits = {});

bool is_automorphism(const TruncatedGraph& g, const Permutation& p);

VertexSet apply(const Permutation& p, const VertexSet& s);
Separation apply(const Permutation& p, const Separation& s);

// All images of s under the group, in canonical order. Throws kBudget when
// more than `cap` images exist.
std::vector<VertexSet> set_orbit(const AutomorphismGroup& aut,
                                 const VertexSet& s, std::size_t cap = 100000);
std::vector<Separation> separation_orbit(const AutomorphismGroup& aut,
                                         const Separation& s,
                                         std::size_t cap = 100000);

// Orbits meeting the vertices at distance ≥ margin from the horizon.
int orbit_count_interior(const TruncatedGraph& g, const AutomorphismGroup& aut,
                         int margin);

struct InvarianceResult {
  bool invariant = true;
  int generator = -1;  // witness: generator index
  int member = -1;     // witness: family index whose image is missing
};

InvarianceResult check_family_invariance(const std::vector<Separation>& family,
                                         const AutomorphismGroup& aut);

// For each generator that fixes the separator of s pointwise and both sides
// setwise, the restrictions to either side (identity elsewhere) must be
// automorphisms again.
struct IndependenceResult {
  int checked = 0;
  int failures = 0;
};
IndependenceResult check_independence(const TruncatedGraph& g,
                                      const AutomorphismGroup& aut,
                                      const std::vector<Separation>& seps);

// A group action on the nodes of a finite tree with a designated ray
// (listed from its first node towards its last).
struct TreeAction {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> ray;
  std::vector<std::vector<int>> generators;
};

struct TailResult {
  bool fixes_tail = true;
  int generator = -1;           // first generator fixing no tail
  std::vector<int> tail_start;  // per generator: first ray index of the fixed tail
};

TailResult tree_tail_check(const TreeAction& action);

}  // namespace endtree
