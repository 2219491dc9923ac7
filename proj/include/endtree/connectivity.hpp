#pragma once

#include <string>
#include <vector>

#include "endtree/graph.hpp"

namespace endtree {

// How X and Y take part in a path packing.
enum class PathMode {
  // X and Y act as contracted terminals: paths are X–Y paths whose inner
  // vertices are pairwise disjoint and lie outside X ∪ Y; cuts avoid X ∪ Y.
  // An edge between X and Y (or X ∩ Y ≠ ∅) makes the value unbounded.
  kTerminals,
  // Paths are pairwise vertex-disjoint including their ends; a vertex of
  // X ∩ Y is a trivial path; cuts may use vertices of X and Y.
  kDisjoint,
};

struct CutResult {
  int value = 0;
  bool unbounded = false;  // value is then |V| + 1
  VertexSet cut;           // the minimum cut closest to X
  std::vector<std::vector<Vertex>> paths;
};

// Maximum packing of X–Y paths avoiding `excluded`, with a minimum vertex cut
// certifying it (Menger duality, vertex-splitting unit-capacity max-flow).
CutResult max_disjoint_paths(const TruncatedGraph& g, const VertexSet& x,
                             const VertexSet& y, const VertexSet& excluded = {},
                             PathMode mode = PathMode::kTerminals);

// All separators S with |S| ≤ k that separate u and v minimally, in
// canonical order. Throws kBudget after `budget` separators have been
// generated, kInvalidArgument when u == v or u, v are adjacent.
std::vector<VertexSet> enumerate_minimal_separators(const TruncatedGraph& g,
                                                    Vertex u, Vertex v, int k,
                                                    std::size_t budget = 200000);

struct SeparatorSequence {
  int m = 0;
  std::vector<VertexSet> separators;  // ordered by distance from the base
};

// Pairwise disjoint size-m separators between the base and the horizon,
// built from minimum cuts between growing distance balls and the horizon.
// Throws kDegreeMismatch or kExhausted.
SeparatorSequence disjoint_separator_sequence(const TruncatedGraph& g, int m);

struct DegreeReport {
  std::vector<int> radii;
  std::vector<int> values;  // disjoint path counts per radius
  bool thick = false;
  bool stable = false;  // last two radii agree
  int degree = 0;       // meaningful when !thick
  std::vector<std::string> cut;  // minimum cut at the largest radius
};

// Disjoint paths from the boundary of the radius-(R-1) ball around the base
// to the horizon, swept over radii.
CutResult boundary_to_horizon_cut(const TruncatedGraph& g);
DegreeReport end_vertex_degree(const FamilySpec& family,
                               const std::vector<int>& radii, int cap);

// The canonical shortest base-to-horizon path used as reference ray.
std::vector<Vertex> reference_ray(const TruncatedGraph& g);

// Size of the largest fan from v to the reference ray (paths sharing only v).
int fan_to_ray(const TruncatedGraph& g, Vertex v,
               const std::vector<Vertex>& ray);

struct DominationReport {
  std::vector<int> radii;
  std::vector<std::string> dominators;  // vertex ids, canonical order
  bool stable = true;
  std::vector<std::string> unstable;  // grew only at the largest radius
};

// Throws kUnstable when `strict` and the candidate set changed at the largest
// radius.
DominationReport find_dominating_vertices(const FamilySpec& family,
                                          const std::vector<int>& radii,
                                          int cap, bool strict = true);

}  // namespace endtree
