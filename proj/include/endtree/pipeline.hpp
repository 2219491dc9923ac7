#pragma once

#include <climits>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "endtree/connectivity.hpp"
#include "endtree/decomposition.hpp"
#include "endtree/relevant.hpp"
#include "endtree/symmetry.hpp"

namespace endtree {

struct Limits {
  std::size_t enumerate = 5'000'000;  // separator candidates
  std::size_t search_nodes = 2'000'000;
  std::size_t max_vertices = 5000;
};

// ENDTREE_BUDGET holds either one integer applied to every cap or
// comma-separated key=value pairs (enumerate, search, vertices).
// Throws kInvalidArgument on malformed text.
Limits parse_limits(const std::string& text, Limits base = {});
Limits limits_from_env(Limits base = {});

struct Analysis {
  std::string family;
  DegreeReport degree;
  DominationReport domination;
  std::vector<int> orbit_counts;  // interior orbits per radius
  std::uint64_t group_order = 1;  // at the largest radius
  bool group_large = false;
  bool consistency_warning = false;
  std::string warning;
  bool locally_finite = true;
};

// Degree, dominators and interior orbit counts over the radii.
Analysis analyze(const FamilySpec& family, const std::vector<int>& radii,
                 int cap, int margin = 1, const Limits& limits = {});

struct PipelineConfig {
  FamilySpec family;
  int radius = 5;
  std::vector<int> radii{4, 6, 8};  // for the degree and domination checks
  int cap = 8;
  std::optional<int> k;
  int max_side = INT_MAX;
  Limits limits;
};

struct PipelineResult {
  TruncatedGraph graph;
  int k = 0;
  DegreeReport degree;
  DominationReport domination;
  AutomorphismGroup group;
  std::size_t pool_size = 0;
  NestedFamily family;
  TreeDecomposition td;
  TdReport report;
};

// enumerate → alpha → automorphisms → family → tree → decomposition →
// verification. Throws kPrecondition for thick or dominated ends.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace endtree
