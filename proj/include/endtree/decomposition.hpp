#pragma once

#include <string>
#include <utility>
#include <vector>

#include "endtree/graph.hpp"
#include "endtree/relevant.hpp"
#include "endtree/separations.hpp"
#include "endtree/symmetry.hpp"

namespace endtree {

struct NestedFamily {
  int k = 0;
  Separation seed;                   // (A_0, B_0), not a member
  std::vector<Separation> members;   // ordered by level, then by A\B
  std::vector<int> level;            // 1-based generation index per member
  std::vector<std::size_t> spine;    // member index of (A_n, B_n), n = 1..top
  int top_level() const { return level.empty() ? 0 : level.back(); }
};

// Spine recursion through the nice sets, each level closed under the group.
// Throws kNotEnoughLevels, kNestednessViolation.
NestedFamily build_invariant_family(const TruncatedGraph& g, int k,
                                    const AlphaTable& alpha,
                                    const AutomorphismGroup& aut);

struct TdNode {
  Separation sep;
  int level = 0;
  int orbit = 0;
  bool synthetic = false;  // the added top node with A = V
};

// Edges run from a node to its successor one level up; the synthetic root
// sits above the top level.
struct DecompositionTree {
  std::vector<TdNode> nodes;
  std::vector<std::pair<int, int>> edges;  // (child, parent), sorted
  std::vector<int> spine;                  // A_1, ..., A_top, root
  int root = -1;
};

// Throws kOutdegreeViolation or kDisconnected.
DecompositionTree build_tree(const TruncatedGraph& g, const NestedFamily& family);

struct TreeDecomposition {
  int k = 0;
  DecompositionTree tree;
  std::vector<VertexSet> parts;  // per node
};

// P_t = A_t minus the A\B sides of t's in-neighbours.
TreeDecomposition build_tree_decomposition(const TruncatedGraph& g,
                                           const DecompositionTree& tree, int k);

struct TdReport {
  bool tree_ok = true;        // |E| = |N| - 1, connected, one successor each
  bool t1 = true;             // covered region
  double coverage = 0;        // fraction of non-horizon vertices in some part
  bool t2 = true;
  bool t3 = true;
  int adhesion = 0;
  bool adhesion_ok = true;    // adhesion == k
  bool associated = true;     // (X_s, X_t) equals the node separation
  bool display = true;        // horizon inside X_t \ X_s
  bool one_ended = true;      // hanging subtrees shallower than their anchor
  int depth_bound = 0;        // D: deepest hanging subtree
  bool invariant = true;      // only checked when a group is supplied
  bool tail_fixed = true;     // induced automorphisms fix a spine tail
  std::vector<std::string> failures;

  bool passed() const {
    return tree_ok && t1 && coverage >= 0.9 && t2 && t3 && adhesion_ok &&
           associated && display && one_ended && invariant && tail_fixed;
  }
};

// Failures are report entries, never errors.
TdReport verify_tree_decomposition(const TruncatedGraph& g,
                                   const TreeDecomposition& td, int k,
                                   const AutomorphismGroup* aut = nullptr);

// Permutations of the tree nodes induced by the group generators, the root
// fixed. Throws kInvalidArgument when some generator does not map nodes onto
// nodes.
TreeAction induced_tree_action(const DecompositionTree& tree,
                               const AutomorphismGroup& aut);

struct RayDecomposition {
  int m = 0;
  std::vector<VertexSet> slabs;
  std::vector<VertexSet> interfaces;  // slabs[i] ∩ slabs[i+1]
  std::vector<int> slab_paths;        // disjoint paths across each inner slab
  bool covers = false;                // condition 1
  bool interfaces_ok = false;         // condition 2
  bool linked = false;                // condition 3
  bool rayless = false;               // condition 4, desk form
  bool passed() const { return covers && interfaces_ok && linked && rayless; }
};

RayDecomposition ray_decomposition(const TruncatedGraph& g, int m);

}  // namespace endtree
