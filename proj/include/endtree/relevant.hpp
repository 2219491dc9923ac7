#pragma once

#include <map>
#include <vector>

#include "endtree/graph.hpp"
#include "endtree/separations.hpp"
#include "endtree/symmetry.hpp"

namespace endtree {

// A separation (A,B) of order k with connected non-empty A\B, every
// separator vertex attached to A\B, the horizon inside B\A, and k disjoint
// separator-to-horizon paths avoiding A\B (the certificate).
struct RelevantSeparation {
  Separation sep;
  int k = 0;
  std::vector<std::vector<Vertex>> certificate;

  friend bool operator==(const RelevantSeparation& x,
                         const RelevantSeparation& y) {
    return x.sep == y.sep;
  }
};

// Throws kWrongOrder, kHorizonOnWrongSide, kSideDisconnected,
// kSeparatorNotAttached or kSmallerCutExists for the first failed condition.
RelevantSeparation verify_relevant(const TruncatedGraph& g, const Separation& s,
                                   int k);

// Every relevant separation with |A\B| ≤ max_side, ordered by A\B. Candidates
// are the components of G - S for the k-sets S avoiding the horizon; throws
// kBudget when there are more than `budget` such sets.
std::vector<RelevantSeparation> enumerate_relevant(const TruncatedGraph& g,
                                                   int k, int max_side,
                                                   std::size_t budget = 5'000'000);

// Strictly increasing chain of relevant separations whose separators are the
// disjoint separator sequence; A_n \ B_n is the component of G - T_n holding
// the base.
std::vector<RelevantSeparation> build_exhausting_sequence(const TruncatedGraph& g,
                                                          int k);

class AlphaTable {
 public:
  AlphaTable(std::vector<RelevantSeparation> pool, std::vector<int> sep_rank,
             std::vector<int> vertex_rank);

  const std::vector<RelevantSeparation>& pool() const { return pool_; }
  const std::vector<int>& sep_ranks() const { return sep_rank_; }
  const std::vector<int>& vertex_ranks() const { return vertex_rank_; }

  int rank(const Separation& s) const;  // throws kInvalidArgument if not pooled
  int vertex_rank(Vertex v) const { return vertex_rank_[v]; }
  int set_rank(const VertexSet& s) const;  // 0 for the empty set
  std::optional<std::size_t> index_of(const Separation& s) const;

 private:
  std::vector<RelevantSeparation> pool_;
  std::vector<int> sep_rank_;
  std::vector<int> vertex_rank_;
  std::map<VertexSet, std::size_t> by_side_;
};

// Longest-chain ranks on the ≤ order restricted to the pool; the pool is
// stored in canonical order. Throws kCycleDetected on duplicate members.
AlphaTable compute_alpha(const TruncatedGraph& g,
                         std::vector<RelevantSeparation> pool);

// The ≤-minimal X-nice pool members: every separator vertex outranks the A
// side of x, and some image of x's A side lies inside A. Throws
// kEmptyNiceSet, or kNiceSetViolation if the result is not a single orbit of
// pairwise nested separations with at most one member per image (images
// near the horizon may have none).
std::vector<RelevantSeparation> compute_nice_set(const TruncatedGraph& g,
                                                 const Separation& x,
                                                 const AlphaTable& alpha,
                                                 const AutomorphismGroup& aut);

}  // namespace endtree
