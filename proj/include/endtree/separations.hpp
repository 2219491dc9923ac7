#pragma once

#include <utility>

#include "endtree/graph.hpp"

namespace endtree {

// An ordered pair (A, B) with A ∪ B = V and no edge between A\B and B\A.
// Degenerate (improper) separations are representable.
class Separation {
 public:
  Separation() = default;  // the empty pair

  const VertexSet& a() const noexcept { return a_; }
  const VertexSet& b() const noexcept { return b_; }
  const VertexSet& a_only() const noexcept { return a_only_; }
  const VertexSet& b_only() const noexcept { return b_only_; }
  const VertexSet& separator() const noexcept { return separator_; }
  int order() const noexcept { return static_cast<int>(separator_.size()); }

  Separation reversed() const;

  friend bool operator==(const Separation& x, const Separation& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend auto operator<=>(const Separation& x, const Separation& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

 private:
  friend Separation make_separation(const TruncatedGraph&, VertexSet,
                                    VertexSet);
  friend Separation unchecked_separation(VertexSet, VertexSet);
  Separation(VertexSet a, VertexSet b);

  VertexSet a_, b_, a_only_, b_only_, separator_;
};

// Validates A ∪ B = V (kNotCovering) and the absence of A\B–B\A edges
// (kCrossEdge, naming the edge).
Separation make_separation(const TruncatedGraph& g, VertexSet a, VertexSet b);

// For sides already known to form a separation (images under automorphisms,
// corners of valid separations).
Separation unchecked_separation(VertexSet a, VertexSet b);

// The separation whose small side is the component set `a_only`:
// A = a_only ∪ ∂a_only, B = V \ a_only.
Separation separation_from_side(const TruncatedGraph& g,
                                const VertexSet& a_only);

bool is_proper(const Separation& s);
bool is_tight(const TruncatedGraph& g, const Separation& s);

// ((A∩C, B∪D), (B∩D, A∪C)). The order sum of the corners equals the order
// sum of the inputs; the call checks this and throws kInternal otherwise.
std::pair<Separation, Separation> corner_separations(const Separation& s1,
                                                     const Separation& s2);

// (A,B) ≤ (C,D) iff A ⊆ C and B ⊇ D.
bool leq(const Separation& s1, const Separation& s2);

// One of the four inclusion clauses holds.
bool nested(const Separation& s1, const Separation& s2);

}  // namespace endtree
