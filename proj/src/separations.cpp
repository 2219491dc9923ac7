#include "endtree/separations.hpp"

namespace endtree {

Separation::Separation(VertexSet a, VertexSet b)
    : a_(std::move(a)), b_(std::move(b)) {
  a_only_ = a_ - b_;
  b_only_ = b_ - a_;
  separator_ = a_ & b_;
}

Separation Separation::reversed() const { return Separation(b_, a_); }

Separation make_separation(const TruncatedGraph& g, VertexSet a, VertexSet b) {
  g.check_vertices(a);
  g.check_vertices(b);
  if ((a | b).size() != static_cast<std::size_t>(g.vertex_count()))
    fail(ErrorCode::kNotCovering, "A ∪ B does not cover the vertex set");
  Separation s(std::move(a), std::move(b));
  for (Vertex u : s.a_only())
    for (Vertex w : g.neighbors(u))
      if (s.b_only().contains(w))
        fail(ErrorCode::kCrossEdge,
             "edge " + g.name(u) + "-" + g.name(w) + " joins A\\B to B\\A");
  return s;
}

Separation unchecked_separation(VertexSet a, VertexSet b) {
  return Separation(std::move(a), std::move(b));
}

Separation separation_from_side(const TruncatedGraph& g,
                                const VertexSet& a_only) {
  VertexSet boundary = neighborhood(g, a_only);
  return unchecked_separation(a_only | boundary, g.all() - a_only);
}

bool is_proper(const Separation& s) {
  return !s.a_only().empty() && !s.b_only().empty();
}

bool is_tight(const TruncatedGraph& g, const Separation& s) {
  for (Vertex v : s.separator()) {
    bool to_a = false, to_b = false;
    for (Vertex w : g.neighbors(v)) {
      to_a = to_a || s.a_only().contains(w);
      to_b = to_b || s.b_only().contains(w);
    }
    if (!to_a || !to_b) return false;
  }
  return true;
}

std::pair<Separation, Separation> corner_separations(const Separation& s1,
                                                     const Separation& s2) {
  Separation lo = unchecked_separation(s1.a() & s2.a(), s1.b() | s2.b());
  Separation hi = unchecked_separation(s1.b() & s2.b(), s1.a() | s2.a());
  if (lo.order() + hi.order() != s1.order() + s2.order())
    fail(ErrorCode::kInternal, "corner order sum differs from input order sum");
  return {std::move(lo), std::move(hi)};
}

bool leq(const Separation& s1, const Separation& s2) {
  return s1.a().subset_of(s2.a()) && s2.b().subset_of(s1.b());
}

bool nested(const Separation& s1, const Separation& s2) {
  const auto& a = s1.a();
  const auto& b = s1.b();
  const auto& c = s2.a();
  const auto& d = s2.b();
  return (a.subset_of(c) && d.subset_of(b)) ||
         (a.subset_of(d) && c.subset_of(b)) ||
         (b.subset_of(c) && d.subset_of(a)) ||
         (b.subset_of(d) && c.subset_of(a));
}

}  // namespace endtree
