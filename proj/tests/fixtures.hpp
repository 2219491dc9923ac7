#pragma once

#include <random>
#include <string>
#include <vector>

#include "endtree/graph.hpp"
#include "endtree/separations.hpp"

namespace endtree::testing {

inline TruncatedGraph family(const std::string& name, int radius) {
  return generate_family(FamilySpec{name, {}, {}}, radius);
}

inline std::string v(int i) { return "spine:" + std::to_string(i); }

inline std::vector<std::string> spine_range(int lo, int hi) {
  std::vector<std::string> out;
  for (int i = lo; i <= hi; ++i) out.push_back(v(i));
  return out;
}

inline std::vector<std::string> columns(int lo, int hi) {
  std::vector<std::string> out;
  for (int c = lo; c <= hi; ++c)
    for (int r = 0; r < 2; ++r)
      out.push_back("L:" + std::to_string(r) + ":" + std::to_string(c));
  return out;
}

inline Separation sep(const TruncatedGraph& g, const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
  return make_separation(g, g.set_of(a), g.set_of(b));
}

// Ray prefix cut at spine:i.
inline Separation ray_cut(const TruncatedGraph& g, int i) {
  return sep(g, spine_range(0, i), spine_range(i, g.radius()));
}

}  // namespace endtree::testing

namespace endtree::testing {

// A random separation: a random set S, each component of G - S assigned to
// a side at random. About one draw in ten is degenerate (A = V).
inline Separation random_separation(const TruncatedGraph& g, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> pick_size(0, 4);
  std::uniform_int_distribution<Vertex> pick_vertex(0, g.vertex_count() - 1);
  std::vector<Vertex> s;
  for (int i = pick_size(rng); i > 0; --i) s.push_back(pick_vertex(rng));
  VertexSet sep(std::move(s));
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0)
    return make_separation(g, g.all(), sep);
  VertexSet a = sep, b = sep;
  for (const auto& c : components(g, sep)) {
    VertexSet& side = coin(rng) ? a : b;
    side = side | c;
  }
  return make_separation(g, a, b);
}

}  // namespace endtree::testing
