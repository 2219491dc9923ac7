#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "endtree/error.hpp"

namespace endtree {

// Vertices are dense indices into a TruncatedGraph. Indices are assigned in
// lexicographic order of the vertex names, so ascending index order is the
// canonical order of vertex ids.
using Vertex = std::int32_t;

// A duplicate-free, ascending set of vertices. Structural equality is set
// equality.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);  // sorts and deduplicates

  static VertexSet from_sorted(std::vector<Vertex> vs) {
    VertexSet s;
    s.items_ = std::move(vs);
    return s;
  }
  static VertexSet range(Vertex n);  // {0, ..., n-1}

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vertex>& items() const noexcept { return items_; }

  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

// A finite snapshot of a one-ended infinite graph family. Immutable once
// built; every operation on it is a pure function.
class TruncatedGraph {
 public:
  struct Payload {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> horizon;
    std::vector<std::string> base;  // optional
    std::map<std::string, std::string> labels;
  };

  // Validates connectivity, horizon membership, and rejects self-loops and
  // parallel edges.
  static TruncatedGraph from_payload(const Payload& payload,
                                     std::string family = "custom",
                                     int radius = 0);

  Vertex vertex_count() const noexcept {
    return static_cast<Vertex>(names_.size());
  }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  const std::string& name(Vertex v) const { return names_[v]; }
  std::optional<Vertex> find(const std::string& name) const;
  Vertex at(const std::string& name) const;  // throws kUnknownVertex
  VertexSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const VertexSet& s) const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const VertexSet& horizon() const noexcept { return horizon_; }
  const VertexSet& base() const noexcept { return base_; }
  VertexSet all() const { return VertexSet::range(vertex_count()); }

  int radius() const noexcept { return radius_; }
  const std::string& family() const noexcept { return family_; }
  bool locally_finite() const noexcept { return locally_finite_; }
  void set_locally_finite(bool lf) { locally_finite_ = lf; }

  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, sorted
  Payload to_payload() const;

  // Throws kUnknownVertex when s holds an index outside the graph.
  void check_vertices(const VertexSet& s) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::map<std::string, Vertex> index_;
  VertexSet horizon_;
  VertexSet base_;
  std::size_t edge_count_ = 0;
  int radius_ = 0;
  std::string family_;
  bool locally_finite_ = true;
};

// ∂s: vertices outside s with a neighbour in s.
VertexSet neighborhood(const TruncatedGraph& g, const VertexSet& s);

// Components of g - removed, each canonically ordered, listed by their
// least vertex.
std::vector<VertexSet> components(const TruncatedGraph& g,
                                  const VertexSet& removed);

// The component of g - removed holding every horizon vertex. Throws
// kHorizonSplit when removed meets the horizon or the horizon is spread over
// several components.
VertexSet horizon_component(const TruncatedGraph& g, const VertexSet& removed);

// Breadth-first distances from a source set; -1 for unreachable vertices.
// Vertices in `blocked` are never entered.
std::vector<int> distances_from(const TruncatedGraph& g,
                                const VertexSet& sources,
                                const VertexSet& blocked = {});

bool is_connected_set(const TruncatedGraph& g, const VertexSet& s);

// Built-in families and the custom payload family.
struct FamilySpec {
  std::string name;
  std::map<std::string, int> parameters;
  std::optional<TruncatedGraph::Payload> custom;
};

const std::vector<std::string>& builtin_families();

// Throws kUnknownFamily, kInvalidParameters, or kInvalidGraph.
TruncatedGraph generate_family(const FamilySpec& spec, int radius);

}  // namespace endtree
