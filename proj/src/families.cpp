#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "endtree/graph.hpp"

namespace endtree {
namespace {

using Payload = TruncatedGraph::Payload;

struct Builder {
  Payload p;

  void vertex(const std::string& id, const std::string& label = {}) {
    p.vertices.push_back(id);
    if (!label.empty()) p.labels[id] = label;
  }
  void edge(const std::string& a, const std::string& b) {
    p.edges.emplace_back(a, b);
  }
};

std::string spine(int i) { return "spine:" + std::to_string(i); }
std::string height_label(int h) { return "height:" + std::to_string(h); }

// Complete binary tree of height `radius` rooted at the top spine vertex.
// The spine vertex of height i has children spine:(i-1) and sub:i; the node
// sub:i:<path> sits |path| levels below sub:i.
void canopy_tree(int radius,
                 const std::function<void(const std::string&, int)>& add_vertex,
                 const std::function<void(const std::string&,
                                          const std::string&)>& add_edge) {
  std::function<void(const std::string&, int)> grow =
      [&](const std::string& id, int height) {
        add_vertex(id, height);
        if (height == 0) return;
        for (const char* side : {"l", "r"}) {
          // Children of sub:i are sub:i:l and sub:i:r; deeper nodes append.
          std::string child = id.find(':', 4) == std::string::npos
                                  ? id + ":" + side
                                  : id + side;
          grow(child, height - 1);
          add_edge(id, child);
        }
      };
  for (int i = 0; i <= radius; ++i) {
    add_vertex(spine(i), i);
    if (i == 0) continue;
    add_edge(spine(i), spine(i - 1));
    std::string sub = "sub:" + std::to_string(i);
    grow(sub, i - 1);
    add_edge(spine(i), sub);
  }
}

Payload make_ray(int radius) {
  Builder b;
  for (int i = 0; i <= radius; ++i) {
    b.vertex(spine(i), "spine");
    if (i > 0) b.edge(spine(i - 1), spine(i));
  }
  b.p.horizon = {spine(radius)};
  b.p.base = {spine(0)};
  return b.p;
}

Payload make_ladder(int radius) {
  Builder b;
  auto id = [](int row, int col) {
    return "L:" + std::to_string(row) + ":" + std::to_string(col);
  };
  for (int c = 0; c <= radius; ++c) {
    for (int r = 0; r < 2; ++r) {
      b.vertex(id(r, c), "rail");
      if (c > 0) b.edge(id(r, c - 1), id(r, c));
    }
    b.edge(id(0, c), id(1, c));
  }
  b.p.horizon = {id(0, radius), id(1, radius)};
  b.p.base = {id(0, 0), id(1, 0)};
  return b.p;
}

Payload make_canopy(int radius) {
  Builder b;
  canopy_tree(
      radius,
      [&](const std::string& id, int h) { b.vertex(id, height_label(h)); },
      [&](const std::string& u, const std::string& v) { b.edge(u, v); });
  b.p.horizon = {spine(radius)};
  b.p.base = {spine(0)};
  return b.p;
}

// Cartesian product of the canopy truncation with K2.
Payload make_canopy_fig2(int radius) {
  Builder b;
  auto copy = [](const std::string& id, int c) {
    return id + "/" + std::to_string(c);
  };
  canopy_tree(
      radius,
      [&](const std::string& id, int h) {
        b.vertex(copy(id, 0), height_label(h));
        b.vertex(copy(id, 1), height_label(h));
        b.edge(copy(id, 0), copy(id, 1));
      },
      [&](const std::string& u, const std::string& v) {
        b.edge(copy(u, 0), copy(v, 0));
        b.edge(copy(u, 1), copy(v, 1));
      });
  b.p.horizon = {copy(spine(radius), 0), copy(spine(radius), 1)};
  b.p.base = {copy(spine(0), 0)};
  return b.p;
}

Payload make_dominated_canopy(int radius, int pendants) {
  Builder b;
  std::vector<std::string> leaves;
  canopy_tree(
      radius,
      [&](const std::string& id, int h) {
        b.vertex(id, height_label(h));
        if (h == 0) leaves.push_back(id);
      },
      [&](const std::string& u, const std::string& v) { b.edge(u, v); });
  b.vertex("apex", "apex");
  for (const auto& leaf : leaves) b.edge("apex", leaf);
  for (int j = 0; j < pendants; ++j) {
    std::string id = "pendant:" + std::to_string(j);
    b.vertex(id, "pendant");
    b.edge("apex", id);
  }
  b.p.horizon = {spine(radius)};
  b.p.base = {spine(0)};
  return b.p;
}

// A ray w:0, w:1, ... with, for every n in 1..R, a path P:n:0 ... P:n:(n-1)
// whose last vertex is joined to w:0 (the shared endpoint v_n^n).
Payload make_alpha_example(int radius) {
  Builder b;
  auto w = [](int i) { return "w:" + std::to_string(i); };
  for (int i = 0; i <= radius; ++i) {
    b.vertex(w(i), "ray");
    if (i > 0) b.edge(w(i - 1), w(i));
  }
  for (int n = 1; n <= radius; ++n) {
    auto p = [n](int j) {
      return "P:" + std::to_string(n) + ":" + std::to_string(j);
    };
    for (int j = 0; j < n; ++j) {
      b.vertex(p(j), "path");
      if (j > 0) b.edge(p(j - 1), p(j));
    }
    b.edge(p(n - 1), w(0));
  }
  b.p.horizon = {w(radius)};
  b.p.base = {w(0)};
  return b.p;
}

Payload make_grid(int radius) {
  Builder b;
  auto id = [](int x, int y) {
    return "G:" + std::to_string(x) + ":" + std::to_string(y);
  };
  for (int x = -radius; x <= radius; ++x) {
    for (int y = -radius; y <= radius; ++y) {
      b.vertex(id(x, y), "grid");
      if (x > -radius) b.edge(id(x - 1, y), id(x, y));
      if (y > -radius) b.edge(id(x, y - 1), id(x, y));
      if (std::max(std::abs(x), std::abs(y)) == radius)
        b.p.horizon.push_back(id(x, y));
    }
  }
  b.p.base = {id(0, 0)};
  return b.p;
}

void check_parameters(const FamilySpec& spec,
                      std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : spec.parameters) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok)
      fail(ErrorCode::kInvalidParameters,
           "family '" + spec.name + "' has no parameter '" + key + "'");
  }
}

}  // namespace

const std::vector<std::string>& builtin_families() {
  static const std::vector<std::string> names = {
      "ray",  "ladder",        "canopy", "canopy_fig2", "dominated_canopy",
      "alpha_example", "grid"};
  return names;
}

TruncatedGraph generate_family(const FamilySpec& spec, int radius) {
  if (spec.name == "custom") {
    if (!spec.custom)
      fail(ErrorCode::kInvalidParameters, "custom family needs a payload");
    return TruncatedGraph::from_payload(*spec.custom, "custom", radius);
  }
  if (radius < 2)
    fail(ErrorCode::kInvalidParameters,
         "radius must be at least 2, got " + std::to_string(radius));

  Payload p;
  bool locally_finite = true;
  if (spec.name == "ray") {
    check_parameters(spec, {});
    p = make_ray(radius);
  } else if (spec.name == "ladder") {
    check_parameters(spec, {});
    p = make_ladder(radius);
  } else if (spec.name == "canopy") {
    check_parameters(spec, {});
    p = make_canopy(radius);
  } else if (spec.name == "canopy_fig2") {
    check_parameters(spec, {});
    p = make_canopy_fig2(radius);
  } else if (spec.name == "dominated_canopy") {
    check_parameters(spec, {"pendants"});
    int pendants = 3;
    if (auto it = spec.parameters.find("pendants"); it != spec.parameters.end())
      pendants = it->second;
    if (pendants < 0)
      fail(ErrorCode::kInvalidParameters, "pendants must be non-negative");
    p = make_dominated_canopy(radius, pendants);
  } else if (spec.name == "alpha_example") {
    check_parameters(spec, {});
    p = make_alpha_example(radius);
    locally_finite = false;
  } else if (spec.name == "grid") {
    check_parameters(spec, {});
    p = make_grid(radius);
  } else {
    fail(ErrorCode::kUnknownFamily, "unknown family '" + spec.name + "'");
  }
  auto g = TruncatedGraph::from_payload(p, spec.name, radius);
  g.set_locally_finite(locally_finite);
  return g;
}

}  // namespace endtree
