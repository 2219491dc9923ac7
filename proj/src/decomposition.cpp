#include "endtree/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "endtree/connectivity.hpp"

namespace endtree {
namespace {

std::string side_names(const TruncatedGraph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.name(s[i]);
  }
  return out + "}";
}

bool by_small_side(const Separation& x, const Separation& y) {
  return x.a_only() < y.a_only();
}

}  // namespace

NestedFamily build_invariant_family(const TruncatedGraph& g, int k,
                                    const AlphaTable& alpha,
                                    const AutomorphismGroup& aut) {
  NestedFamily family;
  family.k = k;
  const RelevantSeparation* seed = nullptr;
  for (const auto& r : alpha.pool())
    if (r.sep.a_only().intersects(g.base())) {
      seed = &r;
      break;
    }
  if (!seed)
    fail(ErrorCode::kNotEnoughLevels,
         "no relevant separation has the base on its small side");
  family.seed = seed->sep;

  Separation prev = family.seed;
  for (int level = 1;; ++level) {
    std::vector<RelevantSeparation> nice;
    try {
      nice = compute_nice_set(g, prev, alpha, aut);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyNiceSet) throw;
      break;
    }
    const Separation* next = nullptr;
    for (const auto& r : nice)
      if (prev.a().subset_of(r.sep.a()) && prev.a() != r.sep.a() &&
          (!next || by_small_side(r.sep, *next)))
        next = &r.sep;
    if (!next) break;
    auto orbit = separation_orbit(aut, *next);
    std::sort(orbit.begin(), orbit.end(), by_small_side);
    for (auto& s : orbit) {
      if (s == *next) family.spine.push_back(family.members.size());
      family.members.push_back(std::move(s));
      family.level.push_back(level);
    }
    prev = family.members[family.spine.back()];
  }
  if (family.spine.size() < 3)
    fail(ErrorCode::kNotEnoughLevels,
         "only " + std::to_string(family.spine.size()) +
             " spine levels fit in the truncation; at least 3 are needed");

  std::set<Separation> seen;
  for (const auto& s : family.members)
    if (!seen.insert(s).second)
      fail(ErrorCode::kNestednessViolation,
           "separation " + side_names(g, s.a_only()) + " appears twice");
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (std::size_t j = i + 1; j < family.members.size(); ++j)
      if (!nested(family.members[i], family.members[j]))
        fail(ErrorCode::kNestednessViolation,
             "separations " + side_names(g, family.members[i].a_only()) +
                 " and " + side_names(g, family.members[j].a_only()) +
                 " are not nested");
  return family;
}

DecompositionTree build_tree(const TruncatedGraph& g,
                             const NestedFamily& family) {
  DecompositionTree tree;
  const int top = family.top_level();
  for (std::size_t i = 0; i < family.members.size(); ++i)
    tree.nodes.push_back({family.members[i], family.level[i], family.level[i], false});
  tree.root = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back(
      {unchecked_separation(g.all(), g.horizon()), top + 1, top + 1, true});

  for (std::size_t s = 0; s < family.members.size(); ++s) {
    if (family.level[s] == top) {
      tree.edges.emplace_back(static_cast<int>(s), tree.root);
      continue;
    }
    std::vector<int> up;
    for (std::size_t t = 0; t < family.members.size(); ++t)
      if (family.level[t] == family.level[s] + 1 &&
          family.members[s].a().subset_of(family.members[t].a()))
        up.push_back(static_cast<int>(t));
    if (up.size() != 1)
      fail(ErrorCode::kOutdegreeViolation,
           "separation " + side_names(g, family.members[s].a_only()) + " has " +
               std::to_string(up.size()) + " successors");
    tree.edges.emplace_back(static_cast<int>(s), up.front());
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  for (auto i : family.spine) tree.spine.push_back(static_cast<int>(i));
  tree.spine.push_back(tree.root);

  // Every node reaches the root by following successors.
  std::vector<int> parent(tree.nodes.size(), -1);
  for (auto [s, t] : tree.edges) parent[s] = t;
  for (std::size_t s = 0; s < tree.nodes.size(); ++s) {
    int cur = static_cast<int>(s);
    for (std::size_t steps = 0; cur != tree.root && steps <= tree.nodes.size(); ++steps)
      cur = parent[cur] < 0 ? cur : parent[cur];
    if (cur != tree.root)
      fail(ErrorCode::kDisconnected, "decomposition tree is disconnected");
  }
  return tree;
}

TreeDecomposition build_tree_decomposition(const TruncatedGraph& g,
                                           const DecompositionTree& tree, int k) {
  TreeDecomposition td;
  td.k = k;
  td.tree = tree;
  for (const auto& node : tree.nodes) td.parts.push_back(node.sep.a());
  for (auto [s, t] : tree.edges)
    td.parts[t] = td.parts[t] - tree.nodes[s].sep.a_only();
  for (const auto& p : td.parts) g.check_vertices(p);
  return td;
}

TreeAction induced_tree_action(const DecompositionTree& tree,
                               const AutomorphismGroup& aut) {
  std::map<Separation, int> index;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (!tree.nodes[i].synthetic) index.emplace(tree.nodes[i].sep, static_cast<int>(i));
  TreeAction action;
  action.node_count = static_cast<int>(tree.nodes.size());
  action.edges = tree.edges;
  action.ray = tree.spine;
  for (const auto& p : aut.generators) {
    std::vector<int> perm(tree.nodes.size());
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      if (tree.nodes[i].synthetic) {
        perm[i] = static_cast<int>(i);
        continue;
      }
      auto it = index.find(apply(p, tree.nodes[i].sep));
      if (it == index.end())
        fail(ErrorCode::kInvalidArgument,
             "a generator maps a tree node outside the family");
      perm[i] = it->second;
    }
    action.generators.push_back(std::move(perm));
  }
  return action;
}

TdReport verify_tree_decomposition(const TruncatedGraph& g,
                                   const TreeDecomposition& td, int k,
                                   const AutomorphismGroup* aut) {
  TdReport r;
  const auto& tree = td.tree;
  const std::size_t n = tree.nodes.size();
  auto note = [&](bool& flag, const std::string& msg) {
    flag = false;
    r.failures.push_back(msg);
  };

  // Tree shape.
  std::vector<int> parent(n, -1);
  std::vector<std::vector<int>> children(n);
  std::vector<std::vector<int>> adj(n);
  bool shape_ok = td.parts.size() == n && n > 0 && tree.edges.size() + 1 == n &&
                  tree.root >= 0 && static_cast<std::size_t>(tree.root) < n;
  for (auto [s, t] : tree.edges) {
    if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= n ||
        static_cast<std::size_t>(t) >= n || parent[s] >= 0 || s == tree.root) {
      shape_ok = false;
      continue;
    }
    parent[s] = t;
    children[t].push_back(s);
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  if (!shape_ok) {
    note(r.tree_ok, "tree: malformed node, edge or part lists");
    return r;
  }
  auto connected = [&](const std::vector<char>& keep) {
    int start = -1, total = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (keep[i]) {
        ++total;
        if (start < 0) start = static_cast<int>(i);
      }
    if (total == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (keep[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    return reached == total;
  };
  if (!connected(std::vector<char>(n, 1))) {
    note(r.tree_ok, "tree: not connected");
    return r;
  }

  // (T1) on the region covered by the node sides.
  const Vertex nv = g.vertex_count();
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(nv));
  VertexSet region;
  for (std::size_t t = 0; t < n; ++t) {
    g.check_vertices(td.parts[t]);
    region = region | tree.nodes[t].sep.a();
    for (Vertex v : td.parts[t]) holders[v].push_back(static_cast<int>(t));
  }
  int inner = 0, covered = 0;
  for (Vertex v = 0; v < nv; ++v) {
    bool held = !holders[v].empty();
    if (!g.horizon().contains(v)) {
      ++inner;
      covered += held;
    }
    if (region.contains(v) && !held)
      note(r.t1, "T1: vertex " + g.name(v) + " lies in no part");
  }
  r.coverage = inner == 0 ? 1.0 : static_cast<double>(covered) / inner;

  // (T2)
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (int t : holders[u]) ok = ok || td.parts[t].contains(v);
    if (!ok) note(r.t2, "T2: edge " + g.name(u) + "-" + g.name(v) + " lies in no part");
  }

  // (T3): the nodes holding v span a subtree.
  for (Vertex v = 0; v < nv; ++v) {
    if (holders[v].size() < 2) continue;
    std::vector<char> keep(n, 0);
    for (int t : holders[v]) keep[t] = 1;
    if (!connected(keep)) note(r.t3, "T3: parts holding " + g.name(v) + " are not connected");
  }

  // Associated separations, adhesion and display.
  std::vector<VertexSet> below(n);
  std::function<const VertexSet&(int)> collect = [&](int t) -> const VertexSet& {
    VertexSet acc = td.parts[t];
    for (int c : children[t]) acc = acc | collect(c);
    below[t] = std::move(acc);
    return below[t];
  };
  collect(tree.root);
  for (auto [s, t] : tree.edges) {
    VertexSet rest;
    for (std::size_t u = 0; u < n; ++u) {
      bool in_subtree = false;
      for (int x = static_cast<int>(u); x >= 0; x = parent[x])
        if (x == s) in_subtree = true;
      if (!in_subtree) rest = rest | td.parts[u];
    }
    const VertexSet& xs = below[s];
    r.adhesion = std::max(r.adhesion, static_cast<int>((xs & rest).size()));
    const auto& sep = tree.nodes[s].sep;
    if (xs != sep.a() || rest != sep.b())
      note(r.associated, "associated separation of edge " + std::to_string(s) +
                             "->" + std::to_string(t) + " differs from its node");
    if (!g.horizon().subset_of(rest - xs))
      note(r.display, "display: horizon not on the root side of edge " +
                          std::to_string(s) + "->" + std::to_string(t));
  }
  if (r.adhesion != k)
    note(r.adhesion_ok, "adhesion is " + std::to_string(r.adhesion) +
                            ", expected " + std::to_string(k));

  // Subtrees hanging off the spine must be shallower than their anchor.
  std::vector<char> on_spine(n, 0);
  for (int t : tree.spine)
    if (t >= 0 && static_cast<std::size_t>(t) < n) on_spine[t] = 1;
  std::function<int(int)> height = [&](int t) {
    int h = 0;
    for (int c : children[t]) h = std::max(h, height(c));
    return h + 1;
  };
  for (std::size_t t = 0; t < n; ++t) {
    if (on_spine[t] || parent[t] < 0 || !on_spine[parent[t]]) continue;
    int depth = height(static_cast<int>(t));
    r.depth_bound = std::max(r.depth_bound, depth);
    if (depth >= tree.nodes[parent[t]].level)
      note(r.one_ended, "a subtree of depth " + std::to_string(depth) +
                            " hangs off spine level " +
                            std::to_string(tree.nodes[parent[t]].level));
  }

  if (aut) {
    std::vector<Separation> members;
    for (const auto& node : tree.nodes)
      if (!node.synthetic) members.push_back(node.sep);
    auto inv = check_family_invariance(members, *aut);
    if (!inv.invariant) {
      note(r.invariant, "invariance: generator " + std::to_string(inv.generator) +
                            " maps " + side_names(g, members[inv.member].a_only()) +
                            " outside the family");
    } else {
      auto action = induced_tree_action(tree, *aut);
      std::set<std::pair<int, int>> edges(tree.edges.begin(), tree.edges.end());
      for (const auto& p : action.generators)
        for (auto [s, t] : tree.edges)
          if (!edges.count({p[s], p[t]}))
            note(r.invariant, "invariance: induced map is not a tree automorphism");
      auto tail = tree_tail_check(action);
      if (!tail.fixes_tail)
        note(r.tail_fixed, "tail: generator " + std::to_string(tail.generator) +
                               " fixes no tail of the spine");
    }
  }
  return r;
}

RayDecomposition ray_decomposition(const TruncatedGraph& g, int m) {
  SeparatorSequence seq = disjoint_separator_sequence(g, m);
  const auto& ts = seq.separators;
  std::vector<VertexSet> tails;
  for (const auto& t : ts) {
    VertexSet tail = t;
    for (const auto& c : components(g, t))
      if (c.intersects(g.horizon())) tail = tail | c;
    tails.push_back(std::move(tail));
  }

  RayDecomposition rd;
  rd.m = m;
  rd.slabs.push_back((g.all() - tails.front()) | ts.front());
  for (std::size_t i = 1; i < ts.size(); ++i)
    rd.slabs.push_back(tails[i - 1] - (tails[i] - ts[i]));
  rd.slabs.push_back(tails.back());

  VertexSet all;
  for (const auto& s : rd.slabs) all = all | s;
  rd.covers = all == g.all();
  for (auto [u, v] : g.edges()) {
    bool inside = false;
    for (const auto& s : rd.slabs) inside = inside || (s.contains(u) && s.contains(v));
    rd.covers = rd.covers && inside;
  }

  rd.interfaces_ok = true;
  for (std::size_t i = 0; i < rd.slabs.size(); ++i)
    for (std::size_t j = i + 1; j < rd.slabs.size(); ++j) {
      VertexSet meet = rd.slabs[i] & rd.slabs[j];
      if (j == i + 1) {
        rd.interfaces.push_back(meet);
        rd.interfaces_ok = rd.interfaces_ok && meet == ts[i] &&
                           static_cast<int>(meet.size()) == m;
      } else {
        rd.interfaces_ok = rd.interfaces_ok && meet.empty();
      }
    }

  rd.linked = true;
  for (std::size_t i = 1; i + 1 < rd.slabs.size(); ++i) {
    int paths = max_disjoint_paths(g, ts[i - 1], ts[i], g.all() - rd.slabs[i],
                                   PathMode::kDisjoint)
                    .value;
    rd.slab_paths.push_back(paths);
    rd.linked = rd.linked && paths == m;
  }

  rd.rayless = true;
  for (std::size_t i = 0; i + 1 < rd.slabs.size(); ++i)
    rd.rayless = rd.rayless && !rd.slabs[i].intersects(g.horizon());
  return rd;
}

}  // namespace endtree
