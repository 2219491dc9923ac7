#include "endtree/relevant.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>

#include "endtree/connectivity.hpp"

namespace endtree {

RelevantSeparation verify_relevant(const TruncatedGraph& g, const Separation& s,
                                   int k) {
  g.check_vertices(s.a());
  g.check_vertices(s.b());
  if (s.order() != k)
    fail(ErrorCode::kWrongOrder, "separation has order " +
                                     std::to_string(s.order()) + ", expected " +
                                     std::to_string(k));
  if (!g.horizon().subset_of(s.b_only()))
    fail(ErrorCode::kHorizonOnWrongSide, "horizon is not contained in B\\A");
  if (s.a_only().empty() || !is_connected_set(g, s.a_only()))
    fail(ErrorCode::kSideDisconnected, "A\\B is empty or disconnected");
  for (Vertex v : s.separator()) {
    bool attached = false;
    for (Vertex w : g.neighbors(v)) attached = attached || s.a_only().contains(w);
    if (!attached)
      fail(ErrorCode::kSeparatorNotAttached,
           "separator vertex " + g.name(v) + " has no neighbour in A\\B");
  }
  RelevantSeparation r{s, k, {}};
  if (k > 0) {
    CutResult paths = max_disjoint_paths(g, s.separator(), g.horizon(),
                                         s.a_only(), PathMode::kDisjoint);
    if (paths.value < k)
      fail(ErrorCode::kSmallerCutExists,
           "only " + std::to_string(paths.value) +
               " disjoint paths reach the horizon from the separator");
    r.certificate = std::move(paths.paths);
  }
  if (!is_tight(g, s))
    fail(ErrorCode::kInternal, "relevant separation is not tight");
  return r;
}

std::vector<RelevantSeparation> enumerate_relevant(const TruncatedGraph& g,
                                                   int k, int max_side,
                                                   std::size_t budget) {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "k must be positive");
  if (max_side < 1) fail(ErrorCode::kInvalidArgument, "max_side must be positive");
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.horizon().contains(v)) pool.push_back(v);
  const std::size_t n = pool.size();
  if (static_cast<std::size_t>(k) > n) return {};

  long double subsets = 1;
  for (int i = 0; i < k; ++i) subsets = subsets * (n - i) / (i + 1);
  if (subsets > static_cast<long double>(budget))
    fail(ErrorCode::kBudget, "C(" + std::to_string(n) + "," +
                                 std::to_string(k) + ") separator candidates "
                                 "exceed the budget of " +
                                 std::to_string(budget));

  std::vector<RelevantSeparation> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<Vertex> chosen;
    for (auto i : idx) chosen.push_back(pool[i]);
    VertexSet s = VertexSet::from_sorted(chosen);
    for (const auto& c : components(g, s)) {
      if (static_cast<int>(c.size()) > max_side || c.intersects(g.horizon()))
        continue;
      if (neighborhood(g, c) != s) continue;
      try {
        out.push_back(verify_relevant(g, separation_from_side(g, c), k));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInternal) throw;
      }
    }
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                         n - static_cast<std::size_t>(k - i))
      --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.sep.a_only() < y.sep.a_only();
  });
  return out;
}

std::vector<RelevantSeparation> build_exhausting_sequence(const TruncatedGraph& g,
                                                          int k) {
  SeparatorSequence seq = disjoint_separator_sequence(g, k);
  std::vector<RelevantSeparation> chain;
  for (const auto& t : seq.separators) {
    VertexSet side;
    for (const auto& c : components(g, t))
      if (c.contains(g.base()[0])) side = c;
    if (!g.base().subset_of(side))
      fail(ErrorCode::kInternal, "separator splits the base set");
    chain.push_back(verify_relevant(g, separation_from_side(g, side), k));
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& lo = chain[i - 1].sep;
    const auto& hi = chain[i].sep;
    if (!leq(lo, hi) || lo.b() == hi.b())
      fail(ErrorCode::kInternal, "exhausting sequence is not strictly increasing");
  }
  return chain;
}

AlphaTable::AlphaTable(std::vector<RelevantSeparation> pool,
                       std::vector<int> sep_rank, std::vector<int> vertex_rank)
    : pool_(std::move(pool)),
      sep_rank_(std::move(sep_rank)),
      vertex_rank_(std::move(vertex_rank)) {
  for (std::size_t i = 0; i < pool_.size(); ++i)
    by_side_.emplace(pool_[i].sep.a_only(), i);
}

std::optional<std::size_t> AlphaTable::index_of(const Separation& s) const {
  auto it = by_side_.find(s.a_only());
  if (it == by_side_.end() || !(pool_[it->second].sep == s)) return std::nullopt;
  return it->second;
}

int AlphaTable::rank(const Separation& s) const {
  auto i = index_of(s);
  if (!i) fail(ErrorCode::kInvalidArgument, "separation is not in the pool");
  return sep_rank_[*i];
}

int AlphaTable::set_rank(const VertexSet& s) const {
  int best = 0;
  for (Vertex v : s) best = std::max(best, vertex_rank_[v]);
  return best;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const VertexSet& s, std::size_t words) {
  Bits b(words, 0);
  for (Vertex v : s) b[v / 64] |= std::uint64_t{1} << (v % 64);
  return b;
}

bool bits_subset(const Bits& x, const Bits& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] & ~y[i]) return false;
  return true;
}

}  // namespace

AlphaTable compute_alpha(const TruncatedGraph& g,
                         std::vector<RelevantSeparation> pool) {
  if (pool.empty()) fail(ErrorCode::kInvalidArgument, "pool is empty");
  std::sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) {
    return x.sep.a_only() < y.sep.a_only();
  });
  for (std::size_t i = 1; i < pool.size(); ++i)
    if (pool[i].sep == pool[i - 1].sep)
      fail(ErrorCode::kCycleDetected, "pool holds a separation twice");

  const std::size_t words = (static_cast<std::size_t>(g.vertex_count()) + 63) / 64;
  std::vector<Bits> a, b;
  for (const auto& r : pool) {
    g.check_vertices(r.sep.a());
    a.push_back(to_bits(r.sep.a(), words));
    b.push_back(to_bits(r.sep.b(), words));
  }
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return pool[x].sep.a().size() < pool[y].sep.a().size();
  });

  std::vector<int> rank(pool.size(), 0);
  for (std::size_t jj = 0; jj < order.size(); ++jj) {
    std::size_t j = order[jj];
    for (std::size_t ii = 0; ii < jj; ++ii) {
      std::size_t i = order[ii];
      if (!bits_subset(a[i], a[j]) || !bits_subset(b[j], b[i])) continue;
      if (bits_subset(a[j], a[i]) && bits_subset(b[i], b[j]))
        fail(ErrorCode::kCycleDetected, "≤ is not antisymmetric on the pool");
      rank[j] = std::max(rank[j], rank[i] + 1);
    }
  }
  std::vector<int> vertex_rank(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (Vertex v : pool[i].sep.separator())
      vertex_rank[v] = std::max(vertex_rank[v], rank[i]);
  return AlphaTable(std::move(pool), std::move(rank), std::move(vertex_rank));
}

std::vector<RelevantSeparation> compute_nice_set(const TruncatedGraph& g,
                                                 const Separation& x,
                                                 const AlphaTable& alpha,
                                                 const AutomorphismGroup& aut) {
  g.check_vertices(x.a());
  const int alpha_x = alpha.set_rank(x.a());
  const auto images = set_orbit(aut, x.a());

  std::vector<const RelevantSeparation*> nice;
  for (const auto& r : alpha.pool()) {
    bool ok = true;
    for (Vertex v : r.sep.separator()) ok = ok && alpha.vertex_rank(v) > alpha_x;
    if (!ok) continue;
    ok = std::any_of(images.begin(), images.end(),
                     [&](const VertexSet& img) { return img.subset_of(r.sep.a()); });
    if (ok) nice.push_back(&r);
  }
  std::vector<RelevantSeparation> minimal;
  for (const auto* r : nice) {
    bool is_min = std::none_of(nice.begin(), nice.end(), [&](const auto* t) {
      return t != r && leq(t->sep, r->sep);
    });
    if (is_min) minimal.push_back(*r);
  }
  if (minimal.empty())
    fail(ErrorCode::kEmptyNiceSet,
         "no nice separation above the given one; increase the radius or "
         "max_side");

  for (const auto& img : images) {
    auto hits = std::count_if(minimal.begin(), minimal.end(), [&](const auto& r) {
      return img.subset_of(r.sep.a());
    });
    if (hits > 1)
      fail(ErrorCode::kNiceSetViolation,
           "an image of X lies in " + std::to_string(hits) +
               " minimal nice separations");
  }
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (i != j && !minimal[i].sep.a().subset_of(minimal[j].sep.b()))
        fail(ErrorCode::kNiceSetViolation,
             "two minimal nice separations are not A⊆D nested");
  auto orbit = separation_orbit(aut, minimal.front().sep);
  for (const auto& r : minimal)
    if (!std::binary_search(orbit.begin(), orbit.end(), r.sep))
      fail(ErrorCode::kNiceSetViolation,
           "minimal nice separations span several orbits");
  return minimal;
}

}  // namespace endtree
