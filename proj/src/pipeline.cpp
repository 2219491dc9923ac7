#include "endtree/pipeline.hpp"

#include <cstdlib>
#include <future>
#include <sstream>

namespace endtree {
namespace {

std::size_t parse_count(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value == 0)
    fail(ErrorCode::kInvalidArgument, "budget value '" + text + "' is not a positive integer");
  return static_cast<std::size_t>(value);
}

}  // namespace

Limits parse_limits(const std::string& text, Limits base) {
  if (text.empty()) return base;
  if (text.find('=') == std::string::npos) {
    std::size_t n = parse_count(text);
    return {n, n, n};
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::kInvalidArgument, "budget entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    std::size_t value = parse_count(item.substr(eq + 1));
    if (key == "enumerate") base.enumerate = value;
    else if (key == "search") base.search_nodes = value;
    else if (key == "vertices") base.max_vertices = value;
    else fail(ErrorCode::kInvalidArgument, "unknown budget key '" + key + "'");
  }
  return base;
}

Limits limits_from_env(Limits base) {
  const char* env = std::getenv("ENDTREE_BUDGET");
  return env ? parse_limits(env, base) : base;
}

Analysis analyze(const FamilySpec& family, const std::vector<int>& radii,
                 int cap, int margin, const Limits& limits) {
  Analysis a;
  a.family = family.name;
  a.degree = end_vertex_degree(family, radii, cap);
  a.domination = find_dominating_vertices(family, radii, cap, false);

  std::vector<std::future<std::pair<int, AutomorphismGroup>>> jobs;
  for (int r : radii)
    jobs.push_back(std::async(std::launch::async, [&, r] {
      auto g = generate_family(family, r);
      auto aut = automorphisms(g, {limits.max_vertices, limits.search_nodes});
      return std::make_pair(orbit_count_interior(g, aut, margin), std::move(aut));
    }));
  for (auto& j : jobs) {
    auto [count, aut] = j.get();
    a.orbit_counts.push_back(count);
    a.group_order = aut.order;
    a.group_large = aut.large;
  }
  a.locally_finite = generate_family(family, radii.front()).locally_finite();

  // A one-ended quasi-transitive graph has a thick end.
  const auto& oc = a.orbit_counts;
  bool orbits_stable = oc.size() >= 2 && oc.back() == oc[oc.size() - 2];
  if (orbits_stable && !a.degree.thick) {
    a.consistency_warning = true;
    a.warning = "interior orbit count is stable at " + std::to_string(oc.back()) +
                " while the end degree is finite";
  }
  return a;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  PipelineResult out;
  out.graph = generate_family(config.family, config.radius);
  out.degree = end_vertex_degree(config.family, config.radii, config.cap);
  if (out.degree.thick)
    fail(ErrorCode::kPrecondition,
         "end is thick (disjoint path counts keep growing); a thin end is required");
  out.domination = find_dominating_vertices(config.family, config.radii, config.cap);
  if (!out.domination.dominators.empty())
    fail(ErrorCode::kPrecondition,
         "end is dominated by " + out.domination.dominators.front() +
             "; an undominated end is required");
  out.k = config.k.value_or(out.degree.degree);
  if (out.k < 1) fail(ErrorCode::kInvalidArgument, "k must be positive");

  const auto& g = out.graph;
  auto pool = enumerate_relevant(g, out.k, config.max_side, config.limits.enumerate);
  out.pool_size = pool.size();
  if (pool.empty())
    fail(ErrorCode::kNotEnoughLevels, "no relevant separation of order " +
                                          std::to_string(out.k) + " exists");
  auto alpha = compute_alpha(g, std::move(pool));
  out.group = automorphisms(g, {config.limits.max_vertices, config.limits.search_nodes});
  out.family = build_invariant_family(g, out.k, alpha, out.group);
  auto tree = build_tree(g, out.family);
  out.td = build_tree_decomposition(g, tree, out.k);
  out.report = verify_tree_decomposition(g, out.td, out.k, &out.group);
  return out;
}

}  // namespace endtree
