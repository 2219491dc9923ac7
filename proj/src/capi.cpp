#include "endtree/endtree.h"

#include <climits>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>

#include "endtree/pipeline.hpp"
#include "serialize.hpp"

struct et_graph {
  endtree::TruncatedGraph g;
};

struct et_td {
  endtree::TreeDecomposition td;
};

namespace {

using namespace endtree;
using io::json;

thread_local std::string last_error;

std::mutex limits_mutex;
bool limits_ready = false;
Limits limits;

Limits current_limits() {
  std::lock_guard lock(limits_mutex);
  if (!limits_ready) {
    limits = limits_from_env();
    limits_ready = true;
  }
  return limits;
}

template <typename F>
et_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ET_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<et_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return ET_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be null");
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

FamilySpec family(const char* text) {
  require(text, "family_json");
  return io::family_from_json(io::parse(text));
}

std::vector<int> radii_of(const int* radii, size_t count) {
  require(radii, "radii");
  return {radii, radii + count};
}

int side_bound(int max_side) { return max_side <= 0 ? INT_MAX : max_side; }

std::string export_as(const char* format, const std::string& json_text,
                      const std::string& dot_text) {
  require(format, "format");
  std::string f = format;
  if (f == "json") return json_text;
  if (f == "dot") return dot_text;
  fail(ErrorCode::kInvalidArgument, "unknown format '" + f + "' (json or dot)");
}

TreeDecomposition build_td(const TruncatedGraph& g, int k, int max_side) {
  Limits lim = current_limits();
  if (k <= 0) k = boundary_to_horizon_cut(g).value;
  auto alpha = compute_alpha(g, enumerate_relevant(g, k, side_bound(max_side), lim.enumerate));
  auto aut = automorphisms(g, {lim.max_vertices, lim.search_nodes});
  auto fam = build_invariant_family(g, k, alpha, aut);
  return build_tree_decomposition(g, build_tree(g, fam), k);
}

}  // namespace

extern "C" {

const char* et_last_error(void) { return last_error.c_str(); }

const char* et_status_name(et_status status) {
  if (status < 0 || status > ET_INTERNAL) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(status)).data();
}

void et_string_free(char* s) { std::free(s); }

et_status et_set_budget(const char* spec) {
  return guarded([&] {
    Limits parsed = parse_limits(spec ? spec : "");
    std::lock_guard lock(limits_mutex);
    limits = parsed;
    limits_ready = true;
  });
}

et_status et_graph_generate(const char* family_json, int radius, et_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new et_graph{generate_family(family(family_json), radius)};
  });
}

et_status et_graph_load(const char* graph_json, et_graph** out) {
  return guarded([&] {
    require(graph_json, "graph_json");
    require(out, "out");
    *out = new et_graph{io::graph_from_json(io::parse(graph_json))};
  });
}

void et_graph_free(et_graph* g) { delete g; }

et_status et_graph_vertex_count(const et_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->g.vertex_count();
  });
}

et_status et_graph_export(const et_graph* g, const char* format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy(export_as(format, io::dump(io::graph_json(g->g)), io::graph_dot(g->g)));
  });
}

et_status et_end_degree(const char* family_json, const int* radii,
                        size_t radius_count, int cap, char** out) {
  return guarded([&] {
    require(out, "out");
    auto d = end_vertex_degree(family(family_json), radii_of(radii, radius_count), cap);
    *out = copy(io::dump(io::degree_json(d)));
  });
}

et_status et_dominators(const char* family_json, const int* radii,
                        size_t radius_count, int cap, char** out) {
  return guarded([&] {
    require(out, "out");
    auto d = find_dominating_vertices(family(family_json),
                                      radii_of(radii, radius_count), cap, false);
    *out = copy(io::dump(io::domination_json(d)));
  });
}

et_status et_max_disjoint_paths(const et_graph* g, const char* x_json,
                                const char* y_json, int mode, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(x_json, "x_json");
    require(y_json, "y_json");
    require(out, "out");
    if (mode != 0 && mode != 1)
      fail(ErrorCode::kInvalidArgument, "mode must be 0 (terminals) or 1 (disjoint)");
    auto x = io::vertices(g->g, io::parse(x_json));
    auto y = io::vertices(g->g, io::parse(y_json));
    auto c = max_disjoint_paths(g->g, x, y, {},
                                mode == 0 ? PathMode::kTerminals : PathMode::kDisjoint);
    *out = copy(io::dump(io::cut_json(g->g, c)));
  });
}

et_status et_minimal_separators(const et_graph* g, const char* u, const char* v,
                                int k, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(u, "u");
    require(v, "v");
    require(out, "out");
    auto seps = enumerate_minimal_separators(g->g, g->g.at(u), g->g.at(v), k,
                                             current_limits().enumerate);
    json arr = json::array();
    for (const auto& s : seps) arr.push_back(io::names(g->g, s));
    *out = copy(io::dump({{"u", u}, {"v", v}, {"k", k}, {"separators", arr}}));
  });
}

et_status et_separator_sequence(const et_graph* g, int m, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy(io::dump(io::sequence_json(g->g, disjoint_separator_sequence(g->g, m))));
  });
}

et_status et_enumerate_relevant(const et_graph* g, int k, int max_side, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto pool = enumerate_relevant(g->g, k, side_bound(max_side), current_limits().enumerate);
    std::string text;
    if (!pool.empty()) {
      auto alpha = compute_alpha(g->g, std::move(pool));
      for (std::size_t i = 0; i < alpha.pool().size(); ++i)
        text += io::relevant_json(g->g, alpha.pool()[i], alpha.sep_ranks()[i]).dump() + "\n";
    }
    *out = copy(text);
  });
}

et_status et_alpha(const et_graph* g, int k, int max_side, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto alpha = compute_alpha(
        g->g, enumerate_relevant(g->g, k, side_bound(max_side), current_limits().enumerate));
    *out = copy(io::dump(io::alpha_json(g->g, alpha)));
  });
}

et_status et_automorphisms(const et_graph* g, int margin, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    Limits lim = current_limits();
    auto aut = automorphisms(g->g, {lim.max_vertices, lim.search_nodes});
    *out = copy(io::dump(io::automorphisms_json(g->g, aut, margin)));
  });
}

et_status et_build_td(const et_graph* g, int k, int max_side, et_td** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new et_td{build_td(g->g, k, max_side)};
  });
}

et_status et_td_load(const char* td_json, et_graph** graph_out, et_td** td_out) {
  return guarded([&] {
    require(td_json, "td_json");
    require(graph_out, "graph_out");
    require(td_out, "td_out");
    json j = io::parse(td_json);
    if (!j.is_object() || !j.contains("graph"))
      fail(ErrorCode::kParse, "decomposition JSON lacks the graph");
    auto g = io::graph_from_json(j.at("graph"));
    auto td = io::td_from_json(g, j);
    *graph_out = new et_graph{std::move(g)};
    *td_out = new et_td{std::move(td)};
  });
}

void et_td_free(et_td* td) { delete td; }

et_status et_td_export(const et_graph* g, const et_td* td, const char* format,
                       char** out) {
  return guarded([&] {
    require(g, "graph");
    require(td, "td");
    require(out, "out");
    *out = copy(export_as(format, io::dump(io::td_json(g->g, td->td)),
                          io::td_dot(g->g, td->td)));
  });
}

et_status et_td_verify(const et_graph* g, const et_td* td, int* passed, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(td, "td");
    require(passed, "passed");
    require(out, "out");
    Limits lim = current_limits();
    auto aut = automorphisms(g->g, {lim.max_vertices, lim.search_nodes});
    auto report = verify_tree_decomposition(g->g, td->td, td->td.k, &aut);
    *passed = report.passed() ? 1 : 0;
    *out = copy(io::dump(io::report_json(report)));
  });
}

et_status et_ray_decomposition(const et_graph* g, int m, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy(io::dump(io::ray_json(g->g, ray_decomposition(g->g, m))));
  });
}

et_status et_analyze(const char* family_json, const int* radii, size_t radius_count,
                     int cap, int margin, char** out) {
  return guarded([&] {
    require(out, "out");
    auto a = analyze(family(family_json), radii_of(radii, radius_count), cap, margin,
                     current_limits());
    *out = copy(io::dump(io::analysis_json(a)));
  });
}

et_status et_pipeline(const char* family_json, int radius, const int* radii,
                      size_t radius_count, int cap, int k, int max_side,
                      int* passed, char** td_json, char** td_dot,
                      char** report_json) {
  return guarded([&] {
    require(passed, "passed");
    require(td_json, "td_json");
    require(td_dot, "td_dot");
    require(report_json, "report_json");
    PipelineConfig config;
    config.family = family(family_json);
    config.radius = radius;
    config.radii = radii_of(radii, radius_count);
    config.cap = cap;
    if (k > 0) config.k = k;
    config.max_side = side_bound(max_side);
    config.limits = current_limits();
    auto result = run_pipeline(config);
    *passed = result.report.passed() ? 1 : 0;
    *td_json = copy(io::dump(io::td_json(result.graph, result.td)));
    *td_dot = copy(io::td_dot(result.graph, result.td));
    *report_json = copy(io::dump(io::report_json(result.report)));
  });
}

}  // extern "C"
