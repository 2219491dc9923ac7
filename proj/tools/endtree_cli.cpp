// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "endtree/endtree.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitRefused = 2;
constexpr int kExitError = 3;

struct Options {
  std::string family = "ray";
  std::vector<std::string> params;
  std::string graph_file;
  int radius = 6;
  std::vector<int> radii{4, 6, 8};
  int cap = 8;
  int k = 0;
  std::optional<int> max_side;
  int margin = 1;
  int m = 0;
  std::string out;
  std::string format = "json";
  std::string input;
  std::string what = "td";
  bool json_errors = false;
};

// A failed C API call, carrying its status.
struct Failure {
  et_status status;
  std::string message;
};

void check(et_status s) {
  if (s != ET_OK) throw Failure{s, et_last_error()};
}

struct StringFree {
  void operator()(char* p) const { et_string_free(p); }
};
using Owned = std::unique_ptr<char, StringFree>;

struct GraphFree {
  void operator()(et_graph* g) const { et_graph_free(g); }
};
using Graph = std::unique_ptr<et_graph, GraphFree>;

struct TdFree {
  void operator()(et_td* t) const { et_td_free(t); }
};
using Td = std::unique_ptr<et_td, TdFree>;

template <typename F>
std::string call(F&& f) {
  char* raw = nullptr;
  check(f(&raw));
  Owned owned(raw);
  return raw ? std::string(raw) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{ET_IO, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{ET_IO, "cannot write " + path};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

std::string family_json(const Options& o) {
  json j;
  if (!o.graph_file.empty()) {
    j["name"] = "custom";
    try {
      j["graph"] = json::parse(read_file(o.graph_file));
    } catch (const json::parse_error& e) {
      throw Failure{ET_PARSE, o.graph_file + ": " + e.what()};
    }
    return j.dump();
  }
  j["name"] = o.family;
  j["parameters"] = json::object();
  for (const auto& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      throw Failure{ET_INVALID_PARAMETERS, "parameter '" + p + "' is not key=value"};
    try {
      j["parameters"][p.substr(0, eq)] = std::stoi(p.substr(eq + 1));
    } catch (const std::exception&) {
      throw Failure{ET_INVALID_PARAMETERS, "parameter '" + p + "' needs an integer value"};
    }
  }
  return j.dump();
}

Graph graph(const Options& o) {
  et_graph* g = nullptr;
  check(et_graph_generate(family_json(o).c_str(), o.radius, &g));
  return Graph(g);
}

int max_side_or(const Options& o, int fallback) {
  return o.max_side ? *o.max_side : fallback;
}

int cmd_analyze(const Options& o) {
  auto text = call([&](char** out) {
    return et_analyze(family_json(o).c_str(), o.radii.data(), o.radii.size(), o.cap,
                      o.margin, out);
  });
  auto j = json::parse(text);
  if (j.value("consistency_warning", false))
    std::cerr << "warning: " << j.value("warning", "") << "\n";
  emit(o, text);
  return kExitOk;
}

int cmd_degree(const Options& o) {
  emit(o, call([&](char** out) {
         return et_end_degree(family_json(o).c_str(), o.radii.data(), o.radii.size(),
                              o.cap, out);
       }));
  return kExitOk;
}

int cmd_dominators(const Options& o) {
  auto text = call([&](char** out) {
    return et_dominators(family_json(o).c_str(), o.radii.data(), o.radii.size(), o.cap,
                         out);
  });
  auto j = json::parse(text);
  j["value"] = j["dominators"];
  j["cut"] = json::array();
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_separators(const Options& o) {
  auto g = graph(o);
  int m = o.m;
  if (m <= 0) {
    auto d = json::parse(call([&](char** out) {
      return et_end_degree(family_json(o).c_str(), o.radii.data(), o.radii.size(), o.cap,
                           out);
    }));
    if (d["thick"].get<bool>())
      throw Failure{ET_PRECONDITION, "end is thick; pass --m explicitly"};
    m = d["value"].get<int>();
  }
  auto j = json::parse(call([&](char** out) { return et_separator_sequence(g.get(), m, out); }));
  j["value"] = m;
  j["cut"] = j["separators"];
  j["stable"] = true;
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

int resolved_k(const Options& o) {
  if (o.k > 0) return o.k;
  auto d = json::parse(call([&](char** out) {
    return et_end_degree(family_json(o).c_str(), o.radii.data(), o.radii.size(), o.cap,
                         out);
  }));
  if (d["thick"].get<bool>())
    throw Failure{ET_PRECONDITION, "end is thick; pass --k explicitly"};
  return d["value"].get<int>();
}

int cmd_enumerate(const Options& o) {
  auto g = graph(o);
  int k = resolved_k(o);
  emit(o, call([&](char** out) {
         return et_enumerate_relevant(g.get(), k, max_side_or(o, 10), out);
       }));
  return kExitOk;
}

int cmd_alpha(const Options& o) {
  auto g = graph(o);
  int k = resolved_k(o);
  auto text = call([&](char** out) { return et_alpha(g.get(), k, max_side_or(o, 10), out); });
  if (!json::parse(text).value("locally_finite", true))
    std::cerr << "warning: the graph is not locally finite; ranks are only "
                 "meaningful up to the truncation\n";
  emit(o, text);
  return kExitOk;
}

int cmd_automorphisms(const Options& o) {
  auto g = graph(o);
  emit(o, call([&](char** out) { return et_automorphisms(g.get(), o.margin, out); }));
  return kExitOk;
}

Td build(const Options& o, et_graph* g) {
  et_td* td = nullptr;
  check(et_build_td(g, o.k, max_side_or(o, 0), &td));
  return Td(td);
}

int cmd_build_td(const Options& o) {
  auto g = graph(o);
  auto td = build(o, g.get());
  emit(o, call([&](char** out) {
         return et_td_export(g.get(), td.get(), o.format.c_str(), out);
       }));
  return kExitOk;
}

int cmd_verify_td(const Options& o) {
  if (o.input.empty()) throw Failure{ET_INVALID_ARGUMENT, "--input is required"};
  std::string text = read_file(o.input);
  et_graph* graw = nullptr;
  et_td* traw = nullptr;
  check(et_td_load(text.c_str(), &graw, &traw));
  Graph g(graw);
  Td td(traw);
  int passed = 0;
  emit(o, call([&](char** out) { return et_td_verify(g.get(), td.get(), &passed, out); }));
  return passed ? kExitOk : kExitVerifyFailed;
}

int cmd_ray(const Options& o) {
  auto g = graph(o);
  int m = o.m > 0 ? o.m : resolved_k(o);
  auto text = call([&](char** out) { return et_ray_decomposition(g.get(), m, out); });
  emit(o, text);
  return json::parse(text)["passed"].get<bool>() ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const Options& o) {
  auto g = graph(o);
  if (o.what == "graph") {
    emit(o, call([&](char** out) { return et_graph_export(g.get(), o.format.c_str(), out); }));
  } else {
    auto td = build(o, g.get());
    emit(o, call([&](char** out) {
           return et_td_export(g.get(), td.get(), o.format.c_str(), out);
         }));
  }
  return kExitOk;
}

int cmd_pipeline(const Options& o) {
  int passed = 0;
  char *td_json = nullptr, *td_dot = nullptr, *report = nullptr;
  check(et_pipeline(family_json(o).c_str(), o.radius, o.radii.data(), o.radii.size(),
                    o.cap, o.k, max_side_or(o, 0), &passed, &td_json, &td_dot, &report));
  Owned a(td_json), b(td_dot), c(report);
  std::string dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  std::string stem = dir + "/" + (o.graph_file.empty() ? o.family : "custom") + "_R" +
                     std::to_string(o.radius);
  write_file(stem + ".td.json", td_json);
  write_file(stem + ".td.dot", td_dot);
  write_file(stem + ".report.json", report);
  std::cout << report;
  return passed ? kExitOk : kExitVerifyFailed;
}

void report_failure(const Options& o, const Failure& f) {
  if (o.json_errors) {
    json j = {{"error", et_status_name(f.status)}, {"code", f.status}, {"message", f.message}};
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "error: " << et_status_name(f.status) << ": " << f.message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ends, relevant separations and invariant tree-decompositions of "
               "truncated one-ended graphs"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the flags; flags win");
  Options o;

  app.add_flag("--json-errors", o.json_errors, "Print errors to stderr as JSON");
  app.add_option("--family", o.family,
                 "ray, ladder, canopy, canopy_fig2, dominated_canopy, alpha_example, grid");
  app.add_option("--param", o.params, "Family parameter key=value (repeatable)");
  app.add_option("--graph", o.graph_file, "Custom graph JSON (vertices, edges, horizon, base)");
  app.add_option("--radius", o.radius, "Truncation radius")->check(CLI::PositiveNumber);
  app.add_option("--radii", o.radii, "Increasing radii for sweeps")->delimiter(',');
  app.add_option("--cap", o.cap, "Thickness cap")->check(CLI::PositiveNumber);
  app.add_option("--k", o.k, "End degree override");
  app.add_option("--max-side", o.max_side, "Bound on |A\\B| (0 = unbounded)");
  app.add_option("--margin", o.margin, "Distance from the horizon trimmed off orbit counts");
  app.add_option("--m", o.m, "Separator size for sequences and ray decompositions");
  app.add_option("--out", o.out, "Output file (output directory for pipeline)");
  app.add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--input", o.input, "Decomposition JSON for verify-td");
  app.add_option("--what", o.what, "export target: graph or td")
      ->check(CLI::IsMember({"graph", "td"}));

  std::map<std::string, int (*)(const Options&)> commands = {
      {"analyze", cmd_analyze},
      {"degree", cmd_degree},
      {"dominators", cmd_dominators},
      {"separators", cmd_separators},
      {"enumerate-separations", cmd_enumerate},
      {"alpha", cmd_alpha},
      {"automorphisms", cmd_automorphisms},
      {"build-td", cmd_build_td},
      {"verify-td", cmd_verify_td},
      {"ray-decomposition", cmd_ray},
      {"export", cmd_export},
      {"pipeline", cmd_pipeline},
  };
  const std::map<std::string, std::string> help = {
      {"analyze", "End degree, dominating vertices and orbit counts"},
      {"degree", "Vertex degree of the end, or Thick"},
      {"dominators", "Vertices dominating the end"},
      {"separators", "Disjoint separator sequence towards the horizon"},
      {"enumerate-separations", "Relevant separations as JSON lines"},
      {"alpha", "Vertex ranks over the enumerated pool"},
      {"automorphisms", "Generators in cycle notation and orbits"},
      {"build-td", "Invariant tree-decomposition as JSON or DOT"},
      {"verify-td", "Re-verify a decomposition written by build-td"},
      {"ray-decomposition", "Slabs between disjoint separators"},
      {"export", "Write the graph or decomposition as JSON or DOT"},
      {"pipeline", "Full construction with precondition checks and verification"},
  };
  for (const auto& [name, fn] : commands) app.add_subcommand(name, help.at(name))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (const char* env = std::getenv("ENDTREE_BUDGET")) check(et_set_budget(env));
    for (auto* sub : app.get_subcommands())
      return commands.at(sub->get_name())(o);
  } catch (const Failure& f) {
    report_failure(o, f);
    return f.status == ET_PRECONDITION ? kExitRefused : kExitError;
  } catch (const std::exception& e) {
    report_failure(o, Failure{ET_INTERNAL, e.what()});
    return kExitError;
  }
  return kExitError;
}
