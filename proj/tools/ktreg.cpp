// ktreg command-line frontend: graph ingestion, query dispatch, JSON
// reporting. Exit codes: 0 found/true, 1 not found/false, 2 input error,
// 3 resource limit, 4 certificate route inapplicable.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ktreg/errors.hpp"
#include "ktreg/io.hpp"
#include "ktreg/solver.hpp"
#include "ktreg/spectral.hpp"
#include "ktreg/structures.hpp"

using nlohmann::json;
using namespace ktreg;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitInapplicable = 4;

struct GlobalOptions {
  bool json = false;
  int max_t = 30;
  int threads = 1;
};

SolveOptions solve_options(const GlobalOptions& g) {
  SolveOptions o;
  o.max_multiplicity = g.max_t;
  o.threads = g.threads;
  return o;
}

json set_to_json(const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

json set_display_json(const NamedGraph& g, const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(g.display(v));
  return a;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& [u, v] : edges) a.push_back(json::array({u, v}));
  return a;
}

json rational_json(const std::optional<Rational>& r) {
  if (!r.has_value()) return nullptr;
  return r->str();
}

json diagnostics_json(const SolveDiagnostics& d) {
  json j;
  j["lambda"] = d.lambda;
  j["t"] = d.multiplicity;
  j["lambda_is_eigenvalue"] = d.lambda_is_eigenvalue;
  j["lambda_main"] = d.lambda_main.has_value() ? json(*d.lambda_main) : json(nullptr);
  j["system_consistent"] = d.system_consistent;
  j["predicted_cardinality"] = rational_json(d.predicted_cardinality);
  j["lower_bound"] = rational_json(d.lower_bound);
  j["upper_bound"] = rational_json(d.upper_bound);
  j["unique_solution_path"] = d.unique_solution_path;
  j["shortcut"] = d.shortcut.empty() ? json(nullptr) : json(d.shortcut);
  return j;
}

std::string join_vertices(const NamedGraph& g, const VertexSet& s, bool names) {
  std::ostringstream os;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << " ";
    os << (names ? g.display(s[i]) : std::to_string(s[i]));
  }
  return os.str();
}

void print_diagnostics(std::ostream& os, const SolveDiagnostics& d) {
  os << "lambda: " << d.lambda << "\n";
  if (d.multiplicity >= 0) os << "t: " << d.multiplicity << "\n";
  if (d.predicted_cardinality)
    os << "predicted_cardinality: " << d.predicted_cardinality->str() << "\n";
  if (d.lower_bound && d.upper_bound)
    os << "bounds: [" << d.lower_bound->str() << ", " << d.upper_bound->str() << "]\n";
  if (!d.shortcut.empty()) os << "shortcut: " << d.shortcut << "\n";
  if (d.unique_solution_path) os << "unique_solution_path: true\n";
}

// The emitted JSON is byte-stable for identical inputs, so wall-clock timing
// stays out of it; human mode reports timing on stderr.
struct Reporter {
  const GlobalOptions& opts;
  json report;
  std::ostringstream human;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Reporter(const GlobalOptions& o, const std::string& command) : opts(o) {
    report["command"] = command;
  }

  int finish(int code) {
    if (opts.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << human.str();
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      std::cerr << "elapsed_ms: " << ms << "\n";
    }
    return code;
  }
};

int run_find(const GlobalOptions& g, int kappa, int tau, const std::string& file) {
  Reporter rep(g, "find");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  rep.report["query"] = {{"kappa", kappa}, {"tau", tau}};
  SolveDiagnostics diag;
  auto cert = find_kt_set(ng.graph, kappa, tau, solve_options(g), &diag);
  rep.report["diagnostics"] = diagnostics_json(diag);
  if (cert) {
    rep.report["status"] = "found";
    rep.report["certificate"] = {{"set", set_to_json(cert->set)},
                                 {"size", cert->set.size()},
                                 {"verified", cert->verified}};
    if (ng.has_names())
      rep.report["certificate"]["display"] = set_display_json(ng, cert->set);
    rep.human << "status: found\nset: " << join_vertices(ng, cert->set, false) << "\n";
    if (ng.has_names())
      rep.human << "names: " << join_vertices(ng, cert->set, true) << "\n";
  } else {
    rep.report["status"] = "not_found";
    rep.human << "status: not_found\n";
  }
  print_diagnostics(rep.human, diag);
  return rep.finish(cert ? kExitFound : kExitNotFound);
}

int run_enum(const GlobalOptions& g, int kappa, int tau, const std::string& file) {
  Reporter rep(g, "enum");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  rep.report["query"] = {{"kappa", kappa}, {"tau", tau}};
  SolveDiagnostics diag;
  auto certs = enumerate_kt_sets(ng.graph, kappa, tau, solve_options(g), &diag);
  rep.report["diagnostics"] = diagnostics_json(diag);
  rep.report["status"] = certs.empty() ? "not_found" : "found";
  json sets = json::array();
  for (const auto& c : certs) {
    json entry = {{"set", set_to_json(c.set)}, {"size", c.set.size()},
                  {"verified", c.verified}};
    if (ng.has_names()) entry["display"] = set_display_json(ng, c.set);
    sets.push_back(entry);
  }
  rep.report["sets"] = sets;
  rep.report["count"] = certs.size();
  rep.human << "status: " << (certs.empty() ? "not_found" : "found") << "\n"
            << "count: " << certs.size() << "\n";
  for (const auto& c : certs) {
    rep.human << "set: " << join_vertices(ng, c.set, false);
    if (ng.has_names()) rep.human << "  (" << join_vertices(ng, c.set, true) << ")";
    rep.human << "\n";
  }
  print_diagnostics(rep.human, diag);
  return rep.finish(certs.empty() ? kExitNotFound : kExitFound);
}

int run_check(const GlobalOptions& g, int kappa, int tau, const std::string& members,
              const std::string& file) {
  Reporter rep(g, "check");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  VertexSet s = parse_vertex_list(ng, members);
  rep.report["query"] = {{"kappa", kappa}, {"tau", tau}, {"set", set_to_json(s)}};
  KtCertificate cert = check_set(ng.graph, s, kappa, tau);
  rep.report["status"] = cert.verified ? "found" : "not_found";
  rep.report["verified"] = cert.verified;
  rep.human << "status: " << (cert.verified ? "found" : "not_found") << "\n"
            << "verified: " << (cert.verified ? "true" : "false") << "\n";
  return rep.finish(cert.verified ? kExitFound : kExitNotFound);
}

int run_bounds(const GlobalOptions& g, int kappa, int tau, const std::string& file) {
  Reporter rep(g, "bounds");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  rep.report["query"] = {{"kappa", kappa}, {"tau", tau}};
  CardinalityBounds b = cardinality_bounds(ng.graph, kappa, tau);
  rep.report["status"] = "found";
  rep.report["lower_bound"] = b.lower.str();
  rep.report["upper_bound"] = b.upper.str();
  rep.human << "status: found\nlower_bound: " << b.lower.str()
            << "\nupper_bound: " << b.upper.str() << "\n";
  return rep.finish(kExitFound);
}

int run_matching(const GlobalOptions& g, const std::string& file) {
  Reporter rep(g, "matching");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  std::string note;
  auto matching = perfect_matching(ng.graph, solve_options(g), &note);
  rep.report["note"] = note.empty() ? json(nullptr) : json(note);
  if (matching) {
    rep.report["status"] = "found";
    rep.report["edges"] = edges_to_json(*matching);
    rep.human << "status: found\n";
    for (const auto& [u, v] : *matching) rep.human << "edge: " << u << " " << v << "\n";
  } else {
    rep.report["status"] = "not_found";
    rep.human << "status: not_found\n";
  }
  if (!note.empty()) rep.human << "note: " << note << "\n";
  return rep.finish(matching ? kExitFound : kExitNotFound);
}

int run_hamilton(const GlobalOptions& g, bool via_subdivision, const std::string& file) {
  Reporter rep(g, "hamilton");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  rep.report["route"] = via_subdivision ? "subdivision" : "line_graph";
  auto cycle = via_subdivision ? hamiltonian_via_subdivision(ng.graph, solve_options(g))
                               : hamiltonian_cycle(ng.graph, solve_options(g));
  if (cycle) {
    rep.report["status"] = "found";
    json seq = json::array();
    for (Vertex v : *cycle) seq.push_back(v);
    rep.report["cycle"] = seq;
    rep.human << "status: found\ncycle:";
    for (Vertex v : *cycle) rep.human << " " << v;
    rep.human << "\n";
  } else {
    rep.report["status"] = "not_found";
    rep.human << "status: not_found\n";
  }
  return rep.finish(cycle ? kExitFound : kExitNotFound);
}

int run_eds(const GlobalOptions& g, const std::string& file) {
  Reporter rep(g, "eds");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  auto sets = efficient_dominating_sets(ng.graph, solve_options(g));
  rep.report["status"] = sets.empty() ? "not_found" : "found";
  json arr = json::array();
  for (const auto& s : sets) {
    json entry = {{"set", set_to_json(s)}};
    if (ng.has_names()) entry["display"] = set_display_json(ng, s);
    arr.push_back(entry);
  }
  rep.report["sets"] = arr;
  rep.report["count"] = sets.size();
  rep.human << "status: " << (sets.empty() ? "not_found" : "found") << "\n"
            << "count: " << sets.size() << "\n";
  for (const auto& s : sets) {
    rep.human << "set: " << join_vertices(ng, s, false);
    if (ng.has_names()) rep.human << "  (" << join_vertices(ng, s, true) << ")";
    rep.human << "\n";
  }
  return rep.finish(sets.empty() ? kExitNotFound : kExitFound);
}

int run_dim(const GlobalOptions& g, const std::string& file) {
  Reporter rep(g, "dim");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  auto matchings = dominating_induced_matchings(ng.graph, solve_options(g));
  rep.report["status"] = matchings.empty() ? "not_found" : "found";
  json arr = json::array();
  for (const auto& m : matchings) arr.push_back(edges_to_json(m));
  rep.report["edge_sets"] = arr;
  rep.report["count"] = matchings.size();
  rep.human << "status: " << (matchings.empty() ? "not_found" : "found") << "\n"
            << "count: " << matchings.size() << "\n";
  for (const auto& m : matchings) {
    rep.human << "edges:";
    for (const auto& [u, v] : m) rep.human << " (" << u << "," << v << ")";
    rep.human << "\n";
  }
  return rep.finish(matchings.empty() ? kExitNotFound : kExitFound);
}

int run_maxreg(const GlobalOptions& g, int kappa, const std::string& file) {
  Reporter rep(g, "maxreg");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  rep.report["query"] = {{"kappa", kappa}};
  auto cert = max_regular_induced_certificate(ng.graph, kappa, solve_options(g));
  if (cert) {
    rep.report["status"] = "found";
    rep.report["certificate"] = {{"set", set_to_json(cert->set)},
                                 {"size", cert->set.size()},
                                 {"maximum", cert->maximum}};
    rep.human << "status: found\nset: " << join_vertices(ng, cert->set, false)
              << "\nmaximum: " << (cert->maximum ? "true" : "false") << "\n";
  } else {
    rep.report["status"] = "not_found";
    rep.human << "status: not_found\n";
  }
  return rep.finish(cert ? kExitFound : kExitNotFound);
}

int run_srg(const GlobalOptions& g, const std::string& file) {
  Reporter rep(g, "srg");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  auto params = srg_check(ng.graph);
  if (params) {
    rep.report["status"] = "found";
    rep.report["parameters"] = {{"n", params->n},
                                {"p", params->p},
                                {"a", params->a},
                                {"c", params->c},
                                {"primitive", params->primitive}};
    rep.human << "status: found\nparameters: (" << params->n << "," << params->p << ","
              << params->a << "," << params->c << ")\n"
              << "primitive: " << (params->primitive ? "true" : "false") << "\n";
  } else {
    rep.report["status"] = "not_found";
    rep.human << "status: not_found\n";
  }
  return rep.finish(params ? kExitFound : kExitNotFound);
}

int run_spectrum(const GlobalOptions& g, const std::string& file) {
  Reporter rep(g, "spectrum");
  NamedGraph ng = load_graph_file(file);
  rep.report["input"] = file;
  SpectralReport sr = spectrum(ng.graph);
  rep.report["status"] = "found";
  json arr = json::array();
  for (const auto& e : sr.eigenvalues) {
    arr.push_back({{"value", e.value},
                   {"multiplicity", e.multiplicity},
                   {"exact_integer",
                    e.exact_integer ? json(*e.exact_integer) : json(nullptr)},
                   {"main", e.main},
                   {"main_exact", e.main_exact}});
  }
  rep.report["eigenvalues"] = arr;
  rep.report["main_count"] = sr.main_count();
  rep.human << "status: found\n";
  for (const auto& e : sr.eigenvalues) {
    rep.human << "eigenvalue: " << e.value << "  multiplicity: " << e.multiplicity;
    if (e.exact_integer) rep.human << "  integer: " << *e.exact_integer;
    rep.human << "  main: " << (e.main ? "true" : "false")
              << (e.main_exact ? " (exact)" : " (numeric)") << "\n";
  }
  return rep.finish(kExitFound);
}

DesignBlocks parse_blocks_file(const std::string& path, int n1) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open blocks file: " + path);
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t i = raw.find_first_not_of(" \t");
    if (i == std::string::npos || raw[i] == '#') continue;
    lines.push_back(raw.substr(i));
  }
  if (lines.empty()) throw InputError("blocks file has no data lines");
  std::istringstream head(lines[0]);
  int b = 0, tau = 0, s = 0;
  if (!(head >> b >> tau >> s))
    throw InputError("first data line of a blocks file must be 'b tau s'");
  if (b != n1)
    throw InputError("blocks file declares " + std::to_string(b) +
                     " blocks but G1 has " + std::to_string(n1) + " vertices");
  if (static_cast<int>(lines.size()) != 1 + b)
    throw InputError("expected " + std::to_string(b) + " block lines");
  DesignBlocks blocks;
  blocks.block_size = tau;
  blocks.replication = s;
  for (int i = 1; i <= b; ++i) {
    std::istringstream ls(lines[i]);
    VertexSet block;
    Vertex v;
    while (ls >> v) block.push_back(v);
    blocks.blocks.push_back(std::move(block));
  }
  return blocks;
}

int run_join(const GlobalOptions& g, const std::string& file1, const std::string& file2,
             const std::string& blocks_file) {
  Reporter rep(g, "join");
  NamedGraph g1 = load_graph_file(file1);
  NamedGraph g2 = load_graph_file(file2);
  DesignBlocks blocks = parse_blocks_file(blocks_file, g1.graph.vertex_count());
  Graph h = design_join(g1.graph, g2.graph, blocks);

  NamedGraph out;
  out.graph = h;
  out.names.assign(h.vertex_count() + 1, "");
  std::string text = print_graph_file(out);

  rep.report["status"] = "found";
  rep.report["graph_file"] = text;
  rep.report["n"] = h.vertex_count();
  rep.report["m"] = h.edge_count();
  rep.report["regular_set_postconditions_verified"] = true;
  rep.human << text;
  return rep.finish(kExitFound);
}

int run_unicyclic(const GlobalOptions& g, int n, int s) {
  Reporter rep(g, "unicyclic");
  Graph h = pendant_unicyclic(n, s);
  NamedGraph out;
  out.graph = h;
  out.names.assign(h.vertex_count() + 1, "");
  std::string text = print_graph_file(out);

  JoinMainEigenvalues mains = main_eigenvalues_of_join(0, 2, s, 1);
  rep.report["status"] = "found";
  rep.report["graph_file"] = text;
  rep.report["n"] = h.vertex_count();
  rep.report["m"] = h.edge_count();
  rep.report["main_eigenvalues"] = {
      {"plus_approx", mains.plus_approx},
      {"minus_approx", mains.minus_approx},
      {"exact", mains.exact},
      {"plus_exact", mains.plus_exact ? json(mains.plus_exact->str()) : json(nullptr)},
      {"minus_exact",
       mains.minus_exact ? json(mains.minus_exact->str()) : json(nullptr)}};
  rep.human << text;
  return rep.finish(kExitFound);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact (kappa,tau)-regular set solver and structure detector"};
  app.require_subcommand(1);

  GlobalOptions globals;
  app.add_flag("--json", globals.json, "emit a machine-readable JSON report");
  app.add_option("--max-t", globals.max_t,
                 "eigenvalue multiplicity cap for the 2^t tuple search");
  app.add_option("--threads", globals.threads,
                 "worker threads for enumeration (output order is unaffected)");

  int kappa = 0, tau = 0, kappa_only = 0, uni_n = 0, uni_s = 0;
  std::string file, file2, blocks_file, members;
  bool via_subdivision = false;

  auto* find_cmd = app.add_subcommand("find", "find one (kappa,tau)-regular set");
  find_cmd->add_option("-k,--kappa", kappa, "kappa")->required();
  find_cmd->add_option("-t,--tau", tau, "tau")->required();
  find_cmd->add_option("file", file, "graph file")->required();

  auto* enum_cmd = app.add_subcommand("enum", "enumerate all (kappa,tau)-regular sets");
  enum_cmd->add_option("-k,--kappa", kappa, "kappa")->required();
  enum_cmd->add_option("-t,--tau", tau, "tau")->required();
  enum_cmd->add_option("file", file, "graph file")->required();

  auto* check_cmd = app.add_subcommand("check", "verify a set definitionally");
  check_cmd->add_option("-k,--kappa", kappa, "kappa")->required();
  check_cmd->add_option("-t,--tau", tau, "tau")->required();
  check_cmd->add_option("-s,--set", members, "comma-separated vertices")->required();
  check_cmd->add_option("file", file, "graph file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "cardinality bounds for |S|");
  bounds_cmd->add_option("-k,--kappa", kappa, "kappa")->required();
  bounds_cmd->add_option("-t,--tau", tau, "tau")->required();
  bounds_cmd->add_option("file", file, "graph file")->required();

  auto* matching_cmd = app.add_subcommand("matching", "perfect matching detection");
  matching_cmd->add_option("file", file, "graph file")->required();

  auto* hamilton_cmd = app.add_subcommand("hamilton", "Hamilton cycle detection");
  hamilton_cmd->add_flag("--via-subdivision", via_subdivision,
                         "use the subdivision certificate instead of the line graph");
  hamilton_cmd->add_option("file", file, "graph file")->required();

  auto* eds_cmd = app.add_subcommand("eds", "efficient dominating sets");
  eds_cmd->add_option("file", file, "graph file")->required();

  auto* dim_cmd = app.add_subcommand("dim", "dominating induced matchings");
  dim_cmd->add_option("file", file, "graph file")->required();

  auto* maxreg_cmd =
      app.add_subcommand("maxreg", "maximum kappa-regular induced subgraph certificate");
  maxreg_cmd->add_option("-k,--kappa", kappa_only, "kappa")->required();
  maxreg_cmd->add_option("file", file, "graph file")->required();

  auto* srg_cmd = app.add_subcommand("srg", "strongly regular graph check");
  srg_cmd->add_option("file", file, "graph file")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues with main flags");
  spectrum_cmd->add_option("file", file, "graph file")->required();

  auto* join_cmd = app.add_subcommand("join", "design join of two regular graphs");
  join_cmd->add_option("g1", file, "first graph file (regular)")->required();
  join_cmd->add_option("g2", file2, "second graph file (regular)")->required();
  join_cmd->add_option("blocks", blocks_file, "design blocks file")->required();

  auto* unicyclic_cmd =
      app.add_subcommand("unicyclic", "cycle with pendant vertices attached");
  unicyclic_cmd->add_option("-n,--cycle", uni_n, "cycle length (>= 3)")->required();
  unicyclic_cmd->add_option("-s,--pendants", uni_s, "pendants per cycle vertex (>= 1)")
      ->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }

  if (const char* dir = std::getenv("KTREG_CACHE_DIR"); dir && *dir)
    set_line_graph_cache_dir(dir);

  try {
    if (find_cmd->parsed()) return run_find(globals, kappa, tau, file);
    if (enum_cmd->parsed()) return run_enum(globals, kappa, tau, file);
    if (check_cmd->parsed()) return run_check(globals, kappa, tau, members, file);
    if (bounds_cmd->parsed()) return run_bounds(globals, kappa, tau, file);
    if (matching_cmd->parsed()) return run_matching(globals, file);
    if (hamilton_cmd->parsed()) return run_hamilton(globals, via_subdivision, file);
    if (eds_cmd->parsed()) return run_eds(globals, file);
    if (dim_cmd->parsed()) return run_dim(globals, file);
    if (maxreg_cmd->parsed()) return run_maxreg(globals, kappa_only, file);
    if (srg_cmd->parsed()) return run_srg(globals, file);
    if (spectrum_cmd->parsed()) return run_spectrum(globals, file);
    if (join_cmd->parsed()) return run_join(globals, file, file2, blocks_file);
    if (unicyclic_cmd->parsed()) return run_unicyclic(globals, uni_n, uni_s);
  } catch (const ResourceLimitError& e) {
    json out = {{"status", "resource_limit"}, {"error", e.what()},
                {"t", e.multiplicity()}};
    if (globals.json)
      std::cout << out.dump(2) << "\n";
    else
      std::cout << "status: resource_limit\nerror: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const InapplicableError& e) {
    json out = {{"status", "inapplicable"}, {"error", e.what()}};
    if (globals.json)
      std::cout << out.dump(2) << "\n";
    else
      std::cout << "status: inapplicable\nerror: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const InputError& e) {
    json out = {{"status", "input_error"}, {"error", e.what()}};
    if (globals.json)
      std::cout << out.dump(2) << "\n";
    else
      std::cout << "status: input_error\nerror: " << e.what() << "\n";
    return kExitInputError;
  }
  std::cerr << "no subcommand dispatched\n";
  return kExitInputError;
}
