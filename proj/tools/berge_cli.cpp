// berge: command-line front end.
//
// Exit codes: 0 found/ok, 1 free/negative, 2 usage or input error, 3 budget.
// Every option can also be set through an environment variable named
// BERGE_<LONG_NAME>, e.g. BERGE_BUDGET_NODES or BERGE_PATTERN.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "berge/berge.hpp"
#include "berge/catalog.hpp"
#include "berge/classify.hpp"
#include "berge/constructions.hpp"
#include "berge/error.hpp"
#include "berge/extremal.hpp"
#include "berge/io.hpp"
#include "berge/kernels.hpp"
#include "berge/ramsey.hpp"
#include "berge/sweep.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Globals {
  int threads = 1;
  std::uint64_t budget_nodes = 100'000'000;
  std::uint64_t seed = 1;
  bool json = false;
};

auto env_name(const std::string& long_name) -> std::string {
  std::string out = "BERGE_";
  for (char c : long_name) out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

template <class T>
auto option(CLI::App* app, const std::string& long_name, T& target, const std::string& help) -> CLI::Option* {
  return app->add_option("--" + long_name, target, help)->envname(env_name(long_name));
}

auto flag(CLI::App* app, const std::string& long_name, bool& target, const std::string& help) -> CLI::Option* {
  return app->add_flag("--" + long_name, target, help)->envname(env_name(long_name));
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    berge::write_file(output, text);
  }
}

auto format_map(const berge::VertexMap& map) -> std::string {
  std::ostringstream out;
  for (std::size_t i = 0; i < map.size(); ++i) out << (i ? " " : "") << i << "->" << map[i];
  return out.str();
}

// detect ---------------------------------------------------------------------

struct DetectArgs {
  std::string file;
  std::string pattern = "K3";
  bool all = false;
};

auto run_detect(const Globals& g, const DetectArgs& a) -> int {
  const auto h = berge::load_hypergraph(a.file);
  const auto f = berge::catalog::pattern(a.pattern);
  if (a.all) {
    const auto witnesses = berge::all_berge_witnesses(h, f);
    if (g.json) {
      json j = {{"status", witnesses.empty() ? "free" : "found"}, {"copies", witnesses.size()}};
      j["witnesses"] = json::array();
      for (const auto& w : witnesses) j["witnesses"].push_back(berge::to_json(w));
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << (witnesses.empty() ? "free" : "found") << " copies=" << witnesses.size() << '\n';
      for (const auto& w : witnesses) std::cout << berge::to_json(w).dump() << '\n';
    }
    return witnesses.empty() ? kNegative : kOk;
  }
  const auto result = berge::detect_berge(h, f, {g.budget_nodes});
  const char* status = result.status == berge::Detection::Found ? "found"
                       : result.status == berge::Detection::Free ? "free"
                                                                 : "budget";
  if (g.json) {
    json j = {{"status", status}, {"nodes", result.nodes}};
    if (result.witness) j["witness"] = berge::to_json(*result.witness);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << status << " nodes=" << result.nodes << '\n';
    if (result.witness) {
      for (auto [fv, hv] : result.witness->vertex_map) std::cout << "vertex " << fv << " -> " << hv << '\n';
      for (auto [e, idx] : result.witness->edge_assignment)
        std::cout << "edge " << e.u << ' ' << e.v << " -> hyperedge " << idx << '\n';
    }
  }
  switch (result.status) {
    case berge::Detection::Found: return kOk;
    case berge::Detection::Free: return kNegative;
    case berge::Detection::Truncated: return kBudget;
  }
  return kBudget;
}

// classify -------------------------------------------------------------------

struct ClassifyArgs {
  std::string file;
  std::string pattern = "K3";
  bool set_semantics = false;
  std::string output;
};

auto run_classify(const Globals& g, const ClassifyArgs& a) -> int {
  const auto h = berge::load_hypergraph(a.file);
  const auto f = berge::catalog::pattern(a.pattern);
  const auto sem = a.set_semantics ? berge::MultiplicitySemantics::Set : berge::MultiplicitySemantics::Multiset;
  const auto c = berge::classify_edges(h, f, sem);
  if (!g.json) {
    emit(berge::classification_csv(c), a.output);
    return kOk;
  }
  json j = {{"blue_limit", c.blue_limit}, {"blue", c.blue_count()}, {"non_blue", c.non_blue_count()}};
  j["edges"] = json::array();
  for (const auto& e : c.edges) j["edges"].push_back({{"u", e.edge.u}, {"v", e.edge.v}, {"multiplicity", e.multiplicity}, {"blue", e.blue}});
  emit(j.dump(2) + "\n", a.output);
  return kOk;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string pattern = "K3";
  bool set_semantics = false;
};

auto run_verify(const Globals& g, const VerifyArgs& a) -> int {
  const auto h = berge::load_hypergraph(a.file);
  const auto f = berge::catalog::pattern(a.pattern);
  const auto pre = berge::detect_berge(h, f, {g.budget_nodes});
  if (pre.status == berge::Detection::Truncated) {
    std::cerr << "budget exhausted while checking that the input is Berge-F-free\n";
    return kBudget;
  }
  if (pre.status == berge::Detection::Found) {
    std::cerr << "precondition violated: the input contains a Berge-" << a.pattern
              << "; the blue-edge checks apply only to Berge-F-free hypergraphs\n";
    if (g.json) std::cout << json{{"status", "precondition_violated"}, {"witness", berge::to_json(*pre.witness)}}.dump(2) << '\n';
    return kNegative;
  }

  berge::CheckOptions options;
  options.max_nodes = g.budget_nodes;
  options.semantics = a.set_semantics ? berge::MultiplicitySemantics::Set : berge::MultiplicitySemantics::Multiset;

  bool failed = false;
  bool truncated = false;
  json report = json::object();

  const auto blue = berge::verify_blue_in_every_copy(h, f, options);
  failed |= blue.status == berge::CheckStatus::Counterexample;
  truncated |= blue.status == berge::CheckStatus::Truncated;
  report["blue_in_every_copy"] = {{"ok", blue.status == berge::CheckStatus::Ok}};
  if (blue.copy) report["blue_in_every_copy"]["copy"] = *blue.copy;

  std::size_t checked = 0;
  json inside = json::array();
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (h.edge_size(i) < f.vertex_count()) continue;
    ++checked;
    const auto check = berge::verify_nonblue_within_edge_f_free(h, f, i, options);
    if (check.status == berge::CheckStatus::Counterexample) {
      failed = true;
      inside.push_back({{"hyperedge", i}, {"copy", *check.copy}});
    }
    truncated |= check.status == berge::CheckStatus::Truncated;
  }
  report["nonblue_inside_hyperedges"] = {{"checked", checked}, {"failures", inside}};

  const auto bound = berge::blue_counting_bound(h, f);
  failed |= !bound.holds();
  report["counting_bound"] = {{"ok", bound.holds()},
                              {"blue_incidences", bound.blue_incidences},
                              {"blue_edges", bound.blue_edges},
                              {"bound", bound.bound}};

  const char* status = failed ? "fail" : truncated ? "budget" : "ok";
  report["status"] = status;
  if (g.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "blue edge in every copy of F: " << (blue.status == berge::CheckStatus::Ok ? "ok" : blue.status == berge::CheckStatus::Truncated ? "budget" : "FAIL") << '\n';
    if (blue.copy) std::cout << "  copy without blue edge: " << format_map(*blue.copy) << '\n';
    std::cout << "non-blue pairs inside each hyperedge F-free: " << (inside.empty() ? "ok" : "FAIL") << " (" << checked
              << " hyperedges checked)\n";
    for (const auto& item : inside) std::cout << "  hyperedge " << item["hyperedge"].get<std::size_t>() << '\n';
    std::cout << "blue incidences " << bound.blue_incidences << " <= " << bound.bound << ": "
              << (bound.holds() ? "ok" : "FAIL") << '\n';
    std::cout << status << '\n';
  }
  return failed ? kNegative : truncated ? kBudget : kOk;
}

// ramsey ---------------------------------------------------------------------

struct RamseyArgs {
  std::string pattern = "K3";
  std::string second;
  std::vector<int> edge;
  bool all_edges = false;
  int cap = 10;
  std::string witness_dir;
};

auto run_ramsey(const Globals& g, const RamseyArgs& a) -> int {
  const auto f = berge::catalog::pattern(a.pattern);
  berge::RamseyOptions options{a.cap, g.budget_nodes};

  if (!a.second.empty()) {
    const auto second = berge::catalog::pattern(a.second);
    try {
      const auto r = berge::ramsey_number(f, second, options);
      if (g.json) {
        std::cout << json{{"value", r.value}, {"nodes", r.nodes}}.dump(2) << '\n';
      } else {
        std::cout << "R = " << r.value << '\n';
      }
      if (!a.witness_dir.empty()) {
        std::filesystem::create_directories(a.witness_dir);
        berge::write_file(std::filesystem::path(a.witness_dir) / "witness.txt", berge::format_coloring(r.witness));
      }
      return kOk;
    } catch (const berge::ExceedsCapError& e) {
      std::cout << (g.json ? json{{"exceeds_cap", true}, {"lower_bound", e.lower_bound()}}.dump(2)
                           : "R >= " + std::to_string(e.lower_bound()) + " (exceeds cap " + std::to_string(a.cap) + ")")
                << '\n';
      return kNegative;
    }
  }

  std::vector<berge::Edge> edges;
  if (!a.edge.empty()) {
    if (a.edge.size() != 2) throw berge::Error(berge::ErrorCode::InvalidArgument, "--edge takes two vertices");
    const auto e = berge::Edge::make(a.edge[0], a.edge[1]);
    if (!f.has_edge(e.u, e.v)) throw berge::Error(berge::ErrorCode::InvalidArgument, "--edge is not an edge of F");
    edges.push_back(e);
  } else {
    edges.assign(f.edges().begin(), f.edges().end());
  }
  if (edges.empty()) throw berge::Error(berge::ErrorCode::InvalidArgument, "F has no edges");

  json rows = json::array();
  std::optional<int> best;
  int lower_bound = 0;
  for (const auto& e : edges) {
    json row = {{"u", e.u}, {"v", e.v}};
    try {
      const auto r = berge::edge_size_threshold(f, e, options);
      row["value"] = r.value;
      row["nodes"] = r.nodes;
      best = best ? std::min(*best, r.value) : r.value;
      if (!a.witness_dir.empty()) {
        std::filesystem::create_directories(a.witness_dir);
        const auto name = "witness_" + std::to_string(e.u) + "_" + std::to_string(e.v) + ".txt";
        berge::write_file(std::filesystem::path(a.witness_dir) / name, berge::format_coloring(r.witness));
      }
      if (!g.json) std::cout << "edge " << e.u << ' ' << e.v << ": R(F, F-e) = " << r.value << '\n';
    } catch (const berge::ExceedsCapError& ex) {
      row["lower_bound"] = ex.lower_bound();
      lower_bound = std::max(lower_bound, ex.lower_bound());
      if (!g.json) std::cout << "edge " << e.u << ' ' << e.v << ": R(F, F-e) >= " << ex.lower_bound() << " (exceeds cap)\n";
    }
    rows.push_back(row);
  }
  if (g.json) {
    json j = {{"edges", rows}};
    if (best) j["minimum"] = *best;
    else j["lower_bound"] = lower_bound;
    std::cout << j.dump(2) << '\n';
  } else if (best) {
    std::cout << "minimum " << *best << '\n';
  } else {
    std::cout << "minimum >= " << lower_bound << " (exceeds cap)\n";
  }
  return best ? kOk : kNegative;
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string generator = "kr";
  int n = 0;
  int r = 3;
  std::string pattern = "K3";
  std::string s_min = "2";
  std::string s_max = "2";
  int draws = 10;
  std::string output;
};

auto run_construct(const Globals& g, const ConstructArgs& a) -> int {
  if (a.n < 1) throw berge::Error(berge::ErrorCode::InvalidArgument, "--n must be positive");
  berge::Hypergraph h;
  std::optional<std::int64_t> predicted;
  std::string formula;
  switch (berge::parse_generator(a.generator)) {
    case berge::Generator::Kr:
      h = berge::kr_construction(a.n, a.r);
      predicted = static_cast<std::int64_t>(a.n) * a.n / a.r;
      formula = "n^2/r";
      break;
    case berge::Generator::SingleEdge:
      h = berge::single_edge(a.n);
      predicted = a.n;
      formula = "n";
      break;
    case berge::Generator::Greedy: {
      const auto f = berge::catalog::pattern(a.pattern);
      const int lo = berge::SizeBound::parse(a.s_min).at(a.n);
      const int hi = berge::SizeBound::parse(a.s_max).at(a.n);
      h = berge::greedy_maximal(a.n, f, {lo, hi, g.seed, a.draws}).hypergraph;
      break;
    }
  }
  const auto measured = berge::power_sum(h, 1);
  if (g.json) {
    json j = {{"hypergraph", berge::to_json(h)}, {"sum_size", measured}};
    if (predicted) j["predicted_sum_size"] = *predicted, j["formula"] = formula;
    emit(j.dump(2) + "\n", a.output);
  } else {
    std::string text;
    if (predicted) text += "# predicted sum_size " + formula + " = " + std::to_string(*predicted) + "\n";
    text += "# measured sum_size = " + std::to_string(measured) + "\n";
    emit(text + berge::format_hypergraph(h), a.output);
  }
  return kOk;
}

// search ---------------------------------------------------------------------

struct SearchArgs {
  std::string pattern = "K3";
  int n = 0;
  bool graph = false;
  std::string weight = "size";
  int s_min = 2;
  int s_max = 2;
  bool set_semantics = false;
  int multiplicity_cap = 0;
  int margin_max = 0;
};

auto run_search(const Globals& g, const SearchArgs& a) -> int {
  const auto f = berge::catalog::pattern(a.pattern);
  if (a.margin_max > 0) {
    const auto rows = berge::verify_extremal_margin(f, f.vertex_count(), a.margin_max, {g.budget_nodes, 10});
    bool ok = true;
    bool exhaustive = true;
    json j = json::array();
    if (!g.json) std::cout << "n,ex,pairs,ratio,holds\n";
    for (const auto& row : rows) {
      ok &= row.holds();
      exhaustive &= row.exhaustive;
      j.push_back({{"n", row.n}, {"ex", row.ex}, {"pairs", row.pairs}, {"ratio", row.ratio}, {"holds", row.holds()}, {"exhaustive", row.exhaustive}});
      if (!g.json) std::cout << row.n << ',' << row.ex << ',' << row.pairs << ',' << row.ratio << ',' << (row.holds() ? 1 : 0) << '\n';
    }
    if (g.json) std::cout << j.dump(2) << '\n';
    return !exhaustive ? kBudget : ok ? kOk : kNegative;
  }
  if (a.n < 1) throw berge::Error(berge::ErrorCode::InvalidArgument, "--n must be positive");
  berge::SearchReport report;
  if (a.graph) {
    report = berge::max_f_free_edges(a.n, f, {g.budget_nodes, 10});
  } else {
    berge::HyperSearchOptions options;
    options.s_min = a.s_min;
    options.s_max = a.s_max;
    options.max_nodes = g.budget_nodes;
    options.set_semantics = a.set_semantics;
    if (a.multiplicity_cap > 0) options.multiplicity_cap = a.multiplicity_cap;
    report = berge::max_weight_berge_free(a.n, f, berge::WeightFunction::parse(a.weight), options);
  }
  if (g.json) {
    std::cout << berge::to_json(report).dump(2) << '\n';
  } else {
    std::cout << (report.exhaustive ? "optimum " : "best found (budget exhausted) ") << report.optimum
              << " nodes=" << report.nodes_explored << '\n';
    if (const auto* h = std::get_if<berge::Hypergraph>(&report.witness)) std::cout << berge::format_hypergraph(*h);
    if (const auto* gr = std::get_if<berge::Graph>(&report.witness)) std::cout << berge::format_graph(*gr);
  }
  return report.exhaustive ? kOk : kBudget;
}

// sweep ----------------------------------------------------------------------

struct SweepArgs {
  std::string generator = "kr";
  int r = 3;
  std::string pattern = "K3";
  std::string weight = "size";
  std::string s_min = "2";
  std::string s_max = "2";
  std::string ns;
  std::string seeds;
  int draws = 10;
  std::string output;
};

auto run_sweep(const Globals& g, const SweepArgs& a) -> int {
  berge::SweepConfig config;
  config.generator = berge::parse_generator(a.generator);
  config.r = a.r;
  config.pattern_spec = a.pattern;
  config.weight = berge::WeightFunction::parse(a.weight);
  config.s_min = berge::SizeBound::parse(a.s_min);
  config.s_max = berge::SizeBound::parse(a.s_max);
  config.ns = berge::parse_int_list(a.ns);
  config.seeds = a.seeds.empty() ? std::vector<std::uint64_t>{g.seed} : berge::parse_seed_list(a.seeds);
  config.draws_per_n2 = a.draws;
  config.threads = g.threads;
  const auto rows = berge::run_sweep(config);
  emit(berge::sweep_csv(config, rows), a.output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge-F-free hypergraph analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  option(&app, "threads", globals.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  option(&app, "budget-nodes", globals.budget_nodes, "Search-node budget (0 = unlimited where supported)");
  option(&app, "seed", globals.seed, "Random seed");
  flag(&app, "json", globals.json, "JSON output");
  std::string isa;
  option(&app, "isa", isa, "Kernel selection: scalar or avx2")->check(CLI::IsMember({"scalar", "avx2"}));

  DetectArgs detect;
  auto* c_detect = app.add_subcommand("detect", "Look for a Berge copy of F");
  c_detect->add_option("hypergraph", detect.file, "Hypergraph file")->required()->envname("BERGE_HYPERGRAPH");
  option(c_detect, "pattern", detect.pattern, "Pattern: K3, C4, P4, ... or a graph file");
  flag(c_detect, "all", detect.all, "List one witness per copy");

  ClassifyArgs classify;
  auto* c_classify = app.add_subcommand("classify", "Blue/non-blue classification of shadow edges");
  c_classify->add_option("hypergraph", classify.file, "Hypergraph file")->required()->envname("BERGE_HYPERGRAPH");
  option(c_classify, "pattern", classify.pattern, "Pattern");
  flag(c_classify, "set-semantics", classify.set_semantics, "Count identical hyperedges once");
  option(c_classify, "output", classify.output, "Output file");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run the blue-edge checks on a Berge-F-free hypergraph");
  c_verify->add_option("hypergraph", verify.file, "Hypergraph file")->required()->envname("BERGE_HYPERGRAPH");
  option(c_verify, "pattern", verify.pattern, "Pattern");
  flag(c_verify, "set-semantics", verify.set_semantics, "Count identical hyperedges once");

  RamseyArgs ramsey;
  auto* c_ramsey = app.add_subcommand("ramsey", "R(F, F-e) for one or every edge e, or R(F, G)");
  option(c_ramsey, "pattern", ramsey.pattern, "Pattern F");
  option(c_ramsey, "second", ramsey.second, "Second target G: compute R(F, G) instead");
  option(c_ramsey, "edge", ramsey.edge, "Edge e as two vertices")->expected(2);
  flag(c_ramsey, "all-edges", ramsey.all_edges, "Every edge of F (default)");
  option(c_ramsey, "cap", ramsey.cap, "Largest n searched");
  option(c_ramsey, "witness-dir", ramsey.witness_dir, "Save extremal colourings here");

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Build kr, single or greedy hypergraphs");
  c_construct->add_option("generator", construct.generator, "kr, single or greedy")->envname("BERGE_GENERATOR");
  option(c_construct, "n", construct.n, "Vertices")->required();
  option(c_construct, "r", construct.r, "r for the kr construction");
  option(c_construct, "pattern", construct.pattern, "Pattern for greedy");
  option(c_construct, "s-min", construct.s_min, "Smallest hyperedge size (integer, n or n/k)");
  option(c_construct, "s-max", construct.s_max, "Largest hyperedge size (integer, n or n/k)");
  option(c_construct, "draws", construct.draws, "Greedy draws per n^2");
  option(c_construct, "output", construct.output, "Output file");

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Exhaustive extremal search");
  option(c_search, "pattern", search.pattern, "Pattern");
  option(c_search, "n", search.n, "Vertices");
  flag(c_search, "graph", search.graph, "ex(n, F) over graphs");
  option(c_search, "weight", search.weight, "Weight: size, size2, size-minus:C, table:..., expr:...");
  option(c_search, "s-min", search.s_min, "Smallest hyperedge size");
  option(c_search, "s-max", search.s_max, "Largest hyperedge size");
  flag(c_search, "set-semantics", search.set_semantics, "Simple hypergraphs only");
  option(c_search, "multiplicity-cap", search.multiplicity_cap, "Copies allowed per hyperedge (default |E(F)|-1)");
  option(c_search, "margin-max", search.margin_max, "Tabulate ex(n, F) against C(n,2)-1 for n = |V(F)| .. this");

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "CSV sweep over n and seeds");
  option(c_sweep, "generator", sweep.generator, "kr, single or greedy");
  option(c_sweep, "r", sweep.r, "r for kr");
  option(c_sweep, "pattern", sweep.pattern, "Pattern for greedy");
  option(c_sweep, "weight", sweep.weight, "Weight function");
  option(c_sweep, "s-min", sweep.s_min, "Smallest hyperedge size (integer, n or n/k)");
  option(c_sweep, "s-max", sweep.s_max, "Largest hyperedge size (integer, n or n/k)");
  option(c_sweep, "n", sweep.ns, "n values: 6,12,18 or 20:60:10")->required();
  option(c_sweep, "seeds", sweep.seeds, "Seeds (comma separated); defaults to --seed");
  option(c_sweep, "draws", sweep.draws, "Greedy draws per n^2");
  option(c_sweep, "output", sweep.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!isa.empty() && !berge::kernels::select(isa == "avx2" ? berge::kernels::Isa::Avx2 : berge::kernels::Isa::Scalar)) {
      std::cerr << "error: " << isa << " kernels are not available on this machine\n";
      return kUsage;
    }
    if (c_detect->parsed()) return run_detect(globals, detect);
    if (c_classify->parsed()) return run_classify(globals, classify);
    if (c_verify->parsed()) return run_verify(globals, verify);
    if (c_ramsey->parsed()) return run_ramsey(globals, ramsey);
    if (c_construct->parsed()) return run_construct(globals, construct);
    if (c_search->parsed()) return run_search(globals, search);
    if (c_sweep->parsed()) return run_sweep(globals, sweep);
  } catch (const berge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == berge::ErrorCode::BudgetExhausted ? kBudget : kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
