// Command-line front end: width computation with oracle cross-check,
// categorical law suites, corpus comparison, and family generation.
// All reports are JSON on standard output with deterministic key
// order; diagnostics go to standard error.
//
// Exit codes: 0 success; 2 parse/parameter error; 3 oracle bound
// exceeded; 4 width disagreement; 5 law violation.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spined/chordal.hpp"
#include "spined/families.hpp"
#include "spined/graph.hpp"
#include "spined/hypergraph.hpp"
#include "spined/io.hpp"
#include "spined/laws.hpp"
#include "spined/nat.hpp"
#include "spined/populations.hpp"
#include "spined/rng.hpp"
#include "spined/triangulation.hpp"
#include "spined/version.hpp"

namespace {

using nlohmann::json;
using namespace spined;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitOracleBound = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitLawViolation = 5;

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Either a graph or a hypergraph, depending on the file.
struct ParsedInput {
  std::optional<SimpleGraph> graph;
  std::optional<Hypergraph> hypergraph;
};

ParsedInput parse_input(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  std::string chosen = format;
  if (chosen == "auto") {
    const std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".col" || ext == ".dimacs") chosen = "dimacs";
    else if (ext == ".hg") chosen = "hypergraph";
    else if (ext == ".json") chosen = "json";
    else chosen = "edgelist";
  }
  ParsedInput out;
  if (chosen == "edgelist") out.graph = parse_edge_list(text);
  else if (chosen == "dimacs") out.graph = parse_dimacs(text);
  else if (chosen == "hypergraph") out.hypergraph = parse_hypergraph_text(text);
  else if (chosen == "hypergraph-json")
    out.hypergraph = parse_hypergraph_json(text);
  else if (chosen == "json") {
    // graph and hypergraph JSON share the extension; the key set decides
    const json j = detail::parse_json_document(text);
    if (j.is_object() && j.contains("hyperedges"))
      out.hypergraph = parse_hypergraph_json(text);
    else
      out.graph = parse_graph_json(text);
  } else {
    throw ParseError("unknown format '" + chosen + "'", 0, 0);
  }
  return out;
}

void print_report(const json& report) { std::cout << report.dump(2) << "\n"; }

int run_width(const std::string& input, const std::string& format,
              const std::string& convention_name, bool with_oracle) {
  const Stopwatch watch;
  const ParsedInput parsed = parse_input(input, format);
  const Convention convention = convention_name == "standard"
                                    ? Convention::StandardTreewidth
                                    : Convention::PaperMaxClique;

  const SimpleGraph width_graph =
      parsed.graph ? *parsed.graph : primal_graph(*parsed.hypergraph);
  const WidthValue paper = delta_graph(width_graph);
  const WidthValue delta =
      convert(paper, convention, width_graph.vertex_count());

  json report;
  report["schema"] = kSchemaVersion;
  report["version"] = kVersion;
  report["command"] = "width";
  report["graph"] = std::filesystem::path(input).filename().string();
  report["kind"] = parsed.graph ? "graph" : "hypergraph";
  report["delta"] = delta.value;
  report["convention"] = to_string(convention);
  report["oracle"] = nullptr;
  report["agrees"] = nullptr;

  bool agrees = true;
  if (with_oracle) {
    const WidthValue oracle = treewidth_oracle(width_graph);
    const WidthValue oracle_converted =
        convert(oracle, convention, width_graph.vertex_count());
    report["oracle"] = oracle_converted.value;
    agrees = oracle_converted.value == delta.value;
    report["agrees"] = agrees;
  }
  report["elapsed_ms"] = watch.elapsed_ms();
  print_report(report);
  if (!agrees) {
    std::cerr << "error: triangulation and oracle disagree on " << input
              << "\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

json law_suite_json(const std::string& instance, const LawReport& report) {
  json j = law_report_to_json(report);
  j["instance"] = instance;
  return j;
}

int run_laws(const std::string& suite, std::size_t max_vertices,
             std::size_t samples, std::uint64_t seed) {
  const Stopwatch watch;
  Rng rng(seed);
  const GraphCategory graphs;
  const NatCategory nat;
  const HypergraphCategory hypergraphs;
  std::vector<json> suites;

  const bool run_sc1 = suite == "sc1" || suite == "all";
  const bool run_sc2 = suite == "sc2" || suite == "all";
  const bool run_sfunctor = suite == "sfunctor" || suite == "all";
  if (!run_sc1 && !run_sc2 && !run_sfunctor)
    throw ParseError("unknown suite '" + suite + "'", 0, 0);

  if (run_sc1) {
    std::vector<std::size_t> naturals(33);
    std::iota(naturals.begin(), naturals.end(), 0);
    suites.push_back(law_suite_json("nat", check_sc1(nat, naturals)));
    suites.push_back(law_suite_json(
        "graph",
        check_sc1(graphs, all_graphs_up_to(std::min<std::size_t>(
                              max_vertices, 5)))));
    std::vector<Hypergraph> hyper_population;
    for (std::size_t n = 0; n <= std::min<std::size_t>(max_vertices, 3); ++n) {
      auto batch = all_hypergraphs_on(n);
      hyper_population.insert(hyper_population.end(),
                              std::make_move_iterator(batch.begin()),
                              std::make_move_iterator(batch.end()));
    }
    suites.push_back(
        law_suite_json("hypergraph", check_sc1(hypergraphs, hyper_population)));
  }

  if (run_sc2) {
    std::vector<Sc2Diagram<NatArrow>> nat_diagrams;
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t a = n; a <= 6; ++a)
        for (std::size_t b = n; b <= 6; ++b)
          for (std::size_t ap = a; ap <= 6; ++ap)
            for (std::size_t bp = b; bp <= 6; ++bp)
              nat_diagrams.push_back(
                  {{n, a}, {n, b}, {a, ap}, {b, bp}});
    suites.push_back(
        law_suite_json("nat", check_sc2_suite(nat, nat_diagrams)));

    std::vector<Sc2Diagram<GraphMorphism>> graph_diagrams;
    graph_diagrams.reserve(samples);
    const std::size_t cap = std::min<std::size_t>(max_vertices, 5);
    for (std::size_t i = 0; i < samples; ++i)
      graph_diagrams.push_back(random_sc2_diagram(rng, cap));
    suites.push_back(
        law_suite_json("graph", check_sc2_suite(graphs, graph_diagrams)));
  }

  if (run_sfunctor) {
    const std::size_t cap = std::min<std::size_t>(max_vertices, 5);
    const auto population = all_graphs_up_to(cap);
    std::vector<Sc2Diagram<GraphMorphism>> spans;
    spans.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      auto [g, h] = random_clique_sum_span(rng, cap);
      Sc2Diagram<GraphMorphism> d{g, h, identity_morphism(g.target),
                                  identity_morphism(h.target)};
      spans.push_back(std::move(d));
    }
    const std::size_t sf1_bound = std::min<std::size_t>(max_vertices, 6);
    suites.push_back(law_suite_json(
        "graph", check_sfunctor_laws(graphs, omega_sfunctor(), population,
                                     spans, sf1_bound)));
    suites.push_back(law_suite_json(
        "graph", check_sfunctor_laws(graphs, delta_sfunctor(), population,
                                     spans, sf1_bound)));
    suites.push_back(law_suite_json(
        "nat", check_sfunctor_laws(nat, nat_identity_sfunctor(),
                                   {0, 1, 2, 3, 5, 8, 13}, {}, sf1_bound)));
  }

  bool passed = true;
  json suites_json = json::array();
  for (const auto& s : suites) {
    if (!s["failures"].empty()) passed = false;
    suites_json.push_back(s);
  }

  json report;
  report["schema"] = kSchemaVersion;
  report["version"] = kVersion;
  report["command"] = "laws";
  report["suite"] = suite;
  report["max_vertices"] = max_vertices;
  report["samples"] = samples;
  report["seed"] = seed;
  report["suites"] = suites_json;
  report["passed"] = passed;
  report["elapsed_ms"] = watch.elapsed_ms();
  print_report(report);
  if (!passed) {
    std::cerr << "error: law violations found\n";
    return kExitLawViolation;
  }
  return kExitOk;
}

int run_compare(const std::string& corpus, std::size_t max_vertices) {
  const Stopwatch watch;
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus))
    if (entry.is_regular_file())
      files.push_back(entry.path().filename().string());
  std::sort(files.begin(), files.end());

  json entries = json::array();
  std::size_t agreed = 0, disagreed = 0, errors = 0, skipped = 0;
  for (const auto& name : files) {
    json entry;
    entry["file"] = name;
    try {
      const ParsedInput parsed =
          parse_input((std::filesystem::path(corpus) / name).string(), "auto");
      const SimpleGraph g =
          parsed.graph ? *parsed.graph : primal_graph(*parsed.hypergraph);
      if (g.vertex_count() > max_vertices) {
        entry["skipped"] = "exceeds --max-vertices";
        ++skipped;
        entries.push_back(entry);
        continue;
      }
      const WidthValue delta = delta_graph(g);
      const WidthValue oracle = treewidth_oracle(g);
      const bool agrees =
          delta == convert(oracle, Convention::PaperMaxClique,
                           g.vertex_count());
      entry["delta"] = delta.value;
      entry["oracle"] = oracle.value;
      entry["agrees"] = agrees;
      (agrees ? agreed : disagreed)++;
    } catch (const Error& e) {
      entry["error"] = e.what();
      ++errors;
      std::cerr << "warning: " << name << ": " << e.what() << "\n";
    }
    entries.push_back(entry);
  }

  json report;
  report["schema"] = kSchemaVersion;
  report["version"] = kVersion;
  report["command"] = "compare";
  report["entries"] = entries;
  report["summary"] = {{"files", files.size()},
                       {"agreed", agreed},
                       {"disagreed", disagreed},
                       {"errors", errors},
                       {"skipped", skipped}};
  report["elapsed_ms"] = watch.elapsed_ms();
  print_report(report);
  if (disagreed > 0) {
    std::cerr << "error: " << disagreed << " disagreement(s)\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int run_generate(const std::string& family, std::size_t n, std::uint64_t seed,
                 const std::string& out) {
  SimpleGraph g;
  if (family == "path") {
    g = path_graph(n);
  } else if (family == "cycle") {
    g = cycle_graph(n);
  } else if (family == "complete") {
    g = complete_graph(n);
  } else if (family == "grid") {
    g = grid_graph(n, n);
  } else if (family == "tree") {
    Rng rng(seed);
    g = random_tree(rng, n);
  } else if (family == "random") {
    Rng rng(seed);
    g = random_graph(rng, n);
  } else {
    throw ParseError("unknown family '" + family + "'", 0, 0);
  }
  const std::string text = emit_edge_list(g);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw ParseError("cannot open '" + out + "' for writing", 0, 0);
    file << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spined-category triangulation toolkit"};
  app.require_subcommand(1);

  std::string input, format = "auto", convention = "paper";
  bool with_oracle = false;
  auto* width = app.add_subcommand("width", "compute the triangulation width");
  width->add_option("input", input, "graph or hypergraph file")->required();
  width->add_option("--format", format, "auto|edgelist|dimacs|json|hypergraph|hypergraph-json")
      ->check(CLI::IsMember(
          {"auto", "edgelist", "dimacs", "json", "hypergraph",
           "hypergraph-json"}));
  width->add_option("--convention", convention, "paper|standard")
      ->check(CLI::IsMember({"paper", "standard"}));
  width->add_flag("--oracle", with_oracle,
                  "cross-check against the exact treewidth oracle");

  std::string suite = "all";
  std::size_t max_vertices = 4, samples = 50;
  std::uint64_t seed = 1;
  auto* laws = app.add_subcommand("laws", "run categorical law suites");
  laws->add_option("--suite", suite, "sc1|sc2|sfunctor|all")
      ->check(CLI::IsMember({"sc1", "sc2", "sfunctor", "all"}));
  laws->add_option("--max-vertices", max_vertices, "population size bound");
  laws->add_option("--samples", samples, "random diagrams per suite");
  laws->add_option("--seed", seed, "random seed");

  std::string corpus;
  std::size_t compare_max = 16;
  auto* compare = app.add_subcommand(
      "compare", "compare triangulation and oracle over a corpus directory");
  compare->add_option("corpus", corpus, "directory of graph files")
      ->required();
  compare->add_option("--max-vertices", compare_max,
                      "skip graphs larger than this");

  std::string family, out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  auto* generate =
      app.add_subcommand("generate", "write a graph file in edge-list format");
  generate->add_option("--family", family, "path|cycle|complete|grid|tree|random")
      ->required();
  generate->add_option("--n", gen_n, "size parameter")->required();
  generate->add_option("--seed", gen_seed, "random seed");
  generate->add_option("--out", out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (width->parsed())
      return run_width(input, format, convention, with_oracle);
    if (laws->parsed()) return run_laws(suite, max_vertices, samples, seed);
    if (compare->parsed()) return run_compare(corpus, compare_max);
    return run_generate(family, gen_n, gen_seed, out);
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
