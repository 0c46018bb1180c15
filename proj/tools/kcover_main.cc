// kcover: command-line front end for Kronecker covers, polarities, quotients
// and covering maps.
//
// Exit codes: 0 success / all checks pass, 1 a check failed or no witness
// exists, 2 input error, 3 precondition error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kcover/automorphisms.h"
#include "kcover/covering.h"
#include "kcover/errors.h"
#include "kcover/experiments.h"
#include "kcover/graph_io.h"
#include "kcover/kronecker.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

struct CliConfig {
  std::string input_format = "auto";
  std::string output_format = "graph6";
  int limit_n = 64;
  std::size_t limit_aut = 1'000'000;
  int limit_cover = 128;
  bool quiet = false;
  std::string report_path;
};

std::string read_source(const std::string& arg) {
  if (arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw kcover::InputError("cannot read " + arg);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return arg;
}

kcover::GraphFormat input_format(const CliConfig& cfg) {
  if (cfg.input_format == "graph6") return kcover::GraphFormat::kGraph6;
  if (cfg.input_format == "edgelist") return kcover::GraphFormat::kEdgeList;
  return kcover::GraphFormat::kAuto;
}

kcover::Graph load_graph(const std::string& arg, const CliConfig& cfg) {
  return kcover::parse_graph(read_source(arg), input_format(cfg));
}

kcover::SearchLimits limits(const CliConfig& cfg) {
  return {cfg.limit_n, cfg.limit_aut};
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void print_graph(const kcover::Graph& g, const CliConfig& cfg) {
  if (cfg.output_format == "edgelist") {
    std::cout << kcover::edge_list_encode(g);
  } else if (cfg.output_format == "json") {
    print_json({{"graph6", kcover::graph6_encode(g)}, {"order", g.order()}, {"size", g.size()}});
  } else {
    std::cout << kcover::graph6_encode(g) << '\n';
  }
}

int run_kc(const std::string& arg, const CliConfig& cfg) {
  const kcover::Graph g = load_graph(arg, cfg);
  const kcover::KroneckerResult kc = kcover::kronecker_cover(g);
  if (cfg.output_format == "json") {
    print_json({{"cover_graph6", kcover::graph6_encode(kc.cover)},
                {"projection", kcover::covering_to_json(kc.projection)},
                {"canonical_polarity", kc.canonical_polarity.perm.image_string()}});
  } else {
    print_graph(kc.cover, cfg);
  }
  return kExitOk;
}

int run_quotients(const std::string& arg, const CliConfig& cfg) {
  const kcover::Graph k = load_graph(arg, cfg);
  const auto census = kcover::kronecker_quotients(k, limits(cfg));
  print_json(kcover::census_to_json(k, census));
  if (!cfg.quiet && !census.isomorphic_pairs.empty()) {
    std::cerr << "warning: non-conjugate polarities produced isomorphic quotients\n";
  }
  return kExitOk;
}

int run_polarities(const std::string& arg, const CliConfig& cfg) {
  const kcover::Graph k = load_graph(arg, cfg);
  const kcover::PermutationSet pols = kcover::find_polarities(k, limits(cfg));
  nlohmann::json list = nlohmann::json::array();
  for (const auto& p : pols) {
    list.push_back({{"image", p.image_string()}, {"cycles", p.cycle_string()}});
  }
  print_json({{"input_graph6", kcover::graph6_encode(k)},
              {"is_kronecker_cover", !pols.empty()},
              {"polarity_count", pols.size()},
              {"polarities", std::move(list)}});
  return kExitOk;
}

int run_iso(const std::string& a, const std::string& b, const CliConfig& cfg) {
  const kcover::Graph g = load_graph(a, cfg);
  const kcover::Graph h = load_graph(b, cfg);
  const auto iso = kcover::isomorphism(g, h);
  print_json({{"isomorphic", iso.has_value()},
              {"witness", iso ? nlohmann::json(iso->image_string()) : nlohmann::json(nullptr)}});
  return iso ? kExitOk : kExitCheckFailed;
}

int run_cover_verify(const std::string& arg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_source(arg));
  } catch (const nlohmann::json::parse_error& e) {
    throw kcover::InputError(std::string("covering map JSON: ") + e.what());
  }
  const kcover::CoveringMap m = kcover::covering_from_json(j);
  const kcover::CoveringCheck check = kcover::verify_covering(m);
  print_json({{"valid", check.valid}, {"fold", m.fold}, {"diagnostic", check.diagnostic}});
  return check.valid ? kExitOk : kExitCheckFailed;
}

int run_cover_search(const std::string& cover_arg, const std::string& base_arg,
                     const CliConfig& cfg) {
  const kcover::Graph cover = load_graph(cover_arg, cfg);
  const kcover::Graph base = load_graph(base_arg, cfg);
  const auto m = kcover::search_covering_map(cover, base, {cfg.limit_cover});
  if (!m) {
    print_json({{"found", false}});
    return kExitCheckFailed;
  }
  print_json(kcover::covering_to_json(*m));
  return kExitOk;
}

int emit_report(const kcover::ReproReport& r, const CliConfig& cfg) {
  const std::string text = r.to_json().dump(2) + "\n";
  if (cfg.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.report_path, std::ios::binary);
    if (!out) throw kcover::InputError("cannot write " + cfg.report_path);
    out << text;
  }
  if (!cfg.quiet) {
    for (const auto& c : r.checks) {
      std::cerr << (c.passed ? "PASS " : "FAIL ") << c.anchor << ": " << c.claim << '\n';
    }
  }
  return r.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_reproduce(const std::string& which, const std::vector<int>& attach,
                  const CliConfig& cfg) {
  if (which == "figure1") return emit_report(kcover::reproduce_figure1(), cfg);
  std::optional<kcover::Attachments> override;
  if (!attach.empty()) {
    if (attach.size() != 4) {
      throw kcover::InputError("--attach expects four vertices a,b1,b2,c");
    }
    override = kcover::Attachments{{attach[0], attach[1], attach[2], attach[3]}};
  }
  return emit_report(kcover::reproduce_theorem(override), cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker covers, polarities, quotients and covering maps"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("--format", cfg.input_format, "Input graph format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  app.add_option("--output", cfg.output_format, "Output format for graphs")
      ->check(CLI::IsMember({"graph6", "edgelist", "json"}));
  app.add_option("--limit-n", cfg.limit_n, "Vertex limit for automorphism searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit-aut", cfg.limit_aut, "Group order limit for automorphism searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit-cover", cfg.limit_cover, "Vertex limit for covering-map searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", cfg.quiet, "Suppress diagnostics on stderr");

  std::string graph_a, graph_b, which;
  std::vector<int> attach;

  auto* kc = app.add_subcommand("kc", "Kronecker cover of a graph");
  kc->add_option("graph", graph_a, "graph6 string, file, or - for stdin")->required();

  auto* quotients = app.add_subcommand("quotients", "All Kronecker quotients of a graph");
  quotients->add_option("graph", graph_a)->required();

  auto* polarities = app.add_subcommand("polarities", "All polarities of a graph");
  polarities->add_option("graph", graph_a)->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test with witness");
  iso->add_option("g1", graph_a)->required();
  iso->add_option("g2", graph_b)->required();

  auto* cover = app.add_subcommand("cover", "Covering maps");
  cover->require_subcommand(1);
  auto* verify = cover->add_subcommand("verify", "Verify a covering map JSON file");
  verify->add_option("map", graph_a, "covering map JSON file, or - for stdin")->required();
  auto* search = cover->add_subcommand("search", "Search for a covering map");
  search->add_option("cover", graph_a)->required();
  search->add_option("base", graph_b)->required();

  auto* reproduce = app.add_subcommand("reproduce", "Rebuild and check the worked examples");
  reproduce->add_option("experiment", which)
      ->required()
      ->check(CLI::IsMember({"figure1", "theorem"}));
  reproduce->add_option("--attach", attach, "Theorem bridge attachments a,b1,b2,c")
      ->delimiter(',');
  reproduce->add_option("--report", cfg.report_path, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*kc) return run_kc(graph_a, cfg);
    if (*quotients) return run_quotients(graph_a, cfg);
    if (*polarities) return run_polarities(graph_a, cfg);
    if (*iso) return run_iso(graph_a, graph_b, cfg);
    if (*verify) return run_cover_verify(graph_a);
    if (*search) return run_cover_search(graph_a, graph_b, cfg);
    if (*reproduce) return run_reproduce(which, attach, cfg);
  } catch (const kcover::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kcover::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitInput;
}
