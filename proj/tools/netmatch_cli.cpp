// Command-line front end: graph generation, topology metrics, single matching
// runs and experiment sweeps.
//
// Exit codes: 0 success, 2 invalid parameters, 3 I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netmatch/errors.hpp"
#include "netmatch/graph.hpp"
#include "netmatch/harness.hpp"
#include "netmatch/market.hpp"
#include "netmatch/serialize.hpp"
#include "netmatch/topology.hpp"

namespace {

using namespace netmatch;

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::string model = "ba";
  std::size_t n = 20;
  std::size_t k = 2;
  unsigned dep = 3;
  double p_rewire = 0.1;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
};

// Writes `text` to the --out path, or stdout when none was given.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  file << text;
  if (!file) {
    throw IoError("write to '" + path + "' failed");
  }
}

Graph make_graph(const CommonOptions& o) {
  const Model model = parse_model(o.model);
  RandomSource rng(graph_seed(o.seed, model));
  return generate_model_graph(model, o.n, o.k, o.p_rewire, rng);
}

std::string results_text(const std::vector<ExperimentResult>& results, const std::string& format, bool summary) {
  std::ostringstream text;
  if (summary) {
    const auto rows = summarize(results, {GroupField::Model, GroupField::N, GroupField::K});
    write_summary_csv(text, rows);
  } else if (format == "json") {
    text << to_json(results).dump(2) << '\n';
  } else {
    write_results_csv(text, results);
  }
  return text.str();
}

void add_model_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--model", o.model, "Network model")
      ->check(CLI::IsMember({"ncn", "er", "ws", "ba"}, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--n", o.n, "Node count")->capture_default_str();
  cmd->add_option("--k", o.k, "Nominal degree (even)")->capture_default_str();
  cmd->add_option("--p-rewire", o.p_rewire, "WS rewiring probability")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable matching restricted to social circles in structured networks"};
  app.require_subcommand(1);

  CommonOptions o;
  std::string graph_path;
  std::string market_path;
  std::vector<std::string> sweep_models;
  std::vector<std::size_t> sweep_n;
  std::vector<std::size_t> sweep_k;
  std::size_t reps = 50;
  unsigned threads = 0;
  bool summary = false;

  auto* generate = app.add_subcommand("generate", "Emit an edge list");
  add_model_flags(generate, o);
  generate->add_option("--out", o.out, "Output path (default stdout)");

  auto* metrics = app.add_subcommand("metrics", "Topology report as JSON");
  add_model_flags(metrics, o);
  metrics->add_option("--graph", graph_path, "Read an edge list instead of generating");
  metrics->add_option("--dep", o.dep, "Social circle depth")->capture_default_str();
  metrics->add_option("--out", o.out, "Output path (default stdout)");

  auto* match = app.add_subcommand("match", "Single run; matching as JSON");
  add_model_flags(match, o);
  match->add_option("--graph", graph_path, "Read an edge list instead of generating");
  match->add_option("--market", market_path, "Replay a market JSON instead of drawing one");
  match->add_option("--dep", o.dep, "Social circle depth")->capture_default_str();
  match->add_option("--out", o.out, "Output path (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a grid of cells");
  sweep_cmd->add_option("--model", sweep_models, "Models (repeatable or comma separated; default all)")
      ->delimiter(',')
      ->check(CLI::IsMember({"ncn", "er", "ws", "ba"}, CLI::ignore_case));
  sweep_cmd->add_option("--n", sweep_n, "Node counts")->delimiter(',')->required();
  sweep_cmd->add_option("--k", sweep_k, "Nominal degrees")->delimiter(',')->required();
  sweep_cmd->add_option("--dep", o.dep, "Social circle depth")->capture_default_str();
  sweep_cmd->add_option("--p-rewire", o.p_rewire, "WS rewiring probability")->capture_default_str();
  sweep_cmd->add_option("--seed", o.seed, "Base seed; replication r uses seed+r")->capture_default_str();

  std::vector<std::pair<CLI::App*, std::string>> presets;
  for (const char* name : {"table2", "fig1", "fig2", "fig3-6"}) {
    auto* preset = app.add_subcommand(name, std::string("Preset sweep ") + name);
    preset->add_option("--seed", o.seed, "Base seed; replication r uses seed+r")->capture_default_str();
    preset->add_option("--p-rewire", o.p_rewire, "WS rewiring probability")->capture_default_str();
    preset->add_option("--dep", o.dep, "Social circle depth")->capture_default_str();
    presets.emplace_back(preset, name);
  }
  std::vector<CLI::App*> sweeping{sweep_cmd};
  for (auto& [cmd, name] : presets) {
    sweeping.push_back(cmd);
  }
  for (CLI::App* cmd : sweeping) {
    cmd->add_option("--reps", reps, "Replications per cell")->capture_default_str();
    cmd->add_option("--out", o.out, "Output path (default stdout)");
    cmd->add_option("--format", o.format, "Row format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--summary", summary, "Emit per-(model,n,k) mean/stddev CSV instead of rows");
    cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*generate) {
      std::ostringstream text;
      write_edge_list(text, make_graph(o));
      emit(o.out, text.str());
    } else if (*metrics) {
      const Graph graph = graph_path.empty() ? make_graph(o) : load_edge_list(graph_path);
      const DistanceMatrix dm = all_pairs_shortest(graph);
      emit(o.out, to_json(topology_report(graph, dm, o.dep)).dump(2) + "\n");
    } else if (*match) {
      if (graph_path.empty() && market_path.empty()) {
        const CellRun run = run_cell_detailed(CellSpec{parse_model(o.model), o.n, o.k, o.dep, o.p_rewire, o.seed});
        nlohmann::json doc = matching_to_json(run.market, run.circle, run.matching);
        doc["run"] = to_json(run.result);
        emit(o.out, doc.dump(2) + "\n");
      } else {
        const Graph graph = graph_path.empty() ? make_graph(o) : load_edge_list(graph_path);
        Market market;
        if (market_path.empty()) {
          RandomSource rng(market_seed(o.seed));
          market = build_market(graph.node_count(), rng);
        } else {
          std::ifstream in(market_path);
          if (!in) {
            throw IoError("cannot open '" + market_path + "' for reading");
          }
          nlohmann::json doc;
          try {
            in >> doc;
          } catch (const nlohmann::json::exception& e) {
            throw InvalidParameter(std::string("market: ") + e.what());
          }
          market = market_from_json(doc);
        }
        const SocialCircle circle(all_pairs_shortest(graph), o.dep);
        const Matching matching = restricted_deferred_acceptance(market, circle);
        emit(o.out, matching_to_json(market, circle, matching).dump(2) + "\n");
      }
    } else if (*sweep_cmd) {
      ExperimentConfig config;
      if (sweep_models.empty()) {
        config.models.assign(std::begin(kAllModels), std::end(kAllModels));
      } else {
        for (const auto& m : sweep_models) {
          config.models.push_back(parse_model(m));
        }
      }
      config.n_values = sweep_n;
      config.k_values = sweep_k;
      config.dep = o.dep;
      config.p_rewire = o.p_rewire;
      config.seeds = replication_seeds(o.seed, reps);
      emit(o.out, results_text(sweep(config, threads), o.format, summary));
    } else {
      for (auto& [cmd, name] : presets) {
        if (!*cmd) {
          continue;
        }
        ExperimentConfig config = name == "table2" ? table2_config(reps, o.seed)
                                  : name == "fig1" ? fig1_config(reps, o.seed)
                                  : name == "fig2" ? fig2_config(reps, o.seed)
                                                   : fig3to6_config(reps, o.seed);
        config.dep = o.dep;
        config.p_rewire = o.p_rewire;
        emit(o.out, results_text(sweep(config, threads), o.format, summary));
      }
    }
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
