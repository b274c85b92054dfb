#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netmatch/graph.hpp"
#include "netmatch/market.hpp"
#include "netmatch/random.hpp"

namespace netmatch {

enum class Model { NCN, ER, WS, BA };

inline constexpr Model kAllModels[] = {Model::NCN, Model::ER, Model::WS, Model::BA};

std::string_view model_name(Model model);
// Case-insensitive. Throws InvalidParameter on unknown names.
Model parse_model(std::string_view name);

/// Graph of the given model at nominal degree k: NCN(k), WS(k, p_rewire),
/// ER with nk/2 edges, BA with k/2 links per new node.
Graph generate_model_graph(Model model, std::size_t n, std::size_t k, double p_rewire, RandomSource& rng);

// Sub-seeds of a replication's master seed. The market stream is shared by all
// models; each model draws its graph from its own stream.
std::uint64_t market_seed(std::uint64_t master);
std::uint64_t graph_seed(std::uint64_t master, Model model);

struct CellSpec {
  Model model = Model::NCN;
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned dep = 3;
  double p_rewire = 0.1;
  std::uint64_t seed = 0;
};

// Throws InvalidParameter when the cell cannot be run.
void validate_cell(const CellSpec& cell);

struct ExperimentResult {
  Model model = Model::NCN;
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned dep = 0;
  double p_rewire = 0.0;
  std::uint64_t seed = 0;
  double average_utility = 0.0;
  std::optional<double> apl;
  double connectivity = 0.0;
  std::size_t matched_pairs = 0;
  double runtime_ms = 0.0;
};

// Everything a single run produced, for callers that need more than metrics.
struct CellRun {
  Market market;
  Graph graph;
  SocialCircle circle;
  Matching matching;
  ExperimentResult result;
};

/// Market -> graph -> distances -> circle -> restricted deferred acceptance ->
/// metrics. Throws OracleViolation if the matching is not stable.
CellRun run_cell_detailed(const CellSpec& cell);
ExperimentResult run_cell(const CellSpec& cell);

struct ExperimentConfig {
  std::vector<Model> models;
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> k_values;
  unsigned dep = 3;
  double p_rewire = 0.1;
  std::vector<std::uint64_t> seeds;
};

// Master seeds base, base+1, ..., base+replications-1.
std::vector<std::uint64_t> replication_seeds(std::uint64_t base, std::size_t replications);

void validate_config(const ExperimentConfig& config);

/// Runs models x n_values x k_values x seeds (in that nesting order).
/// Cells are spread over `threads` workers (0 = hardware concurrency); the
/// returned order does not depend on the thread count.
std::vector<ExperimentResult> sweep(const ExperimentConfig& config, unsigned threads = 0);

// Preset configurations for the standard experiments.
ExperimentConfig table2_config(std::size_t replications, std::uint64_t base_seed);
ExperimentConfig fig1_config(std::size_t replications, std::uint64_t base_seed);
ExperimentConfig fig2_config(std::size_t replications, std::uint64_t base_seed);
ExperimentConfig fig3to6_config(std::size_t replications, std::uint64_t base_seed);

enum class GroupField { Model, N, K, Dep, PRewire, Seed };

struct SummaryStat {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
  std::size_t count = 0;
};

struct AggregateRow {
  // Group key; only the fields named in group_by are set.
  std::optional<Model> model;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<unsigned> dep;
  std::optional<double> p_rewire;
  std::optional<std::uint64_t> seed;

  std::size_t rows = 0;
  SummaryStat average_utility;
  SummaryStat apl;  // over rows with a defined APL
  SummaryStat connectivity;
  SummaryStat matched_pairs;
};

/// Groups in order of first appearance. Throws InvalidParameter on empty input.
std::vector<AggregateRow> summarize(const std::vector<ExperimentResult>& results,
                                    const std::vector<GroupField>& group_by);

SummaryStat describe(const std::vector<double>& values);

// model,n,k,dep,p_rewire,seed,average_utility,apl,connectivity,matched_pairs
void write_results_csv(std::ostream& out, const std::vector<ExperimentResult>& results);
void write_summary_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

}  // namespace netmatch
