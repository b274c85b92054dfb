#include "netmatch/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "netmatch/errors.hpp"
#include "netmatch/netgen.hpp"
#include "netmatch/topology.hpp"

namespace netmatch {
namespace {

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

std::string format_param(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

}  // namespace

std::string_view model_name(Model model) {
  switch (model) {
    case Model::NCN:
      return "NCN";
    case Model::ER:
      return "ER";
    case Model::WS:
      return "WS";
    case Model::BA:
      return "BA";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (Model m : kAllModels) {
    if (model_name(m) == upper) {
      return m;
    }
  }
  throw InvalidParameter("unknown network model '" + std::string(name) + "'");
}

Graph generate_model_graph(Model model, std::size_t n, std::size_t k, double p_rewire, RandomSource& rng) {
  switch (model) {
    case Model::NCN:
      return generate_ncn(n, k);
    case Model::ER:
      return generate_er(n, n * k / 2, rng);
    case Model::WS:
      return generate_ws(n, k, p_rewire, rng);
    case Model::BA:
      return generate_ba(n, k / 2, rng);
  }
  throw InvalidParameter("unknown network model");
}

std::uint64_t market_seed(std::uint64_t master) { return derive_seed(master, 0); }

std::uint64_t graph_seed(std::uint64_t master, Model model) {
  return derive_seed(master, 1 + static_cast<std::uint64_t>(model));
}

void validate_cell(const CellSpec& cell) {
  if (cell.n < 4 || cell.n % 2 != 0) {
    throw InvalidParameter("n must be even and at least 4, got " + std::to_string(cell.n));
  }
  if (cell.k < 2 || cell.k % 2 != 0) {
    throw InvalidParameter("k must be even and at least 2, got " + std::to_string(cell.k));
  }
  if (cell.dep < 1) {
    throw InvalidParameter("dep must be at least 1");
  }
  if (!(cell.p_rewire >= 0.0 && cell.p_rewire <= 1.0)) {
    throw InvalidParameter("p_rewire must lie in [0, 1]");
  }
  switch (cell.model) {
    case Model::NCN:
    case Model::WS:
    case Model::ER:
      // ER at nk/2 edges needs k <= n-1; with even n and k that is k <= n-2.
      if (cell.k > cell.n - 2) {
        throw InvalidParameter("k must not exceed n-2 for " + std::string(model_name(cell.model)));
      }
      break;
    case Model::BA:
      if (cell.k / 2 >= cell.n) {
        throw InvalidParameter("k/2 must be below n for BA");
      }
      break;
  }
}

CellRun run_cell_detailed(const CellSpec& cell) {
  validate_cell(cell);
  const auto start = std::chrono::steady_clock::now();

  RandomSource market_rng(market_seed(cell.seed));
  Market market = build_market(cell.n, market_rng);
  RandomSource graph_rng(graph_seed(cell.seed, cell.model));
  Graph graph = generate_model_graph(cell.model, cell.n, cell.k, cell.p_rewire, graph_rng);

  DistanceMatrix dm = all_pairs_shortest(graph);
  ExperimentResult result;
  result.model = cell.model;
  result.n = cell.n;
  result.k = cell.k;
  result.dep = cell.dep;
  result.p_rewire = cell.p_rewire;
  result.seed = cell.seed;
  result.apl = average_path_length(dm).mean;
  result.connectivity = connectivity(dm, cell.dep);

  SocialCircle circle(std::move(dm), cell.dep);
  Matching matching = restricted_deferred_acceptance(market, circle);
  if (const auto check = is_stable(market, circle, matching); !check) {
    throw OracleViolation("unstable outcome for seed " + std::to_string(cell.seed));
  }
  result.average_utility = average_utility(market, matching);
  result.matched_pairs = matching.size();
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  return CellRun{std::move(market), std::move(graph), std::move(circle), std::move(matching), result};
}

ExperimentResult run_cell(const CellSpec& cell) { return run_cell_detailed(cell).result; }

std::vector<std::uint64_t> replication_seeds(std::uint64_t base, std::size_t replications) {
  std::vector<std::uint64_t> seeds(replications);
  for (std::size_t r = 0; r < replications; ++r) {
    seeds[r] = base + r;
  }
  return seeds;
}

void validate_config(const ExperimentConfig& config) {
  if (config.models.empty() || config.n_values.empty() || config.k_values.empty() || config.seeds.empty()) {
    throw InvalidParameter("experiment config needs at least one model, n, k and seed");
  }
  for (Model model : config.models) {
    for (std::size_t n : config.n_values) {
      for (std::size_t k : config.k_values) {
        validate_cell(CellSpec{model, n, k, config.dep, config.p_rewire, 0});
      }
    }
  }
}

std::vector<ExperimentResult> sweep(const ExperimentConfig& config, unsigned threads) {
  validate_config(config);
  std::vector<CellSpec> cells;
  for (Model model : config.models) {
    for (std::size_t n : config.n_values) {
      for (std::size_t k : config.k_values) {
        for (std::uint64_t seed : config.seeds) {
          cells.push_back(CellSpec{model, n, k, config.dep, config.p_rewire, seed});
        }
      }
    }
  }

  std::vector<ExperimentResult> results(cells.size());
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = run_cell(cells[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = cells.size();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return results;
}

ExperimentConfig table2_config(std::size_t replications, std::uint64_t base_seed) {
  return ExperimentConfig{{std::begin(kAllModels), std::end(kAllModels)},
                          {20, 40, 60, 80, 100},
                          {2},
                          3,
                          0.1,
                          replication_seeds(base_seed, replications)};
}

ExperimentConfig fig1_config(std::size_t replications, std::uint64_t base_seed) {
  return ExperimentConfig{{std::begin(kAllModels), std::end(kAllModels)},
                          {20, 30, 40, 50, 60, 70, 80, 90, 100},
                          {2},
                          3,
                          0.1,
                          replication_seeds(base_seed, replications)};
}

ExperimentConfig fig2_config(std::size_t replications, std::uint64_t base_seed) {
  return ExperimentConfig{{std::begin(kAllModels), std::end(kAllModels)},
                          {60},
                          {2, 4, 6, 8, 10, 12, 14, 16},
                          3,
                          0.1,
                          replication_seeds(base_seed, replications)};
}

ExperimentConfig fig3to6_config(std::size_t replications, std::uint64_t base_seed) {
  return ExperimentConfig{{std::begin(kAllModels), std::end(kAllModels)},
                          {100},
                          {2, 4, 6, 8, 10, 12, 14, 16, 18, 20},
                          3,
                          0.1,
                          replication_seeds(base_seed, replications)};
}

SummaryStat describe(const std::vector<double>& values) {
  SummaryStat stat;
  stat.count = values.size();
  if (values.empty()) {
    stat.mean = std::nan("");
    stat.stddev = std::nan("");
    return stat;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  stat.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) {
      sq += (v - stat.mean) * (v - stat.mean);
    }
    stat.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return stat;
}

std::vector<AggregateRow> summarize(const std::vector<ExperimentResult>& results,
                                    const std::vector<GroupField>& group_by) {
  if (results.empty()) {
    throw InvalidParameter("cannot summarize an empty result set");
  }
  auto has = [&](GroupField f) { return std::find(group_by.begin(), group_by.end(), f) != group_by.end(); };
  auto key_of = [&](const ExperimentResult& r) {
    AggregateRow row;
    if (has(GroupField::Model)) row.model = r.model;
    if (has(GroupField::N)) row.n = r.n;
    if (has(GroupField::K)) row.k = r.k;
    if (has(GroupField::Dep)) row.dep = r.dep;
    if (has(GroupField::PRewire)) row.p_rewire = r.p_rewire;
    if (has(GroupField::Seed)) row.seed = r.seed;
    return row;
  };
  auto same_key = [](const AggregateRow& a, const AggregateRow& b) {
    return a.model == b.model && a.n == b.n && a.k == b.k && a.dep == b.dep && a.p_rewire == b.p_rewire &&
           a.seed == b.seed;
  };

  std::vector<AggregateRow> rows;
  std::vector<std::vector<const ExperimentResult*>> members;
  for (const ExperimentResult& r : results) {
    AggregateRow key = key_of(r);
    auto it = std::find_if(rows.begin(), rows.end(), [&](const AggregateRow& row) { return same_key(row, key); });
    if (it == rows.end()) {
      rows.push_back(key);
      members.emplace_back();
      it = rows.end() - 1;
    }
    members[static_cast<std::size_t>(it - rows.begin())].push_back(&r);
  }

  for (std::size_t g = 0; g < rows.size(); ++g) {
    std::vector<double> utility;
    std::vector<double> apl;
    std::vector<double> conn;
    std::vector<double> matched;
    for (const ExperimentResult* r : members[g]) {
      utility.push_back(r->average_utility);
      if (r->apl) {
        apl.push_back(*r->apl);
      }
      conn.push_back(r->connectivity);
      matched.push_back(static_cast<double>(r->matched_pairs));
    }
    rows[g].rows = members[g].size();
    rows[g].average_utility = describe(utility);
    rows[g].apl = describe(apl);
    rows[g].connectivity = describe(conn);
    rows[g].matched_pairs = describe(matched);
  }
  return rows;
}

void write_results_csv(std::ostream& out, const std::vector<ExperimentResult>& results) {
  out << "model,n,k,dep,p_rewire,seed,average_utility,apl,connectivity,matched_pairs\n";
  for (const ExperimentResult& r : results) {
    out << model_name(r.model) << ',' << r.n << ',' << r.k << ',' << r.dep << ',' << format_param(r.p_rewire) << ','
        << r.seed << ',' << format_real(r.average_utility) << ',' << (r.apl ? format_real(*r.apl) : std::string())
        << ',' << format_real(r.connectivity) << ',' << r.matched_pairs << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "model,n,k,dep,p_rewire,seed,rows,"
         "average_utility_mean,average_utility_sd,apl_mean,apl_sd,"
         "connectivity_mean,connectivity_sd,matched_pairs_mean,matched_pairs_sd\n";
  auto stat = [](const SummaryStat& s) {
    if (s.count == 0) {
      return std::string(",");
    }
    return format_real(s.mean) + ',' + format_real(s.stddev);
  };
  for (const AggregateRow& row : rows) {
    out << (row.model ? std::string(model_name(*row.model)) : "") << ','
        << (row.n ? std::to_string(*row.n) : "") << ',' << (row.k ? std::to_string(*row.k) : "") << ','
        << (row.dep ? std::to_string(*row.dep) : "") << ',' << (row.p_rewire ? format_param(*row.p_rewire) : "")
        << ',' << (row.seed ? std::to_string(*row.seed) : "") << ',' << row.rows << ',' << stat(row.average_utility)
        << ',' << stat(row.apl) << ',' << stat(row.connectivity) << ',' << stat(row.matched_pairs) << '\n';
  }
}

}  // namespace netmatch
