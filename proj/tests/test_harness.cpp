#include <doctest.h>

#include <sstream>

#include "netmatch/errors.hpp"
#include "netmatch/harness.hpp"
#include "netmatch/serialize.hpp"

using namespace netmatch;

namespace {

std::string csv_of(const std::vector<ExperimentResult>& results) {
  std::ostringstream out;
  write_results_csv(out, results);
  return out.str();
}

}  // namespace

TEST_CASE("model names") {
  CHECK(parse_model("ba") == Model::BA);
  CHECK(parse_model("Ncn") == Model::NCN);
  CHECK(model_name(Model::WS) == "WS");
  CHECK_THROWS_AS(parse_model("gnp"), InvalidParameter);
}

TEST_CASE("degree-matched model graphs") {
  RandomSource rng(3);
  CHECK(generate_model_graph(Model::NCN, 20, 4, 0.1, rng).edge_count() == 40);
  CHECK(generate_model_graph(Model::ER, 20, 4, 0.1, rng).edge_count() == 40);
  CHECK(generate_model_graph(Model::WS, 20, 4, 0.1, rng).edge_count() == 40);
  // BA(m_attach=2): 3 + 2 * 17
  CHECK(generate_model_graph(Model::BA, 20, 4, 0.1, rng).edge_count() == 37);
}

TEST_CASE("cell validation") {
  CHECK_THROWS_AS(validate_cell({Model::NCN, 5, 2, 3, 0.1, 0}), InvalidParameter);
  CHECK_THROWS_AS(validate_cell({Model::NCN, 2, 2, 3, 0.1, 0}), InvalidParameter);
  CHECK_THROWS_AS(validate_cell({Model::NCN, 10, 3, 3, 0.1, 0}), InvalidParameter);
  CHECK_THROWS_AS(validate_cell({Model::WS, 10, 10, 3, 0.1, 0}), InvalidParameter);
  CHECK_THROWS_AS(validate_cell({Model::ER, 10, 2, 0, 0.1, 0}), InvalidParameter);
  CHECK_THROWS_AS(validate_cell({Model::WS, 10, 2, 3, 1.5, 0}), InvalidParameter);
  CHECK_NOTHROW(validate_cell({Model::BA, 10, 8, 3, 0.1, 0}));
  CHECK_THROWS_AS(run_cell({Model::BA, 10, 20, 3, 0.1, 0}), InvalidParameter);
}

TEST_CASE("run_cell on C4 reaches the complete-information outcome") {
  const CellRun run = run_cell_detailed({Model::NCN, 4, 2, 3, 0.1, 17});
  CHECK(run.result.matched_pairs == 2);
  CHECK(run.matching == classical_gs(run.market));
  CHECK(run.result.connectivity == doctest::Approx(1.0));
  CHECK(*run.result.apl == doctest::Approx(8.0 / 6.0));
}

TEST_CASE("run_cell is deterministic and shares the market across models") {
  const CellSpec spec{Model::WS, 40, 4, 3, 0.1, 99};
  const ExperimentResult a = run_cell(spec);
  const ExperimentResult b = run_cell(spec);
  CHECK(a.average_utility == b.average_utility);
  CHECK(a.apl == b.apl);
  CHECK(a.connectivity == b.connectivity);
  CHECK(a.matched_pairs == b.matched_pairs);

  const CellRun ncn = run_cell_detailed({Model::NCN, 40, 4, 3, 0.1, 99});
  for (Model model : {Model::ER, Model::WS, Model::BA}) {
    const CellRun other = run_cell_detailed({model, 40, 4, 3, 0.1, 99});
    CHECK(other.market == ncn.market);
    CHECK(other.result.model == model);
    CHECK(is_stable(other.market, other.circle, other.matching).stable);
  }
  CHECK_FALSE(run_cell_detailed({Model::ER, 40, 4, 3, 0.1, 99}).graph ==
              run_cell_detailed({Model::BA, 40, 4, 3, 0.1, 99}).graph);
  CHECK(market_seed(1) != graph_seed(1, Model::NCN));
  CHECK(graph_seed(1, Model::ER) != graph_seed(1, Model::WS));
}

TEST_CASE("sweep cardinality and ordering") {
  ExperimentConfig one{{Model::BA}, {20}, {2}, 3, 0.1, {5}};
  CHECK(sweep(one).size() == 1);

  const ExperimentConfig table2 = table2_config(3, 1);
  const auto rows = sweep(table2, 1);
  REQUIRE(rows.size() == 20 * 3);
  CHECK(rows.front().model == Model::NCN);
  CHECK(rows.front().n == 20);
  CHECK(rows[1].seed == 2);
  CHECK(rows.back().model == Model::BA);
  CHECK(rows.back().n == 100);

  // Thread count does not change the output.
  CHECK(csv_of(sweep(table2, 4)) == csv_of(rows));

  CHECK_THROWS_AS(sweep(ExperimentConfig{}), InvalidParameter);
  ExperimentConfig bad = one;
  bad.n_values = {7};
  CHECK_THROWS_AS(sweep(bad), InvalidParameter);
}

TEST_CASE("sweep output is byte-identical across runs") {
  const ExperimentConfig config = fig2_config(2, 11);
  CHECK(csv_of(sweep(config)) == csv_of(sweep(config)));
}

TEST_CASE("results stay in range") {
  for (const ExperimentResult& r : sweep(fig1_config(2, 3))) {
    REQUIRE(r.average_utility >= 0.0);
    REQUIRE(r.average_utility <= 10.0);
    REQUIRE(r.connectivity >= 0.0);
    REQUIRE(r.connectivity <= 1.0);
    REQUIRE(r.matched_pairs <= r.n / 2);
  }
}

TEST_CASE("summarize") {
  ExperimentResult r;
  r.model = Model::ER;
  r.n = 20;
  r.k = 2;
  r.dep = 3;
  r.average_utility = 6.5;
  r.apl = 3.0;
  r.connectivity = 0.4;
  r.matched_pairs = 8;

  const auto single = summarize({r}, {GroupField::Model});
  REQUIRE(single.size() == 1);
  CHECK(single[0].average_utility.mean == 6.5);
  CHECK(single[0].average_utility.stddev == 0.0);
  CHECK(single[0].model == Model::ER);
  CHECK_FALSE(single[0].n.has_value());

  const auto twin = summarize({r, r}, {GroupField::Model});
  CHECK(twin[0].rows == 2);
  CHECK(twin[0].average_utility.stddev == 0.0);

  ExperimentResult s = r;
  s.average_utility = 8.5;
  s.apl.reset();
  const auto mixed = summarize({r, s}, {GroupField::Model, GroupField::N});
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].average_utility.mean == doctest::Approx(7.5));
  CHECK(mixed[0].average_utility.stddev == doctest::Approx(std::sqrt(2.0)));
  CHECK(mixed[0].apl.count == 1);

  CHECK_THROWS_AS(summarize({}, {GroupField::Model}), InvalidParameter);

  const auto table = summarize(sweep(table2_config(2, 1)), {GroupField::Model, GroupField::N});
  CHECK(table.size() == 20);
}

TEST_CASE("csv schema") {
  ExperimentResult r;
  r.model = Model::WS;
  r.n = 20;
  r.k = 2;
  r.dep = 3;
  r.p_rewire = 0.1;
  r.seed = 42;
  r.average_utility = 5.25;
  r.connectivity = 0.5;
  r.matched_pairs = 7;
  r.runtime_ms = 123.0;
  CHECK(csv_of({r}) ==
        "model,n,k,dep,p_rewire,seed,average_utility,apl,connectivity,matched_pairs\n"
        "WS,20,2,3,0.1,42,5.250000,,0.500000,7\n");
  r.apl = 2.5;
  CHECK(csv_of({r}).find(",2.500000,") != std::string::npos);
}

TEST_CASE("json serialization") {
  const CellRun run = run_cell_detailed({Model::BA, 20, 2, 3, 0.1, 4});

  const auto doc = matching_to_json(run.market, run.circle, run.matching);
  CHECK(doc.at("pairs").size() == run.matching.size());
  CHECK(doc.at("unmatched_women").size() + doc.at("pairs").size() == 10);
  CHECK(doc.at("unmatched_men").size() + doc.at("pairs").size() == 10);
  CHECK(doc.at("average_utility").get<double>() == doctest::Approx(run.result.average_utility));
  for (const auto& p : doc.at("pairs")) {
    CHECK(p.at("distance").get<unsigned>() <= 3);
    CHECK(p.contains("woman"));
    CHECK(p.contains("man"));
    CHECK(p.contains("pair_utility"));
  }

  const Market replay = market_from_json(nlohmann::json::parse(market_to_json(run.market).dump()));
  CHECK(replay == run.market);
  CHECK_THROWS_AS(market_from_json(nlohmann::json{{"sides", {"W", "X"}}, {"preferences", {{1}, {0}}}}),
                  InvalidParameter);
  CHECK_THROWS_AS(market_from_json(nlohmann::json{{"sides", {"W", "M"}}}), InvalidParameter);

  const auto report = to_json(topology_report(run.graph, run.circle.distances(), 3));
  for (const char* key : {"n", "m", "average_degree", "degree_histogram", "apl", "reachable_pairs", "connectivity",
                          "dep"}) {
    CHECK(report.contains(key));
  }
  CHECK(report.at("m").get<std::size_t>() == 19);

  const auto row = to_json(run.result);
  CHECK(row.at("model") == "BA");
  CHECK(row.contains("runtime_ms"));
}

TEST_CASE("property: market json round trip") {
  RandomSource rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    const Market m = build_market(2 * (1 + rng.uniform_index(20)), rng);
    CHECK(market_from_json(market_to_json(m)) == m);
  }
}
