#include <doctest.h>

#include <cmath>
#include <numeric>

#include "netmatch/errors.hpp"
#include "netmatch/netgen.hpp"
#include "netmatch/topology.hpp"
#include "oracles.hpp"

using namespace netmatch;
using netmatch::testing::kInf;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph star5() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }

}  // namespace

TEST_CASE("all_pairs_shortest on small graphs") {
  const DistanceMatrix full = all_pairs_shortest(k4());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(full(i, j) == (i == j ? 0u : 1u));

  CHECK(all_pairs_shortest(path3())(0, 2) == 2);

  const DistanceMatrix c6 = all_pairs_shortest(generate_ncn(6, 2));
  CHECK(c6(0, 3) == 3);
  CHECK(c6(0, 2) == 2);

  const DistanceMatrix empty = all_pairs_shortest(Graph(3));
  CHECK(empty(0, 0) == 0);
  CHECK_FALSE(empty.reachable(0, 1));
  CHECK(empty(1, 2) == DistanceMatrix::kUnreachable);
}

TEST_CASE("all_pairs_shortest matches the ring closed form") {
  for (std::size_t n : {7u, 20u, 33u}) {
    const DistanceMatrix dm = all_pairs_shortest(generate_ncn(n, 2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) REQUIRE(dm(i, j) == netmatch::testing::ring_distance(n, i, j));
  }
}

TEST_CASE("property: BFS distances equal matrix-power distances for n <= 12") {
  RandomSource rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng.uniform_index(12);
    const std::size_t m = rng.uniform_index(n * (n - 1) / 2 + 1);
    const Graph g = generate_er(n, m, rng);
    const DistanceMatrix dm = all_pairs_shortest(g);
    const auto ref = netmatch::testing::matrix_power_distances(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto expected = ref[i][j] == kInf ? DistanceMatrix::kUnreachable : ref[i][j];
        REQUIRE(dm(i, j) == expected);
      }
  }
}

TEST_CASE("property: distance matrix symmetry, edges and triangle inequality") {
  RandomSource rng(5150);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 4 + rng.uniform_index(36);
    Graph g;
    switch (trial % 4) {
      case 0: g = generate_ncn(n, 2 * (1 + rng.uniform_index((n - 1) / 2))); break;
      case 1: g = generate_er(n, rng.uniform_index(std::min(2 * n, n * (n - 1) / 2 + 1)), rng); break;
      case 2: g = generate_ws(n, 2, rng.uniform_real(), rng); break;
      default: g = generate_ba(n, 1 + rng.uniform_index(3), rng); break;
    }
    const DistanceMatrix dm = all_pairs_shortest(g);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        REQUIRE(dm(i, j) == dm(j, i));
        REQUIRE((dm(i, j) == 1) == g.has_edge(i, j));
        if (!dm.reachable(i, j)) continue;
        for (NodeId k = 0; k < n; ++k) {
          if (dm.reachable(j, k)) REQUIRE(dm(i, k) <= dm(i, j) + dm(j, k));
        }
      }
    }
  }
}

TEST_CASE("average degree") {
  CHECK(average_degree(generate_ncn(6, 2)) == doctest::Approx(2.0));
  CHECK(average_degree(generate_ncn(5, 4)) == doctest::Approx(4.0));
  RandomSource rng(4);
  CHECK(average_degree(generate_ba(100, 2, rng)) == doctest::Approx(3.94));
  CHECK_THROWS_AS(average_degree(Graph(0)), InvalidParameter);
}

TEST_CASE("degree distribution") {
  CHECK(degree_distribution(generate_ncn(6, 2)) == std::map<std::size_t, std::size_t>{{2, 6}});
  CHECK(degree_distribution(star5()) == std::map<std::size_t, std::size_t>{{1, 4}, {4, 1}});

  RandomSource rng(9);
  const auto hist = degree_distribution(generate_ba(200, 2, rng));
  std::size_t total = 0;
  for (const auto& [degree, count] : hist) total += count;
  CHECK(total == 200);
}

TEST_CASE("ba degree tail is heavier than er at equal size") {
  // BA(1000, m_attach=2) against ER(1000, M=1000) over 50 seed pairs.
  int ba_wins = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    RandomSource ba_rng(derive_seed(s, 1));
    RandomSource er_rng(derive_seed(s, 2));
    const auto ba = degree_distribution(generate_ba(1000, 2, ba_rng));
    const auto er = degree_distribution(generate_er(1000, 1000, er_rng));
    if (ba.rbegin()->first > er.rbegin()->first) ++ba_wins;
  }
  CHECK(ba_wins >= 45);
}

TEST_CASE("average path length") {
  const PathLengthStats full = average_path_length(all_pairs_shortest(k4()));
  REQUIRE(full.mean);
  CHECK(*full.mean == doctest::Approx(1.0));
  CHECK(full.reachable_pairs == 6);

  CHECK(*average_path_length(all_pairs_shortest(path3())).mean == doctest::Approx(4.0 / 3.0));

  // C20: sum_{d=1..9} 20 d + 10 * 10 = 1000 over 190 pairs.
  const double ring_sum = 20.0 * 45.0 + 100.0;
  CHECK(ring_sum == 1000.0);
  CHECK(*average_path_length(all_pairs_shortest(generate_ncn(20, 2))).mean == doctest::Approx(1000.0 / 190.0));

  const PathLengthStats none = average_path_length(all_pairs_shortest(Graph(4)));
  CHECK_FALSE(none.mean.has_value());
  CHECK(none.reachable_pairs == 0);

  // Two disjoint edges: only the two edge pairs are reachable.
  const PathLengthStats split = average_path_length(all_pairs_shortest(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(split.reachable_pairs == 2);
  CHECK(*split.mean == doctest::Approx(1.0));
}

TEST_CASE("connectivity") {
  CHECK(connectivity(all_pairs_shortest(k4()), 1) == doctest::Approx(1.0));
  const DistanceMatrix c6 = all_pairs_shortest(generate_ncn(6, 2));
  CHECK(connectivity(c6, 1) == doctest::Approx(0.4));
  CHECK(connectivity(c6, 2) == doctest::Approx(12.0 / 15.0));
  CHECK(connectivity(c6, 3) == doctest::Approx(1.0));
  CHECK(connectivity(all_pairs_shortest(Graph(5)), 4) == doctest::Approx(0.0));
  CHECK_THROWS_AS(connectivity(c6, 0), InvalidParameter);
}

TEST_CASE("property: connectivity is monotone in dep and hits 1 exactly at the diameter") {
  RandomSource rng(8080);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng.uniform_index(30);
    const Graph g = generate_er(n, rng.uniform_index(std::min(3 * n, n * (n - 1) / 2 + 1)), rng);
    const DistanceMatrix dm = all_pairs_shortest(g);
    double previous = 0.0;
    for (unsigned dep = 1; dep <= n; ++dep) {
      const double phi = connectivity(dm, dep);
      REQUIRE(phi >= previous);
      REQUIRE(phi <= 1.0);
      const bool full = is_connected(dm) && diameter(dm) <= dep;
      REQUIRE((phi == 1.0) == full);
      previous = phi;
    }
  }
}

TEST_CASE("diameter and connectedness") {
  const DistanceMatrix c7 = all_pairs_shortest(generate_ncn(7, 2));
  CHECK(diameter(c7) == 3);
  CHECK(is_connected(c7));
  const DistanceMatrix split = all_pairs_shortest(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(diameter(split) == 1);
  CHECK_FALSE(is_connected(split));
}

TEST_CASE("poisson connectivity predictor") {
  // e^-1 (1 + 1/2 + 1/6)
  const double expected = std::exp(-1.0) * (1.0 + 0.5 + 1.0 / 6.0);
  CHECK(expected == doctest::Approx(0.6131).epsilon(1e-4));
  CHECK(poisson_connectivity(1.0, 3) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(poisson_connectivity(1e-6, 1) == doctest::Approx(1e-6).epsilon(1e-6));

  // Frozen series values: the sum over l = 1..dep rises while
  // lambda^dep < dep!, so lambda=2 lies above lambda=1 at dep=3.
  CHECK(poisson_connectivity(2.0, 3) == doctest::Approx(netmatch::testing::poisson_series(2.0, 3)));
  CHECK(poisson_connectivity(2.0, 3) == doctest::Approx(0.7218).epsilon(1e-4));
  CHECK(poisson_connectivity(2.0, 3) > poisson_connectivity(1.0, 3));

  CHECK_THROWS_AS(poisson_connectivity(0.0, 3), InvalidParameter);
  CHECK_THROWS_AS(poisson_connectivity(-1.0, 3), InvalidParameter);
  CHECK_THROWS_AS(poisson_connectivity(1.0, 0), InvalidParameter);
}

TEST_CASE("property: poisson predictor agrees with direct evaluation and its monotonicity") {
  for (unsigned dep = 1; dep <= 6; ++dep) {
    const double turning = std::pow(std::tgamma(dep + 1.0), 1.0 / dep);
    for (double lambda = 0.25; lambda <= 8.0; lambda += 0.25) {
      const double value = poisson_connectivity(lambda, dep);
      REQUIRE(value == doctest::Approx(netmatch::testing::poisson_series(lambda, dep)).epsilon(1e-12));
      REQUIRE(poisson_connectivity(lambda, dep + 1) > value);
      if (lambda >= turning) {
        REQUIRE(poisson_connectivity(lambda + 0.25, dep) < value);
      } else if (lambda + 0.25 <= turning) {
        REQUIRE(poisson_connectivity(lambda + 0.25, dep) > value);
      }
    }
  }
}

TEST_CASE("topology report") {
  const Graph g = generate_ncn(6, 2);
  const TopologyReport r = topology_report(g, all_pairs_shortest(g), 1);
  CHECK(r.n == 6);
  CHECK(r.m == 6);
  CHECK(r.average_degree == doctest::Approx(2.0));
  CHECK(r.degree_histogram.at(2) == 6);
  CHECK(*r.apl == doctest::Approx(27.0 / 15.0));
  CHECK(r.reachable_pairs == 15);
  CHECK(r.connectivity == doctest::Approx(0.4));
  CHECK(r.dep == 1);
  CHECK_THROWS_AS(topology_report(g, all_pairs_shortest(Graph(3)), 1), InvalidParameter);
}
