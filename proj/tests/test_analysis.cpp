#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vqn/analysis.hpp"
#include "vqn/automorphism.hpp"
#include "vqn/topology.hpp"

using namespace vqn;

namespace {

Label L(const char* text) { return Label::parse(text); }

}  // namespace

TEST_CASE("bfs distances") {
  const Graph vq3 = build_recursive(3);
  const auto dist = bfs_distances(vq3, 0b000);
  CHECK(dist[0b000] == 0);
  CHECK(dist[0b111] == 2);  // via 010

  const auto q4 = bfs_distances(build_hypercube(4), 0b0000);
  CHECK(q4[0b1111] == 4);

  CHECK_THROWS_AS(bfs_distances(vq3, 8), std::out_of_range);
}

TEST_CASE("bfs agrees with a Floyd-Warshall oracle") {
  for (int n = 0; n <= 4; ++n) {
    const Graph g = build_recursive(n);
    const auto oracle = testing::floyd_warshall(g);
    for (std::uint32_t src = 0; src < g.vertex_count(); ++src)
      REQUIRE(bfs_distances(g, src) == oracle[src]);
  }
}

TEST_CASE("metrics on the small varietal hypercubes") {
  const MetricsReport vq3 = metrics(build_recursive(3),
                                    MetricsMode::all_sources);
  CHECK(vq3.diameter == 2);
  CHECK(vq3.average_distance_num == 11);
  CHECK(vq3.average_distance_den == 7);
  CHECK(vq3.average_distance_decimal == "1.571429");
  CHECK(vq3.eccentricity_profile == std::map<int, std::uint64_t>{{2, 8}});

  const MetricsReport q3 =
      metrics(build_hypercube(3), MetricsMode::all_sources);
  CHECK(q3.diameter == 3);
  CHECK(q3.average_distance_num == 12);
  CHECK(q3.average_distance_den == 7);
}

TEST_CASE("diameters of the varietal family stay below the dimension") {
  const std::vector<int> expected = {0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7};
  for (int n = 0; n <= 10; ++n) {
    const MetricsReport report =
        metrics(build_recursive(n),
                MetricsMode::single_source_via_transitivity);
    CHECK(report.diameter == expected[static_cast<std::size_t>(n)]);
    if (n >= 3) CHECK(report.diameter < n);
  }
}

TEST_CASE("single-source and all-sources modes agree on VQ_n") {
  for (int n = 0; n <= 8; ++n) {
    const Graph g = build_recursive(n);
    const MetricsReport fast =
        metrics(g, MetricsMode::single_source_via_transitivity);
    const MetricsReport slow = metrics(g, MetricsMode::all_sources);
    REQUIRE(fast.diameter == slow.diameter);
    REQUIRE(fast.average_distance_num == slow.average_distance_num);
    REQUIRE(fast.average_distance_den == slow.average_distance_den);
    REQUIRE(slow.eccentricities_uniform());
    REQUIRE(fast.eccentricity_profile == slow.eccentricity_profile);
  }
}

TEST_CASE("single-source mode rejects generic graphs") {
  const Graph path(GraphFamily::generic, -1, {{1}, {0, 2}, {1}});
  CHECK_THROWS_AS(metrics(path, MetricsMode::single_source_via_transitivity),
                  std::invalid_argument);
  const MetricsReport report = metrics(path, MetricsMode::all_sources);
  CHECK(report.diameter == 2);
  CHECK_FALSE(report.eccentricities_uniform());
}

TEST_CASE("metrics handles degenerate and disconnected graphs") {
  const MetricsReport single = metrics(build_recursive(0),
                                       MetricsMode::all_sources);
  CHECK(single.diameter == 0);
  CHECK(single.average_distance_num == 0);
  CHECK(single.average_distance_decimal == "0.000000");

  const Graph two_islands(GraphFamily::generic, -1, {{1}, {0}, {3}, {2}});
  CHECK_THROWS_AS(metrics(two_islands, MetricsMode::all_sources),
                  std::runtime_error);
}

TEST_CASE("metrics serializes with the pinned field names") {
  const std::string json =
      metrics(build_recursive(3), MetricsMode::all_sources).to_json();
  CHECK(json ==
        "{\"average_distance_decimal\":\"1.571429\","
        "\"average_distance_den\":7,\"average_distance_num\":11,"
        "\"diameter\":2,\"eccentricity_profile\":{\"2\":8},"
        "\"mode\":\"all-sources\",\"n\":3}");
}

TEST_CASE("cycle counts through edges") {
  const Graph vq2 = build_recursive(2);
  CHECK(cycles_through_edge(vq2, 0b00, 0b01, 4) == 1);
  CHECK(cycles_through_edge(vq2, 0b00, 0b01, 3) == 0);

  const Graph vq4 = build_recursive(4);
  CHECK(cycles_through_edge(vq4, L("0101").value, L("1101").value, 5) == 0);
  CHECK(cycles_through_edge(vq4, L("0101").value, L("0001").value, 5) == 4);

  CHECK_THROWS_AS(cycles_through_edge(vq2, 0b00, 0b11, 4),
                  std::invalid_argument);  // not an edge
  CHECK_THROWS_AS(cycles_through_edge(vq2, 0b00, 0b01, 2), std::out_of_range);
  CHECK_THROWS_AS(cycles_through_edge(vq2, 0b00, 0b01, 9), std::out_of_range);
  CHECK(cycles_through_edge(vq2, 0b00, 0b01, 9, 12) == 0);  // raised cap
}

TEST_CASE("cycle counts match the whole-cycle enumeration oracle") {
  for (int n : {2, 3, 4}) {
    const Graph g = build_recursive(n);
    for (const auto& [u, v] : g.edges())
      for (int length = 3; length <= 6; ++length)
        REQUIRE(cycles_through_edge(g, u, v, length) ==
                testing::brute_cycles_through_edge(g, u, v, length));
  }
}

TEST_CASE("cycle counts are symmetric in the edge endpoints") {
  const Graph g = build_recursive(4);
  for (const auto& [u, v] : g.edges())
    for (int length = 3; length <= 7; ++length)
      REQUIRE(cycles_through_edge(g, u, v, length) ==
              cycles_through_edge(g, v, u, length));
}

TEST_CASE("cycle profiles are invariant under automorphisms") {
  for (int n : {3, 4, 5}) {
    const Graph g = build_recursive(n);
    const Label zero(0, n);
    for (std::uint64_t t : {std::uint64_t{1}, Label::mask(n) / 2,
                            Label::mask(n)}) {
      const Automorphism sigma = transport(zero, Label(t, n));
      REQUIRE(is_automorphism(sigma, g).ok);
      for (const auto& [u, v] : g.edges()) {
        const Label iu = sigma.apply(Label(u, n));
        const Label iv = sigma.apply(Label(v, n));
        const auto before = profile_edge_cycles(g, Label(u, n), Label(v, n), 6);
        const auto after = profile_edge_cycles(g, iu, iv, 6);
        REQUIRE(before.counts == after.counts);
      }
    }
  }
}

TEST_CASE("edge-transitivity refutation") {
  const EdgeTransitivityWitness w4 = refute_edge_transitivity(4);
  REQUIRE(w4.found);
  CHECK(w4.edge_a == std::pair{L("0101"), L("0001")});
  CHECK(w4.edge_b == std::pair{L("0101"), L("1101")});
  CHECK(w4.cycle_length == 5);
  CHECK(w4.count_a == 4);
  CHECK(w4.count_b == 0);

  // witness validity against independent recomputation
  const Graph g = build_recursive(4);
  CHECK(g.has_edge(L("0101").value, L("0001").value));
  CHECK(g.has_edge(L("0101").value, L("1101").value));
  CHECK(testing::brute_cycles_through_edge(g, L("0101").value,
                                           L("0001").value, 5) == w4.count_a);
  CHECK(testing::brute_cycles_through_edge(g, L("0101").value,
                                           L("1101").value, 5) == w4.count_b);

  const EdgeTransitivityWitness w3 = refute_edge_transitivity(3);
  REQUIRE(w3.found);
  CHECK(w3.edge_a == std::pair{L("000"), L("001")});
  CHECK(w3.edge_b == std::pair{L("000"), L("010")});
  CHECK(w3.cycle_length == 4);
  CHECK(w3.count_a == 2);
  CHECK(w3.count_b == 1);

  const EdgeTransitivityWitness w2 = refute_edge_transitivity(2);
  CHECK_FALSE(w2.found);
  CHECK(w2.to_json() == "{\"found\":false,\"n\":2}");

  const std::string json = w4.to_json();
  CHECK(json.find("\"cycle_length\":5") != std::string::npos);
  CHECK(json.find("\"count_a\":4") != std::string::npos);
}

TEST_CASE("small-graph isomorphism search") {
  const Graph vq3 = build_recursive(3);
  const Graph cayley = build_circulant(8, {1, 4, 7});
  const auto mapping = isomorphic_small(vq3, cayley);
  REQUIRE(mapping.has_value());
  // adjacency preserved both ways
  for (std::uint32_t u = 0; u < 8; ++u)
    for (std::uint32_t v = u + 1; v < 8; ++v)
      REQUIRE(vq3.has_edge(u, v) ==
              cayley.has_edge((*mapping)[u], (*mapping)[v]));

  CHECK(isomorphic_small(build_recursive(2), build_circulant(4, {1, 3}))
            .has_value());
  CHECK_FALSE(isomorphic_small(vq3, build_hypercube(3)).has_value());
  CHECK_FALSE(
      isomorphic_small(vq3, build_circulant(8, {1, 7})).has_value());
  CHECK_FALSE(
      isomorphic_small(build_recursive(2), build_recursive(3)).has_value());
  CHECK_THROWS_AS(isomorphic_small(build_recursive(5), build_recursive(5)),
                  std::length_error);
}
