#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vqn/graph.hpp"
#include "vqn/label.hpp"
#include "vqn/topology.hpp"

namespace vqn {

inline constexpr int kDefaultCycleLengthCap = 8;
inline constexpr std::uint32_t kSmallGraphCap = 16;

// Hop distances from src; -1 marks unreachable vertices.
std::vector<std::int64_t> bfs_distances(const Graph& g, std::uint32_t src);

enum class MetricsMode { single_source_via_transitivity, all_sources };

const char* to_string(MetricsMode mode);

struct MetricsReport {
  int n = 0;  // dimension for labeled families, vertex count otherwise
  int diameter = 0;
  // Average distance over ordered vertex pairs (u, v), u != v, as a reduced
  // exact rational plus a 6-place decimal rendering.
  std::uint64_t average_distance_num = 0;
  std::uint64_t average_distance_den = 1;
  std::string average_distance_decimal = "0.000000";
  std::map<int, std::uint64_t> eccentricity_profile;
  MetricsMode mode = MetricsMode::all_sources;

  bool eccentricities_uniform() const {
    return eccentricity_profile.size() <= 1;
  }
  std::string to_json() const;
};

// Single-source mode runs one BFS from vertex 0 and extrapolates; it is only
// valid for vertex-transitive families and rejects generic graphs.
MetricsReport metrics(const Graph& g, MetricsMode mode);

// Number of distinct simple cycles (as edge sets) of length exactly `length`
// containing the edge {u, v}.
std::uint64_t cycles_through_edge(const Graph& g, std::uint32_t u,
                                  std::uint32_t v, int length,
                                  int length_cap = kDefaultCycleLengthCap);

struct EdgeCycleProfile {
  std::pair<Label, Label> edge;
  std::map<int, std::uint64_t> counts;  // cycle length -> count

  friend bool operator==(const EdgeCycleProfile&,
                         const EdgeCycleProfile&) = default;
};

EdgeCycleProfile profile_edge_cycles(const Graph& g, Label x, Label y,
                                     int length_cap = kDefaultCycleLengthCap);

struct EdgeTransitivityWitness {
  int n = 0;
  bool found = false;
  std::pair<Label, Label> edge_a;
  std::pair<Label, Label> edge_b;
  int cycle_length = 0;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;

  std::string to_json() const;
};

// Searches VQ_n for two edges whose cycle counts differ at some length up to
// the cap; a found witness proves VQ_n is not edge-transitive. For n = 4 the
// known witness pair around vertex 0101 is checked first.
EdgeTransitivityWitness refute_edge_transitivity(
    int n, int length_cap = kDefaultCycleLengthCap,
    int size_cap = kDefaultSizeCap);

// Backtracking isomorphism search for graphs of at most kSmallGraphCap
// vertices; returns a g-to-h vertex mapping preserving adjacency both ways.
std::optional<std::vector<std::uint32_t>> isomorphic_small(const Graph& g,
                                                           const Graph& h);

}  // namespace vqn
