// Brute-force oracles used only by the test suites. They deliberately take
// routes independent of the library implementations they cross-check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "vqn/graph.hpp"

namespace vqn::testing {

// Every adjacency-preserving permutation of g's vertices, found by filtering
// all |V|! candidates. Feasible up to 8 vertices.
inline std::vector<std::vector<std::uint32_t>> brute_all_automorphisms(
    const Graph& g) {
  const std::uint32_t count = g.vertex_count();
  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<std::uint32_t>> found;
  do {
    bool ok = true;
    for (std::uint32_t u = 0; u < count && ok; ++u)
      for (std::uint32_t v = u + 1; v < count && ok; ++v)
        if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

// Number of simple cycles of length exactly `length` that contain the edge
// {a, b}, counted by enumerating every cycle canonically (smallest vertex
// first, direction fixed by the smaller second endpoint) and testing edge
// membership.
inline std::uint64_t brute_cycles_through_edge(const Graph& g, std::uint32_t a,
                                               std::uint32_t b, int length) {
  std::uint64_t count = 0;
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint32_t> path;
  std::vector<char> in_path(n, 0);

  const auto contains_edge = [&](const std::vector<std::uint32_t>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t u = cycle[i];
      const std::uint32_t v = cycle[(i + 1) % cycle.size()];
      if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
  };

  const auto extend = [&](auto&& self, std::uint32_t start) -> void {
    const std::uint32_t at = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.has_edge(at, start) && path[1] < path.back() &&
          contains_edge(path))
        ++count;
      return;
    }
    for (std::uint32_t next : g.neighbors_of(at)) {
      if (next <= start || in_path[next]) continue;
      path.push_back(next);
      in_path[next] = 1;
      self(self, start);
      in_path[next] = 0;
      path.pop_back();
    }
  };

  for (std::uint32_t start = 0; start < n; ++start) {
    path.assign(1, start);
    std::fill(in_path.begin(), in_path.end(), 0);
    in_path[start] = 1;
    extend(extend, start);
  }
  return count;
}

// All-pairs distances by Floyd-Warshall; -1 when unreachable.
inline std::vector<std::vector<std::int64_t>> floyd_warshall(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  constexpr std::int64_t kInf = INT64_MAX / 4;
  std::vector<std::vector<std::int64_t>> dist(
      n, std::vector<std::int64_t>(n, kInf));
  for (std::uint32_t v = 0; v < n; ++v) {
    dist[v][v] = 0;
    for (std::uint32_t w : g.neighbors_of(v)) dist[v][w] = 1;
  }
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  for (auto& row : dist)
    for (auto& d : row)
      if (d >= kInf) d = -1;
  return dist;
}

}  // namespace vqn::testing
