#include "vqn/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "vqn/topology.hpp"

namespace vqn {

const char* to_string(MetricsMode mode) {
  return mode == MetricsMode::single_source_via_transitivity
             ? "single-source-via-transitivity"
             : "all-sources";
}

std::vector<std::int64_t> bfs_distances(const Graph& g, std::uint32_t src) {
  if (src >= g.vertex_count())
    throw std::out_of_range("bfs_distances: source vertex out of range");
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  std::deque<std::uint32_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : g.neighbors_of(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

namespace {

struct SourceSummary {
  int eccentricity = 0;
  std::uint64_t distance_sum = 0;
};

SourceSummary summarize_source(const Graph& g, std::uint32_t src) {
  SourceSummary s;
  for (std::int64_t d : bfs_distances(g, src)) {
    if (d < 0) throw std::runtime_error("metrics: graph is disconnected");
    s.eccentricity = std::max<int>(s.eccentricity, static_cast<int>(d));
    s.distance_sum += static_cast<std::uint64_t>(d);
  }
  return s;
}

std::string decimal_six_places(std::uint64_t num, std::uint64_t den) {
  // round half up, exactly, in integer arithmetic
  using u128 = unsigned __int128;
  const u128 scaled =
      (u128{num} * 1'000'000 * 2 + den) / (u128{den} * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / 1'000'000);
  const auto frac = static_cast<std::uint64_t>(scaled % 1'000'000);
  std::string f = std::to_string(frac);
  return std::to_string(whole) + "." + std::string(6 - f.size(), '0') + f;
}

}  // namespace

MetricsReport metrics(const Graph& g, MetricsMode mode) {
  MetricsReport report;
  report.mode = mode;
  report.n = g.dim() >= 0 ? g.dim() : static_cast<int>(g.vertex_count());
  const std::uint64_t count = g.vertex_count();
  if (count <= 1) {
    report.eccentricity_profile[0] = count;
    return report;
  }

  std::uint64_t num = 0;
  if (mode == MetricsMode::single_source_via_transitivity) {
    if (g.family() == GraphFamily::generic)
      throw std::invalid_argument(
          "metrics: single-source mode requires a vertex-transitive family");
    const SourceSummary s = summarize_source(g, 0);
    report.diameter = s.eccentricity;
    report.eccentricity_profile[s.eccentricity] = count;
    num = s.distance_sum * count;
  } else {
    for (std::uint32_t v = 0; v < count; ++v) {
      const SourceSummary s = summarize_source(g, v);
      report.diameter = std::max(report.diameter, s.eccentricity);
      ++report.eccentricity_profile[s.eccentricity];
      num += s.distance_sum;
    }
  }
  std::uint64_t den = count * (count - 1);
  const std::uint64_t divisor = std::gcd(num, den);
  report.average_distance_num = num / divisor;
  report.average_distance_den = den / divisor;
  report.average_distance_decimal =
      decimal_six_places(report.average_distance_num,
                         report.average_distance_den);
  return report;
}

std::string MetricsReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["diameter"] = diameter;
  j["average_distance_num"] = average_distance_num;
  j["average_distance_den"] = average_distance_den;
  j["average_distance_decimal"] = average_distance_decimal;
  j["mode"] = to_string(mode);
  nlohmann::json profile = nlohmann::json::object();
  for (const auto& [ecc, vertices] : eccentricity_profile)
    profile[std::to_string(ecc)] = vertices;
  j["eccentricity_profile"] = profile;
  return j.dump();
}

std::uint64_t cycles_through_edge(const Graph& g, std::uint32_t u,
                                  std::uint32_t v, int length,
                                  int length_cap) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("cycles_through_edge: {u, v} is not an edge");
  if (length < 3 || length > length_cap)
    throw std::out_of_range("cycles_through_edge: length " +
                            std::to_string(length) + " outside 3.." +
                            std::to_string(length_cap));
  // Each simple cycle through {u, v} decomposes uniquely into the edge plus
  // a simple u-v path of length-1 edges, so counting those paths counts
  // cycles once each.
  std::uint64_t count = 0;
  std::vector<char> visited(g.vertex_count(), 0);
  visited[u] = 1;
  const auto dfs = [&](auto&& self, std::uint32_t at, int remaining) -> void {
    for (std::uint32_t next : g.neighbors_of(at)) {
      if (next == v) {
        if (remaining == 1) ++count;
        continue;
      }
      if (remaining > 1 && !visited[next]) {
        visited[next] = 1;
        self(self, next, remaining - 1);
        visited[next] = 0;
      }
    }
  };
  dfs(dfs, u, length - 1);
  return count;
}

EdgeCycleProfile profile_edge_cycles(const Graph& g, Label x, Label y,
                                     int length_cap) {
  EdgeCycleProfile profile;
  profile.edge = {x, y};
  const auto u = static_cast<std::uint32_t>(x.value);
  const auto v = static_cast<std::uint32_t>(y.value);
  for (int length = 3; length <= length_cap; ++length)
    profile.counts[length] = cycles_through_edge(g, u, v, length, length_cap);
  return profile;
}

std::string EdgeTransitivityWitness::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["found"] = found;
  if (found) {
    j["edge_a"] = {edge_a.first.to_string(), edge_a.second.to_string()};
    j["edge_b"] = {edge_b.first.to_string(), edge_b.second.to_string()};
    j["cycle_length"] = cycle_length;
    j["count_a"] = count_a;
    j["count_b"] = count_b;
  }
  return j.dump();
}

EdgeTransitivityWitness refute_edge_transitivity(int n, int length_cap,
                                                 int size_cap) {
  EdgeTransitivityWitness witness;
  witness.n = n;
  const Graph g = build_recursive(n, size_cap);

  const auto report = [&](Label a1, Label a2, Label b1, Label b2, int length,
                          std::uint64_t ca, std::uint64_t cb) {
    witness.found = true;
    witness.edge_a = {a1, a2};
    witness.edge_b = {b1, b2};
    witness.cycle_length = length;
    witness.count_a = ca;
    witness.count_b = cb;
  };

  if (n == 4 && length_cap >= 5) {
    const Label x = Label::parse("0101");
    const Label y = Label::parse("1101");
    const Label z = Label::parse("0001");
    const std::uint64_t xz = cycles_through_edge(
        g, static_cast<std::uint32_t>(x.value),
        static_cast<std::uint32_t>(z.value), 5, length_cap);
    const std::uint64_t xy = cycles_through_edge(
        g, static_cast<std::uint32_t>(x.value),
        static_cast<std::uint32_t>(y.value), 5, length_cap);
    if (xz != xy) {
      report(x, z, x, y, 5, xz, xy);
      return witness;
    }
  }

  const auto edges = g.edges();
  for (int length = 3; length <= length_cap; ++length) {
    std::vector<std::uint64_t> counts(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      counts[i] = cycles_through_edge(g, edges[i].first, edges[i].second,
                                      length, length_cap);
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (counts[i] != counts[0]) {
        report(g.label_of(edges[0].first), g.label_of(edges[0].second),
               g.label_of(edges[i].first), g.label_of(edges[i].second),
               length, counts[0], counts[i]);
        return witness;
      }
    }
  }
  return witness;
}

std::optional<std::vector<std::uint32_t>> isomorphic_small(const Graph& g,
                                                           const Graph& h) {
  if (g.vertex_count() > kSmallGraphCap || h.vertex_count() > kSmallGraphCap)
    throw std::length_error("isomorphic_small: graphs must have at most " +
                            std::to_string(kSmallGraphCap) + " vertices");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  const std::uint32_t count = g.vertex_count();

  std::vector<std::uint32_t> degrees_g(count), degrees_h(count);
  for (std::uint32_t v = 0; v < count; ++v) {
    degrees_g[v] = g.degree(v);
    degrees_h[v] = h.degree(v);
  }
  {
    auto a = degrees_g, b = degrees_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::uint32_t> mapping(count, UINT32_MAX);
  std::vector<bool> used(count, false);
  const auto search = [&](auto&& self, std::uint32_t v) -> bool {
    if (v == count) return true;
    for (std::uint32_t cand = 0; cand < count; ++cand) {
      if (used[cand] || degrees_h[cand] != degrees_g[v]) continue;
      bool consistent = true;
      for (std::uint32_t prev = 0; prev < v; ++prev) {
        if (g.has_edge(v, prev) != h.has_edge(cand, mapping[prev])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      mapping[v] = cand;
      used[cand] = true;
      if (self(self, v + 1)) return true;
      used[cand] = false;
    }
    mapping[v] = UINT32_MAX;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return mapping;
}

}  // namespace vqn
