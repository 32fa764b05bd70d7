#include "vqn/topology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace vqn {

const char* to_string(EdgeKind kind) {
  return kind == EdgeKind::normal ? "normal" : "crossing";
}

Label dimension_neighbor(Label x, int d) {
  if (d < 1 || d > x.dim)
    throw std::out_of_range("dimension " + std::to_string(d) +
                            " outside 1.." + std::to_string(x.dim));
  Label y = x.with_bit_flipped(d);
  if (d % 3 == 0 && x.bit(d - 1)) y = y.with_bit_flipped(d - 2);
  return y;
}

std::vector<Label> neighbors(Label x) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(x.dim));
  for (int d = 1; d <= x.dim; ++d) out.push_back(dimension_neighbor(x, d));
  return out;
}

std::optional<EdgeClass> classify_edge(Label x, Label y) {
  if (x.dim != y.dim)
    throw std::invalid_argument("classify_edge: dimension mismatch");
  if (x.value == y.value)
    throw std::invalid_argument("classify_edge: labels are identical");
  const std::uint64_t diff = x.value ^ y.value;
  const int d = std::bit_width(diff);  // highest differing position, 1-based
  const auto bit_at = [](int i) { return std::uint64_t{1} << (i - 1); };

  if (diff == bit_at(d)) {
    // Only bit d differs. At crossing dimensions the (1b,1b) patterns are
    // not joined, so bit d-1 must be 0 in both halves.
    if (d % 3 != 0 || !x.bit(d - 1)) return EdgeClass{d, EdgeKind::normal};
    return std::nullopt;
  }
  if (crossing_dimension(d) && diff == (bit_at(d) | bit_at(d - 2)) &&
      x.bit(d - 1))
    return EdgeClass{d, EdgeKind::crossing};
  return std::nullopt;
}

namespace {

void check_size_cap(int n, int size_cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be >= 0");
  if (n > size_cap)
    throw std::length_error(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the size cap " +
                            std::to_string(size_cap));
}

}  // namespace

Graph build_recursive(int n, int size_cap) {
  check_size_cap(n, size_cap, "build_recursive");
  std::vector<std::vector<std::uint32_t>> adj(1);
  for (int m = 1; m <= n; ++m) {
    const std::uint32_t half = std::uint32_t{1} << (m - 1);
    std::vector<std::vector<std::uint32_t>> next(std::size_t{2} * half);
    for (std::uint32_t v = 0; v < half; ++v) {
      next[v].reserve(adj[v].size() + 1);
      next[v + half].reserve(adj[v].size() + 1);
      for (std::uint32_t w : adj[v]) {
        next[v].push_back(w);
        next[v + half].push_back(w + half);
      }
    }
    if (m % 3 != 0) {
      for (std::uint32_t w = 0; w < half; ++w) {
        next[w].push_back(w + half);
        next[w + half].push_back(w);
      }
    } else {
      const std::uint64_t low = Label::mask(m - 3);
      for (std::uint32_t w = 0; w < half; ++w) {
        const unsigned pattern = (w >> (m - 3)) & 0b11u;
        for (const auto& [from, to] : kTransversalRule) {
          if (from != pattern) continue;
          const auto y = static_cast<std::uint32_t>(
              (w & low) | (static_cast<std::uint32_t>(to) << (m - 3)));
          next[w].push_back(half + y);
          next[half + y].push_back(w);
        }
      }
    }
    adj = std::move(next);
  }
  return Graph(GraphFamily::varietal, n, std::move(adj));
}

Graph build_hypercube(int n, int size_cap) {
  check_size_cap(n, size_cap, "build_hypercube");
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::vector<std::uint32_t>> adj(count);
  for (std::uint32_t v = 0; v < count; ++v) {
    adj[v].reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) adj[v].push_back(v ^ (std::uint32_t{1} << i));
  }
  return Graph(GraphFamily::hypercube, n, std::move(adj));
}

Graph build_circulant(std::uint32_t m,
                      const std::vector<std::uint32_t>& connection) {
  if (m < 1) throw std::invalid_argument("build_circulant: m must be >= 1");
  std::vector<std::uint32_t> steps(connection);
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  for (std::uint32_t s : steps) {
    if (s < 1 || s >= m)
      throw std::invalid_argument("build_circulant: step " +
                                  std::to_string(s) + " outside 1.." +
                                  std::to_string(m) + "-1");
    if (!std::binary_search(steps.begin(), steps.end(), m - s))
      throw std::invalid_argument(
          "build_circulant: connection set is not symmetric (missing " +
          std::to_string(m - s) + ")");
  }
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (std::uint32_t v = 0; v < m; ++v)
    for (std::uint32_t s : steps) adj[v].push_back((v + s) % m);
  // s and m-s reach the same vertex when 2s = m
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return Graph(GraphFamily::circulant, -1, std::move(adj));
}

}  // namespace vqn
