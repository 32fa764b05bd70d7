#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vqn/label.hpp"

namespace vqn {

enum class GraphFamily { varietal, hypercube, circulant, generic };

const char* to_string(GraphFamily family);

// Immutable simple undirected graph with sorted per-vertex neighbor lists.
// Safe to share across concurrent readers.
class Graph {
 public:
  // Validates that the adjacency is symmetric, irreflexive and duplicate-free;
  // lists are sorted on construction.
  Graph(GraphFamily family, int dim,
        std::vector<std::vector<std::uint32_t>> adjacency);

  GraphFamily family() const { return family_; }

  // Dimension n for the labeled families (varietal, hypercube); -1 otherwise.
  int dim() const { return dim_; }

  std::uint32_t vertex_count() const {
    return static_cast<std::uint32_t>(adjacency_.size());
  }
  std::uint64_t edge_count() const { return edge_count_; }

  std::span<const std::uint32_t> neighbors_of(std::uint32_t v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  std::uint32_t degree(std::uint32_t v) const {
    check_vertex(v);
    return static_cast<std::uint32_t>(adjacency_[v].size());
  }

  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  // Label of a vertex of a labeled family.
  Label label_of(std::uint32_t v) const;

 private:
  void check_vertex(std::uint32_t v) const;

  GraphFamily family_;
  int dim_;
  std::uint64_t edge_count_ = 0;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

}  // namespace vqn
