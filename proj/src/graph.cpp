#include "vqn/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace vqn {

const char* to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::varietal: return "varietal";
    case GraphFamily::hypercube: return "hypercube";
    case GraphFamily::circulant: return "circulant";
    case GraphFamily::generic: return "generic";
  }
  return "?";
}

Graph::Graph(GraphFamily family, int dim,
             std::vector<std::vector<std::uint32_t>> adjacency)
    : family_(family), dim_(dim), adjacency_(std::move(adjacency)) {
  const auto n = static_cast<std::uint32_t>(adjacency_.size());
  for (std::uint32_t v = 0; v < n; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("graph adjacency has duplicate entries");
    for (std::uint32_t w : list) {
      if (w >= n) throw std::invalid_argument("graph neighbor out of range");
      if (w == v) throw std::invalid_argument("graph has a self-loop");
    }
    edge_count_ += list.size();
  }
  if (edge_count_ % 2 != 0)
    throw std::invalid_argument("graph adjacency is not symmetric");
  edge_count_ /= 2;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t w : adjacency_[v])
      if (!has_edge(w, v))
        throw std::invalid_argument("graph adjacency is not symmetric");
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count_);
  for (std::uint32_t v = 0; v < vertex_count(); ++v)
    for (std::uint32_t w : adjacency_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

Label Graph::label_of(std::uint32_t v) const {
  check_vertex(v);
  if (dim_ < 0)
    throw std::invalid_argument("graph family has no label dimension");
  return Label(v, dim_);
}

void Graph::check_vertex(std::uint32_t v) const {
  if (v >= adjacency_.size())
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(adjacency_.size()) + "-1");
}

}  // namespace vqn
