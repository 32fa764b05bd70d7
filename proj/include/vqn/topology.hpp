#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vqn/graph.hpp"
#include "vqn/label.hpp"

namespace vqn {

// Largest n for which a graph is materialized by default (2^20 vertices).
inline constexpr int kDefaultSizeCap = 20;

enum class EdgeKind { normal, crossing };

const char* to_string(EdgeKind kind);

// Classification of a d-transversal edge.
struct EdgeClass {
  int dimension = 0;
  EdgeKind kind = EdgeKind::normal;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

// Admissible (x_{d-1}x_{d-2}, y_{d-1}y_{d-2}) patterns across a d-transversal
// cut when d is a multiple of 3. The last two pairs produce crossing edges.
inline constexpr std::array<std::pair<unsigned, unsigned>, 4> kTransversalRule{
    {{0b00, 0b00}, {0b01, 0b01}, {0b10, 0b11}, {0b11, 0b10}}};

// Dimensions at which crossing edges can occur.
constexpr bool crossing_dimension(int d) { return d >= 3 && d % 3 == 0; }

// The unique neighbor of x across the d-transversal cut: flips bit d, and when
// d is a multiple of 3 and bit d-1 is set, also flips bit d-2.
Label dimension_neighbor(Label x, int d);

// All n neighbors of x, in dimension order d = 1..n.
std::vector<Label> neighbors(Label x);

// Classifies the pair {x, y}: its transversal dimension and kind when
// adjacent, empty otherwise. x == y is a contract error.
std::optional<EdgeClass> classify_edge(Label x, Label y);

// Literal recursive construction of the varietal hypercube: two prefixed
// copies of the previous level joined under the transversal rule.
Graph build_recursive(int n, int size_cap = kDefaultSizeCap);

// The ordinary hypercube: labels adjacent iff they differ in exactly one bit.
Graph build_hypercube(int n, int size_cap = kDefaultSizeCap);

// Circulant graph on Z_m: i adjacent to (i+s) mod m for each s in connection.
// The connection set must be within 1..m-1 and closed under s -> m-s.
Graph build_circulant(std::uint32_t m,
                      const std::vector<std::uint32_t>& connection);

}  // namespace vqn
