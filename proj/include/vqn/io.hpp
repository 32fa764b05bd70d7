#pragma once

#include <string>

#include "vqn/graph.hpp"

namespace vqn {

// Width of the binary vertex labels used in text exports: the dimension for
// labeled families, otherwise the least width that fits every vertex id.
int label_width(const Graph& g);

// One edge per line, "LABEL LABEL" with the smaller label first, labels
// zero-padded binary, lines sorted, LF endings.
std::string to_edge_list(const Graph& g);

// Undirected DOT graph; node names are binary labels, crossing edges carry
// kind/dimension attributes.
std::string to_dot(const Graph& g);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace vqn
