#include "vqn/io.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include "vqn/topology.hpp"

namespace vqn {

namespace {

std::string binary_name(std::uint32_t v, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if ((v >> i) & 1u) s[static_cast<std::size_t>(width - 1 - i)] = '1';
  return s;
}

}  // namespace

int label_width(const Graph& g) {
  if (g.dim() >= 0) return g.dim();
  const std::uint32_t top = g.vertex_count() - 1;
  return top == 0 ? 1 : std::bit_width(top);
}

std::string to_edge_list(const Graph& g) {
  const int width = label_width(g);
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += binary_name(u, width);
    out += ' ';
    out += binary_name(v, width);
    out += '\n';
  }
  return out;
}

std::string to_dot(const Graph& g) {
  const int width = label_width(g);
  std::string out = "graph ";
  out += to_string(g.family());
  if (g.dim() >= 0) out += "_" + std::to_string(g.dim());
  out += " {\n";
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    out += "  \"" + binary_name(v, width) + "\";\n";
  for (const auto& [u, v] : g.edges()) {
    out += "  \"" + binary_name(u, width) + "\" -- \"" + binary_name(v, width) +
           "\"";
    if (g.family() == GraphFamily::varietal) {
      const auto cls = classify_edge(g.label_of(u), g.label_of(v));
      if (cls && cls->kind == EdgeKind::crossing)
        out += " [kind=crossing, dimension=" + std::to_string(cls->dimension) +
               "]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace vqn
