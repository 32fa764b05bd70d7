#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "vqn/io.hpp"
#include "vqn/topology.hpp"

using namespace vqn;

TEST_CASE("edge list format is bit-exact") {
  CHECK(to_edge_list(build_recursive(1)) == "0 1\n");
  CHECK(to_edge_list(build_recursive(2)) == "00 01\n00 10\n01 11\n10 11\n");
  CHECK(to_edge_list(build_recursive(0)) == "");

  const std::string vq3 = to_edge_list(build_recursive(3));
  CHECK(vq3 ==
        "000 001\n"
        "000 010\n"
        "000 100\n"
        "001 011\n"
        "001 101\n"
        "010 011\n"
        "010 111\n"
        "011 110\n"
        "100 101\n"
        "100 110\n"
        "101 111\n"
        "110 111\n");
}

TEST_CASE("edge list lines come sorted with the smaller label first") {
  const std::string text = to_edge_list(build_recursive(6));
  std::string previous;
  std::size_t lines = 0;
  for (std::size_t at = 0; at < text.size();) {
    const std::size_t end = text.find('\n', at);
    REQUIRE(end != std::string::npos);
    const std::string line = text.substr(at, end - at);
    REQUIRE(line.size() == 13);
    REQUIRE(line.substr(0, 6) < line.substr(7));
    REQUIRE(previous < line);
    previous = line;
    at = end + 1;
    ++lines;
  }
  CHECK(lines == build_recursive(6).edge_count());
}

TEST_CASE("dot export names nodes by label and annotates crossing edges") {
  const std::string dot = to_dot(build_recursive(3));
  CHECK(dot.starts_with("graph varietal_3 {\n"));
  CHECK(dot.find("  \"011\";\n") != std::string::npos);
  CHECK(dot.find("\"011\" -- \"110\" [kind=crossing, dimension=3];") !=
        std::string::npos);
  CHECK(dot.find("\"000\" -- \"001\";") != std::string::npos);
  CHECK(dot.ends_with("}\n"));

  const std::string q3 = to_dot(build_hypercube(3));
  CHECK(q3.find("kind=crossing") == std::string::npos);
}

TEST_CASE("circulant exports use the smallest covering width") {
  const Graph c8 = build_circulant(8, {1, 4, 7});
  CHECK(label_width(c8) == 3);
  const std::string text = to_edge_list(c8);
  CHECK(text.find("000 001\n") != std::string::npos);
  CHECK(text.find("000 100\n") != std::string::npos);  // the 0-4 chord
  CHECK(label_width(build_circulant(1, {})) == 1);
}

TEST_CASE("exports are deterministic") {
  const Graph g = build_recursive(5);
  CHECK(to_edge_list(g) == to_edge_list(build_recursive(5)));
  CHECK(to_dot(g) == to_dot(build_recursive(5)));
}
