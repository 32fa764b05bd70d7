#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "vqn/config.hpp"

using namespace vqn;

TEST_CASE("defaults satisfy the invariants") {
  const CliConfig config;
  CHECK_NOTHROW(config.validate());
  CHECK(config.size_cap == 20);
  CHECK(config.exhaustive_cap == 8);
  CHECK(config.cycle_length_cap == 8);
  CHECK(config.sample_count == 100);
  CHECK(config.seed == 0);
}

TEST_CASE("json parsing") {
  const CliConfig config = CliConfig::from_json_text(
      R"({"size_cap": 12, "exhaustive_cap": 6, "cycle_length_cap": 9,
          "sample_count": 40, "seed": 77})");
  CHECK(config.size_cap == 12);
  CHECK(config.exhaustive_cap == 6);
  CHECK(config.cycle_length_cap == 9);
  CHECK(config.sample_count == 40);
  CHECK(config.seed == 77);

  CHECK_THROWS_AS(CliConfig::from_json_text("not json"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CliConfig::from_json_text("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(CliConfig::from_json_text(R"({"sizecap": 3})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CliConfig::from_json_text(R"({"size_cap": 0})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CliConfig::from_json_text(R"({"sample_count": -4})"),
                  std::invalid_argument);
}

TEST_CASE("a lowered size cap pulls the unset exhaustive cap down") {
  const CliConfig config = CliConfig::from_json_text(R"({"size_cap": 5})");
  CHECK(config.size_cap == 5);
  CHECK(config.exhaustive_cap == 5);

  // explicit inconsistency is still an error
  CHECK_THROWS_AS(
      CliConfig::from_json_text(R"({"size_cap": 5, "exhaustive_cap": 8})"),
      std::invalid_argument);
}

TEST_CASE("missing config file") {
  CHECK_THROWS_AS(CliConfig::from_json_file("/nonexistent/vqn.json"),
                  std::runtime_error);
}
