#include "vqn/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vqn {

void CliConfig::validate() const {
  if (size_cap < 1 || exhaustive_cap < 1 || cycle_length_cap < 1 ||
      sample_count < 1)
    throw std::invalid_argument("config: all caps must be positive");
  if (exhaustive_cap > size_cap)
    throw std::invalid_argument(
        "config: exhaustive_cap must not exceed size_cap");
}

CliConfig CliConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected an object");
  CliConfig config;
  bool exhaustive_given = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "size_cap")
      config.size_cap = value.get<int>();
    else if (key == "exhaustive_cap") {
      config.exhaustive_cap = value.get<int>();
      exhaustive_given = true;
    } else if (key == "cycle_length_cap")
      config.cycle_length_cap = value.get<int>();
    else if (key == "sample_count")
      config.sample_count = value.get<int>();
    else if (key == "seed")
      config.seed = value.get<std::uint64_t>();
    else
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  // an unset exhaustive cap follows a lowered size cap; an explicit
  // inconsistent pair is still an error
  if (!exhaustive_given)
    config.exhaustive_cap = std::min(config.exhaustive_cap, config.size_cap);
  config.validate();
  return config;
}

CliConfig CliConfig::from_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << f.rdbuf();
  return from_json_text(buffer.str());
}

}  // namespace vqn
