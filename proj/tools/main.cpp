// Command-line front end for the varietal hypercube toolkit.
//
// Exit codes: 0 success / check passed, 1 check failed (witness printed),
// 2 usage or resource errors.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vqn/analysis.hpp"
#include "vqn/automorphism.hpp"
#include "vqn/config.hpp"
#include "vqn/io.hpp"
#include "vqn/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

vqn::Label parse_label(const std::string& text, int n) {
  const vqn::Label label = vqn::Label::parse(text);
  if (label.dim != n)
    throw std::invalid_argument("label '" + text + "' is not " +
                                std::to_string(n) + " bits wide");
  return label;
}

std::vector<std::uint32_t> parse_connection(const std::string& text) {
  std::vector<std::uint32_t> steps;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty())
      throw std::invalid_argument("connection: empty entry in '" + text + "'");
    steps.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (steps.empty())
    throw std::invalid_argument("connection: no entries in '" + text + "'");
  return steps;
}

vqn::Graph build_family(const std::string& family, int n,
                        const std::string& connection,
                        const vqn::CliConfig& config) {
  if (family == "vq") return vqn::build_recursive(n, config.size_cap);
  if (family == "q") return vqn::build_hypercube(n, config.size_cap);
  if (family == "circulant")
    return vqn::build_circulant(static_cast<std::uint32_t>(n),
                                parse_connection(connection));
  throw std::invalid_argument("unknown family '" + family +
                              "' (expected vq, q or circulant)");
}

std::string render_graph(const vqn::Graph& g, const std::string& format) {
  if (format == "edgelist") return vqn::to_edge_list(g);
  if (format == "dot") return vqn::to_dot(g);
  throw std::invalid_argument("unknown format '" + format +
                              "' (expected edgelist or dot)");
}

void emit_report(const std::string& human, const std::string& json,
                 const std::string& format, const std::string& out_path) {
  if (format == "json")
    std::cout << json << "\n";
  else
    std::cout << human;
  if (!out_path.empty()) vqn::write_text_file(out_path, json + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"varietal hypercube network toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::uint64_t seed_flag = 0;
  int cap_flag = 0;
  auto* config_opt = app.add_option("--config", config_path,
                                    "JSON config file with resource caps");
  auto* seed_opt =
      app.add_option("--seed", seed_flag, "seed for sampled verification");
  auto* cap_opt =
      app.add_option("--cap", cap_flag, "override the materialization cap");

  std::string out_path;
  std::string format = "text";
  std::string gen_format = "edgelist";
  std::string family;
  std::string connection = "1,4,7";
  std::string mode;
  std::string label_x, label_y;
  int n = 0;
  int samples = 0;

  int exit_code = kExitOk;
  vqn::CliConfig config;

  // flags > config file > defaults
  const auto resolve_config = [&] {
    vqn::CliConfig resolved;
    if (config_opt->count() > 0)
      resolved = vqn::CliConfig::from_json_file(config_path);
    if (cap_opt->count() > 0) {
      resolved.size_cap = cap_flag;
      resolved.exhaustive_cap =
          std::min(resolved.exhaustive_cap, resolved.size_cap);
    }
    if (seed_opt->count() > 0) resolved.seed = seed_flag;
    resolved.validate();
    config = resolved;
  };

  auto* generate = app.add_subcommand("generate", "write a graph to a file");
  generate->add_option("family", family, "vq, q or circulant")->required();
  generate->add_option("n", n, "dimension (vertex count for circulant)")
      ->required();
  generate->add_option("--format", gen_format, "edgelist or dot");
  generate->add_option("--out", out_path, "output path (default: stdout)");
  generate->add_option("--connection", connection,
                       "comma-separated circulant connection set");
  generate->callback([&] {
    resolve_config();
    const vqn::Graph g = build_family(family, n, connection, config);
    const std::string text = render_graph(g, gen_format);
    std::ostringstream counts;
    counts << family << " n=" << n << ": " << g.vertex_count()
           << " vertices, " << g.edge_count() << " edges\n";
    if (out_path.empty()) {
      std::cout << text;
      std::cerr << counts.str();
    } else {
      vqn::write_text_file(out_path, text);
      std::cout << counts.str() << "wrote " << gen_format << " to "
                << out_path << "\n";
    }
  });

  auto* nbrs = app.add_subcommand("neighbors", "list the neighbors of a label");
  nbrs->add_option("n", n, "dimension")->required();
  nbrs->add_option("label", label_x, "binary label, n bits")->required();
  nbrs->callback([&] {
    resolve_config();
    const vqn::Label x = parse_label(label_x, n);
    for (int d = 1; d <= n; ++d) {
      const vqn::Label y = vqn::dimension_neighbor(x, d);
      const auto cls = vqn::classify_edge(x, y);
      std::cout << "d=" << d << " " << y.to_string() << " "
                << vqn::to_string(cls->kind) << "\n";
    }
  });

  auto* adjacent =
      app.add_subcommand("adjacent", "classify the pair {x, y} in VQ_n");
  adjacent->add_option("n", n, "dimension")->required();
  adjacent->add_option("x", label_x, "binary label")->required();
  adjacent->add_option("y", label_y, "binary label")->required();
  adjacent->callback([&] {
    resolve_config();
    const auto cls =
        vqn::classify_edge(parse_label(label_x, n), parse_label(label_y, n));
    if (cls) {
      std::cout << "adjacent dimension=" << cls->dimension
                << " kind=" << vqn::to_string(cls->kind) << "\n";
    } else {
      std::cout << "not-adjacent\n";
      exit_code = kExitCheckFailed;
    }
  });

  auto* transport_cmd = app.add_subcommand(
      "transport", "construct an automorphism of VQ_n mapping x to y");
  transport_cmd->add_option("n", n, "dimension")->required();
  transport_cmd->add_option("x", label_x, "source label")->required();
  transport_cmd->add_option("y", label_y, "target label")->required();
  transport_cmd->callback([&] {
    resolve_config();
    const vqn::Label x = parse_label(label_x, n);
    const vqn::Label y = parse_label(label_y, n);
    const vqn::Automorphism sigma = vqn::transport(x, y);
    std::cout << "automorphism: " << sigma.to_text() << "\n";
    const vqn::Label image = sigma.apply(x);
    std::cout << "image: " << x.to_string() << " -> " << image.to_string()
              << (image == y ? " ok" : " MISMATCH") << "\n";
    if (image != y) exit_code = kExitCheckFailed;
    if (n > config.size_cap) {
      std::cout << "verification skipped: n exceeds the size cap "
                << config.size_cap << "\n";
      return;
    }
    const vqn::AutomorphismCheck check =
        vqn::is_automorphism(sigma, config.size_cap);
    std::cout << "is_automorphism: " << (check.ok ? "true" : "false") << "\n";
    if (!check.ok) {
      std::cout << "witness: " << check.describe() << "\n";
      exit_code = kExitCheckFailed;
    }
  });

  auto* verify =
      app.add_subcommand("verify", "verify vertex-transitivity of VQ_n");
  verify->add_option("n", n, "dimension")->required();
  verify->add_option("--mode", mode, "full or sampled");
  auto* samples_opt =
      verify->add_option("--samples", samples, "sample count for sampled mode");
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_option("--format", format, "text or json");
  verify->callback([&] {
    resolve_config();
    std::string effective = mode;
    if (effective.empty())
      effective = n <= config.exhaustive_cap ? "full" : "sampled";
    vqn::TransitivityReport report;
    if (effective == "full") {
      report = vqn::verify_vertex_transitivity(n, config.exhaustive_cap,
                                               config.size_cap);
    } else if (effective == "sampled") {
      const int k = samples_opt->count() > 0 ? samples : config.sample_count;
      report = vqn::verify_vertex_transitivity_sampled(n, k, config.seed,
                                                       config.size_cap);
    } else {
      throw std::invalid_argument("unknown mode '" + effective +
                                  "' (expected full or sampled)");
    }
    std::ostringstream human;
    if (report.full)
      human << report.passed << "/" << report.checked
            << " targets verified\n";
    else
      human << report.passed << "/" << report.checked
            << " sampled pairs verified (seed " << report.seed << ")\n";
    for (const auto& [src, dst] : report.failures)
      human << "FAILED: " << src.to_string() << " -> " << dst.to_string()
            << "\n";
    emit_report(human.str(), report.to_json(), format, out_path);
    if (!report.ok()) exit_code = kExitCheckFailed;
  });

  auto* metrics_cmd = app.add_subcommand(
      "metrics", "diameter / average distance / eccentricity profile");
  metrics_cmd->add_option("family", family, "vq, q or circulant")->required();
  metrics_cmd->add_option("n", n, "dimension (vertex count for circulant)")
      ->required();
  metrics_cmd->add_option("--mode", mode,
                          "single-source (default) or all-sources");
  metrics_cmd->add_option("--connection", connection,
                          "comma-separated circulant connection set");
  metrics_cmd->add_option("--out", out_path, "write the JSON report here");
  metrics_cmd->add_option("--format", format, "text or json");
  metrics_cmd->callback([&] {
    resolve_config();
    vqn::MetricsMode metrics_mode =
        vqn::MetricsMode::single_source_via_transitivity;
    if (mode == "all-sources" || mode == "all")
      metrics_mode = vqn::MetricsMode::all_sources;
    else if (!mode.empty() && mode != "single-source" && mode != "single")
      throw std::invalid_argument(
          "unknown mode '" + mode +
          "' (expected single-source or all-sources)");
    const vqn::Graph g = build_family(family, n, connection, config);
    const vqn::MetricsReport report = vqn::metrics(g, metrics_mode);
    std::ostringstream human;
    human << "family=" << family << " n=" << report.n << " mode="
          << vqn::to_string(report.mode) << "\n"
          << "diameter: " << report.diameter << "\n"
          << "average distance: " << report.average_distance_num << "/"
          << report.average_distance_den << " = "
          << report.average_distance_decimal << "\n";
    human << "eccentricity profile:";
    for (const auto& [ecc, vertices] : report.eccentricity_profile)
      human << " " << ecc << ":" << vertices;
    human << "\n";
    if (report.mode == vqn::MetricsMode::all_sources)
      human << "eccentricities uniform: "
            << (report.eccentricities_uniform() ? "yes" : "no") << "\n";
    emit_report(human.str(), report.to_json(), format, out_path);
  });

  auto* refute = app.add_subcommand(
      "refute-edge-transitivity",
      "find two edges of VQ_n with different cycle counts");
  refute->add_option("n", n, "dimension")->required();
  refute->add_option("--out", out_path, "write the JSON report here");
  refute->add_option("--format", format, "text or json");
  refute->callback([&] {
    resolve_config();
    const vqn::EdgeTransitivityWitness witness = vqn::refute_edge_transitivity(
        n, config.cycle_length_cap, config.size_cap);
    std::ostringstream human;
    if (witness.found) {
      human << "witness found in VQ" << n << ": edge {"
            << witness.edge_a.first.to_string() << ","
            << witness.edge_a.second.to_string() << "} vs edge {"
            << witness.edge_b.first.to_string() << ","
            << witness.edge_b.second.to_string() << "} at cycle length "
            << witness.cycle_length << ": counts " << witness.count_a
            << " vs " << witness.count_b << "\n";
    } else {
      human << "no witness found in VQ" << n << " up to cycle length "
            << config.cycle_length_cap << "\n";
      exit_code = kExitCheckFailed;
    }
    emit_report(human.str(), witness.to_json(), format, out_path);
  });

  auto* cayley = app.add_subcommand(
      "cayley-check", "check VQ3 against the circulant C(Z8,{1,4,7})");
  cayley->add_option("--out", out_path, "write the JSON report here");
  cayley->add_option("--format", format, "text or json");
  cayley->callback([&] {
    resolve_config();
    const vqn::Graph vq3 = vqn::build_recursive(3, config.size_cap);
    const vqn::Graph cayley_graph = vqn::build_circulant(8, {1, 4, 7});
    const auto mapping = vqn::isomorphic_small(vq3, cayley_graph);
    nlohmann::json j;
    j["isomorphic"] = mapping.has_value();
    std::ostringstream human;
    if (mapping) {
      human << "VQ3 is isomorphic to C(Z8,{1,4,7}): mapping found\n";
      auto entries = nlohmann::json::array();
      for (std::uint32_t v = 0; v < mapping->size(); ++v) {
        human << vq3.label_of(v).to_string() << " -> " << (*mapping)[v]
              << "\n";
        entries.push_back((*mapping)[v]);
      }
      j["mapping"] = entries;
    } else {
      human << "VQ3 is NOT isomorphic to C(Z8,{1,4,7})\n";
      exit_code = kExitCheckFailed;
    }
    emit_report(human.str(), j.dump(), format, out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
