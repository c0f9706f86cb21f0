// Copyright 2026 The Hoten Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fmt/format.h>

#include "hoten/error.hpp"
#include "hoten/report.hpp"

namespace hoten {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hotspot-and-entropy DTN routing laboratory"};
  app.set_config("--config", "", "Flat key = value experiment file; keys are the long flag names");
  app.require_subcommand(1);

  ExperimentConfig cfg;
  SimConfig& sim = cfg.sim;
  SynthParams& synth = cfg.synth;
  std::vector<std::string> inputs;
  std::vector<std::string> protocols{"hoten", "epidemic", "simbet"};
  std::string grid = "auto";
  std::string out_dir = "out";
  std::uint64_t seed = 42;

  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Seed for the synthetic trace generator");
  app.add_flag("--oracle-public", sim.oracle_public, "Use the global public weights instead of the gossiped estimate");
  app.add_option("--input", inputs, "GPS log CSV files (node_id,timestamp_s,x_m,y_m)")->delimiter(',');
  app.add_flag("--synthetic", cfg.synthetic, "Generate traces instead of reading --input");
  app.add_option("--protocols", protocols, "Protocols to simulate: hoten, epidemic, simbet")->delimiter(',');
  app.add_option("--range", sim.range, "Transmission range in meters");
  app.add_option("--tick", sim.tick, "Contact sampling tick in seconds");
  app.add_option("--runtime", sim.runtime, "Simulated seconds");
  app.add_option("--ttl-sweep", sim.ttl_sweep, "Message TTLs in seconds")->delimiter(',');
  app.add_option("--alpha", sim.entropy.alpha, "Centrality weight");
  app.add_option("--beta", sim.entropy.beta, "Similarity weight");
  app.add_option("--gamma", sim.entropy.gamma, "Personality weight");
  app.add_option("--delta", sim.entropy.delta, "Substitute for zero weights");
  app.add_option("--divergence-floor", sim.entropy.divergence_floor, "Lower bound on divergences before inversion");
  app.add_option("--grid", grid, "Hotspot cell size in meters, or 'auto' for the Hurst sweep");
  app.add_option("--grid-candidates", sim.grid_candidates, "Cell sizes tried by the Hurst sweep")->delimiter(',');
  app.add_option("--k-ratio", sim.k_ratio, "Fraction of cells kept in advertised vectors");
  app.add_option("--dist-threshold", sim.stay.dist_threshold, "Stay point radius in meters");
  app.add_option("--time-threshold", sim.stay.time_threshold, "Stay point minimum dwell in seconds");
  app.add_option("--confidence", cfg.confidence, "Cumulative weight for the visited-ratio statistic");
  app.add_flag("--event-log", cfg.event_logs, "Write per-run event logs");
  app.add_option("--nodes", synth.nodes, "Synthetic node count");
  app.add_option("--hotspots", synth.hotspots, "Synthetic hotspot count");
  app.add_option("--zipf-s", synth.zipf_s, "Zipf exponent of hotspot popularity");
  app.add_option("--area", synth.area_side, "Side of the square synthetic area in meters");
  app.add_option("--duration", synth.duration, "Synthetic trace length in seconds");
  app.add_option("--pause-min", synth.pause_min, "Shortest pause at a hotspot in seconds");
  app.add_option("--pause-max", synth.pause_max, "Longest pause at a hotspot in seconds");
  app.add_option("--speed", synth.speed, "Walking speed in m/s");
  app.add_option("--hotspot-radius", synth.hotspot_radius, "Spread of destinations around a hotspot center");
  app.add_option("--fix-interval", synth.fix_interval, "Seconds between synthetic GPS fixes");
  app.add_option("--preference-spread", synth.preference_spread, "Per-node jitter of hotspot rankings");

  auto* hotspots_cmd = app.add_subcommand("hotspots", "Stay points, grid, weights, Hurst sweep, visited ratios");
  auto* simulate_cmd = app.add_subcommand("simulate", "Run protocols over the TTL sweep and write metrics.csv");
  auto* synth_cmd = app.add_subcommand("synth", "Write synthetic traces to traces.csv");
  auto* compare_cmd = app.add_subcommand("compare", "Compare metrics files and check directional expectations");
  std::vector<std::string> metric_files;
  compare_cmd->add_option("files", metric_files, "metrics.csv files")->required();
  for (auto* sub : {hotspots_cmd, simulate_cmd, synth_cmd, compare_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    cfg.out_dir = out_dir;
    synth.seed = seed;
    sim.rng_seed = seed;
    for (const auto& p : inputs) cfg.inputs.emplace_back(p);
    cfg.protocols.clear();
    for (const auto& p : protocols) cfg.protocols.push_back(parse_protocol(p));
    if (grid == "auto") {
      sim.grid_size.reset();
    } else {
      try {
        std::size_t used = 0;
        sim.grid_size = std::stod(grid, &used);
        if (used != grid.size()) throw std::invalid_argument(grid);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kConfigInvalid, fmt::format("--grid expects a number or 'auto', got '{}'", grid));
      }
    }

    if (*hotspots_cmd) {
      cmd_hotspots(cfg, out);
    } else if (*simulate_cmd) {
      cmd_simulate(cfg, out);
    } else if (*synth_cmd) {
      cmd_synth(cfg, out);
    } else if (*compare_cmd) {
      std::vector<std::filesystem::path> files(metric_files.begin(), metric_files.end());
      cmd_compare(files, cfg.out_dir, out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error (Io): " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace hoten
