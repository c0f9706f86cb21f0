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

#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hoten/simulator.hpp"

namespace hoten {

/// One experiment: where traces come from, how to simulate, where to write.
struct ExperimentConfig {
  std::vector<std::filesystem::path> inputs;
  bool synthetic = false;
  SynthParams synth;
  SimConfig sim;
  std::vector<Protocol> protocols{Protocol::kHoten, Protocol::kEpidemic, Protocol::kSimBet};
  std::filesystem::path out_dir = "out";
  bool event_logs = false;
  double confidence = 0.9;  // visited-ratio threshold

  /// Exactly one trace source, a non-empty protocol list and a valid SimConfig.
  void validate() const;
};

std::vector<Trace> load_traces(const ExperimentConfig& config);

/// Writes grid.csv, public_weights.csv, personal_weights/<node>.csv,
/// hurst_fit.csv and visited_ratio.csv under the output directory.
void cmd_hotspots(const ExperimentConfig& config, std::ostream& console);

/// Writes metrics.csv (and events_<protocol>_ttl<ttl>.csv when enabled).
std::vector<SimMetrics> cmd_simulate(const ExperimentConfig& config, std::ostream& console);

/// Writes the generated traces to traces.csv in GPS log format.
void cmd_synth(const ExperimentConfig& config, std::ostream& console);

enum class CheckResult { kPass, kFail, kSkip };

struct DirectionalCheck {
  std::string name;
  double ttl = 0.0;
  CheckResult result = CheckResult::kSkip;
};

/// Writes comparison.csv (pairwise deltas per criterion and ttl) and
/// checks.csv (directional expectations at the largest common ttl).
std::vector<DirectionalCheck> cmd_compare(std::span<const std::filesystem::path> metric_files,
                                          const std::filesystem::path& out_dir, std::ostream& console);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hoten
