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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hoten/hotspot.hpp"
#include "hoten/simulator.hpp"

namespace hoten {

/// Nine significant digits, shortest form. Used for every float in every CSV.
std::string format_number(double v);
std::string format_number(const std::optional<double>& v);  // empty when absent

void write_grid_csv(std::ostream& out, const GridSpec& grid);
void write_weights_csv(std::ostream& out, const WeightVector& w);
void write_hurst_csv(std::ostream& out, const HurstFit& fit);

/// `protocol,ttl,cpdr,mdd,infected_ratio,avg_hops`
void write_metrics_csv(std::ostream& out, std::span<const SimMetrics> metrics);

struct MetricsRow {
  std::string protocol;
  double ttl = 0.0;
  double cpdr = 0.0;
  std::optional<double> mdd;
  double infected_ratio = 0.0;
  std::optional<double> avg_hops;
};

std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& path);

/// Writes `content` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace hoten
