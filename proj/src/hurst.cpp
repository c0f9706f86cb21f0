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

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "hoten/error.hpp"
#include "hoten/hotspot.hpp"

namespace hoten {
namespace {

constexpr std::size_t kMinSeriesLength = 32;
constexpr std::size_t kMinBlocks = 8;

// Population variance of the means of consecutive non-overlapping blocks of
// size m; a trailing partial block is dropped.
double block_mean_variance(std::span<const double> series, std::size_t m) {
  const std::size_t blocks = series.size() / m;
  std::vector<double> means(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += series[b * m + k];
    means[b] = s / static_cast<double>(m);
  }
  double mean = 0.0;
  for (const double v : means) mean += v;
  mean /= static_cast<double>(blocks);
  double var = 0.0;
  for (const double v : means) var += (v - mean) * (v - mean);
  return var / static_cast<double>(blocks);
}

}  // namespace

double hurst_aggregated_variance(std::span<const double> series) {
  if (series.size() < kMinSeriesLength) {
    throw Error(ErrorCode::kSeriesTooShort,
                fmt::format("Hurst estimation needs at least {} samples, got {}", kMinSeriesLength, series.size()));
  }
  const std::size_t max_level = series.size() / 4;

  // Variances are taken relative to level 1: the slope is unchanged, and a
  // power-of-two rescaling of the series then cancels bit for bit.
  const double base = block_mean_variance(series, 1);
  if (!(base > 0.0)) throw Error(ErrorCode::kConstantSeries, "series has zero variance");
  std::vector<double> log_m{0.0};
  std::vector<double> log_var{0.0};
  for (std::size_t m = 2; m <= max_level && series.size() / m >= kMinBlocks; m *= 2) {
    const double var = block_mean_variance(series, m);
    if (!(var > 0.0)) continue;  // aggregation cancelled all variation at this level
    log_m.push_back(std::log10(static_cast<double>(m)));
    log_var.push_back(std::log10(var / base));
  }
  if (log_m.size() < 2) {
    throw Error(ErrorCode::kConstantSeries, "fewer than two aggregation levels with non-zero variance");
  }

  const auto n = static_cast<double>(log_m.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    mx += log_m[i];
    my += log_var[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    sxy += (log_m[i] - mx) * (log_var[i] - my);
    sxx += (log_m[i] - mx) * (log_m[i] - mx);
  }
  const double slope = sxy / sxx;
  return 1.0 + slope / 2.0;
}

}  // namespace hoten
