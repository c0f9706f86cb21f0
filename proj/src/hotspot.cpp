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

#include "hoten/hotspot.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "hoten/error.hpp"

namespace hoten {

std::optional<std::size_t> GridSpec::cell_of(double x, double y) const {
  const double col = std::floor((x - origin_x) / cell_size);
  const double row = std::floor((y - origin_y) / cell_size);
  if (!(col >= 0.0) || !(row >= 0.0) || col >= static_cast<double>(cols) ||
      row >= static_cast<double>(rows)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(row) * cols + static_cast<std::size_t>(col);
}

double WeightVector::sum() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

WeightVector normalized(std::span<const double> counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (!(total > 0.0)) throw Error(ErrorCode::kEmptyInput, "cannot normalize an all-zero count vector");
  WeightVector w;
  w.weights.reserve(counts.size());
  for (const double c : counts) w.weights.push_back(c / total);
  return w;
}

GridSpec build_grid(std::span<const StayPoint> stay_points, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("grid cell size must be positive, got {}", d));
  }
  if (stay_points.empty()) throw Error(ErrorCode::kEmptyInput, "no stay points to build a grid from");

  auto [min_x, max_x] = std::pair{stay_points.front().x, stay_points.front().x};
  auto [min_y, max_y] = std::pair{stay_points.front().y, stay_points.front().y};
  for (const auto& p : stay_points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  GridSpec grid;
  grid.origin_x = min_x;
  grid.origin_y = min_y;
  grid.cell_size = d;
  grid.cols = static_cast<std::size_t>(std::floor((max_x - min_x) / d)) + 1;
  grid.rows = static_cast<std::size_t>(std::floor((max_y - min_y) / d)) + 1;
  return grid;
}

std::vector<double> cell_counts(std::span<const StayPoint> stay_points, const GridSpec& grid) {
  std::vector<double> counts(grid.cell_count(), 0.0);
  for (const auto& p : stay_points) {
    const auto cell = grid.cell_of(p.x, p.y);
    if (!cell) {
      throw Error(ErrorCode::kOutOfGrid,
                  fmt::format("stay point ({}, {}) of node '{}' lies outside the grid", p.x, p.y, p.node_id));
    }
    counts[*cell] += 1.0;
  }
  return counts;
}

WeightVector public_weights(std::span<const StayPoint> stay_points, const GridSpec& grid) {
  if (stay_points.empty()) throw Error(ErrorCode::kEmptyInput, "no stay points");
  return normalized(cell_counts(stay_points, grid));
}

WeightVector personal_weights(std::span<const StayPoint> stay_points, const GridSpec& grid) {
  return public_weights(stay_points, grid);
}

std::vector<double> default_grid_candidates() { return {25, 50, 75, 100, 150, 200, 300, 400, 500}; }

HurstFit optimize_grid_size(std::span<const StayPoint> stay_points, std::span<const double> candidates) {
  if (candidates.empty()) throw Error(ErrorCode::kInvalidArgument, "grid candidate set is empty");
  HurstFit fit;
  for (const double d : candidates) {
    const auto grid = build_grid(stay_points, d);
    const auto series = cell_counts(stay_points, grid);
    try {
      const double h = hurst_aggregated_variance(series);
      fit.d_candidates.push_back(d);
      fit.h_values.push_back(h);
      if (fit.d_candidates.size() == 1 || h > fit.h_max ||
          (h == fit.h_max && d < fit.d_optimized)) {
        fit.h_max = h;
        fit.d_optimized = d;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSeriesTooShort && e.code() != ErrorCode::kConstantSeries) throw;
      fit.skipped.push_back(SkippedCandidate{d, std::string(to_string(e.code()))});
    }
  }
  if (fit.d_candidates.empty()) {
    throw Error(ErrorCode::kNoUsableCandidate, "no grid size candidate produced a usable Hurst series");
  }
  return fit;
}

WeightVector truncate_top_k(const WeightVector& w, std::size_t k) {
  if (k < 1 || k > w.size()) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("top-k requires 1 <= k <= {}, got {}", w.size(), k));
  }
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  WeightVector out{std::vector<double>(w.size(), 0.0)};
  for (std::size_t r = 0; r < k; ++r) out.weights[order[r]] = w[order[r]];
  return out;
}

std::size_t top_k_count(std::size_t cell_count, double ratio) {
  if (cell_count == 0) throw Error(ErrorCode::kInvalidArgument, "grid has no cells");
  if (!(ratio > 0.0) || ratio > 1.0) throw Error(ErrorCode::kInvalidArgument, "k ratio must lie in (0, 1]");
  // Shave a relative 1e-9 so representation error in ratio * K cannot bump k up by one.
  const double raw = ratio * static_cast<double>(cell_count);
  const auto k = static_cast<std::size_t>(std::ceil(raw - 1e-9 * raw));
  return std::clamp<std::size_t>(k, 1, cell_count);
}

double visited_ratio(const WeightVector& w, double confidence) {
  if (!(confidence > 0.0) || confidence > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "confidence must lie in (0, 1]");
  }
  if (w.size() == 0) throw Error(ErrorCode::kEmptyInput, "empty weight vector");
  std::vector<double> sorted = w.weights;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // Tolerance absorbs summation error, e.g. ten 0.1 weights summing to 0.8999999999999999 after nine.
  const double target = confidence - 1e-12;
  double cumulative = 0.0;
  std::size_t needed = sorted.size();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    if (cumulative >= target) {
      needed = i + 1;
      break;
    }
  }
  return static_cast<double>(needed) / static_cast<double>(w.size());
}

}  // namespace hoten
