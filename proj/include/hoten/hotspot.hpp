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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hoten/trace.hpp"

namespace hoten {

/// A cols x rows partition of the plane into square cells of side `cell_size`.
/// Cells are linearized row-major: index = row * cols + col.
struct GridSpec {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double cell_size = 1.0;
  std::size_t cols = 1;
  std::size_t rows = 1;

  std::size_t cell_count() const { return cols * rows; }

  /// nullopt when (x, y) falls outside the grid.
  std::optional<std::size_t> cell_of(double x, double y) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Per-cell weights over a grid of K cells.
struct WeightVector {
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  double operator[](std::size_t i) const { return weights[i]; }
  double sum() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

WeightVector normalized(std::span<const double> counts);

struct SkippedCandidate {
  double d = 0.0;
  std::string reason;
};

struct HurstFit {
  std::vector<double> d_candidates;  // usable candidates, in input order
  std::vector<double> h_values;      // aligned with d_candidates
  std::vector<SkippedCandidate> skipped;
  double d_optimized = 0.0;
  double h_max = 0.0;
};

/// Smallest grid anchored at the stay points' minimum corner that covers them all.
GridSpec build_grid(std::span<const StayPoint> stay_points, double d);

/// Stay point count per cell. Throws OutOfGrid for points the grid does not cover.
std::vector<double> cell_counts(std::span<const StayPoint> stay_points, const GridSpec& grid);

/// Normalized cell counts over all nodes' stay points.
WeightVector public_weights(std::span<const StayPoint> stay_points, const GridSpec& grid);

/// Same normalization restricted to one node; callers pass that node's stay points.
WeightVector personal_weights(std::span<const StayPoint> stay_points, const GridSpec& grid);

/// Aggregated-variance Hurst estimate. Block sizes m = 1, 2, 4, ... up to
/// len/4, skipping levels with fewer than 8 blocks; H = 1 + slope/2 of
/// log10 Var(block means) against log10 m.
double hurst_aggregated_variance(std::span<const double> series);

/// Default grid-size sweep in meters.
std::vector<double> default_grid_candidates();

/// Evaluates H on the row-major cell-count series for each candidate and
/// returns the argmax (smallest d on ties). Unusable candidates are recorded
/// in `skipped`.
HurstFit optimize_grid_size(std::span<const StayPoint> stay_points, std::span<const double> candidates);

/// Keeps the k largest weights (lower index wins ties) and zeroes the rest.
WeightVector truncate_top_k(const WeightVector& w, std::size_t k);

/// ceil(ratio * K) clamped to [1, K].
std::size_t top_k_count(std::size_t cell_count, double ratio);

/// Fraction of cells needed, heaviest first, to accumulate at least `confidence`.
double visited_ratio(const WeightVector& w, double confidence);

}  // namespace hoten
