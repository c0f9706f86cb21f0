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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hoten {

using NodeId = std::string;

/// One GPS sample in planar meters. Timestamps are relative seconds.
struct GpsFix {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// A participant's trajectory. Fixes are strictly increasing in time and never empty.
struct Trace {
  NodeId node_id;
  std::vector<GpsFix> fixes;

  double start_time() const { return fixes.front().t; }
  double end_time() const { return fixes.back().t; }
};

struct StayPoint {
  NodeId node_id;
  double x = 0.0;
  double y = 0.0;
  double arrival = 0.0;
  double departure = 0.0;
};

struct StayPointParams {
  double dist_threshold = 5.0;   // meters
  double time_threshold = 30.0;  // seconds

  void validate() const;
};

struct Sample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Parses `node_id,timestamp_s,x_m,y_m` rows. Blank lines and lines starting
/// with `#` are skipped; a non-numeric first data row is taken as a header.
/// Traces come back in order of first appearance of their node id.
std::vector<Trace> parse_log(std::string_view text);

std::vector<Trace> read_log_file(const std::filesystem::path& path);

/// Inverse of parse_log (with header row).
std::string format_log(std::span<const Trace> traces);

/// Sliding-anchor scan: a window grows while fixes stay within
/// `dist_threshold` of the window's first fix, and is emitted as a stay point
/// (centroid of the window) when it spans at least `time_threshold`.
std::vector<StayPoint> detect_stay_points(const Trace& trace, const StayPointParams& params = {});

/// Linear interpolation between bracketing fixes; nullopt outside the trace window.
std::optional<Sample> position_at(const Trace& trace, double t);

/// Samples at start, start + tick, ... and the final fix time when it is not
/// already on the tick grid.
std::vector<Sample> resample(const Trace& trace, double tick);

}  // namespace hoten
