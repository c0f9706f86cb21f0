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

#include "hoten/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "hoten/error.hpp"

namespace hoten {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(pos)));
      break;
    }
    fields.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return fields;
}

double distance(const GpsFix& a, const GpsFix& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

void StayPointParams::validate() const {
  if (!(dist_threshold > 0.0) || !(time_threshold > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "stay point thresholds must be strictly positive");
  }
}

std::vector<Trace> parse_log(std::string_view text) {
  std::vector<Trace> traces;
  std::unordered_map<std::string, std::size_t> index_of;
  bool seen_data = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (fields.size() != 4 || fields[0].empty()) {
      throw Error(ErrorCode::kMalformedRow,
                  fmt::format("line {}: expected node_id,timestamp_s,x_m,y_m", line_no));
    }
    const auto t = parse_double(fields[1]);
    const auto x = parse_double(fields[2]);
    const auto y = parse_double(fields[3]);
    if (!t || !x || !y) {
      if (!seen_data && !t && !x && !y) {  // header row
        seen_data = true;
        continue;
      }
      throw Error(ErrorCode::kMalformedRow, fmt::format("line {}: non-numeric field", line_no));
    }
    seen_data = true;
    if (!std::isfinite(*t) || !std::isfinite(*x) || !std::isfinite(*y) || *t < 0.0) {
      throw Error(ErrorCode::kMalformedRow,
                  fmt::format("line {}: timestamp must be finite and >= 0, coordinates finite", line_no));
    }

    const std::string node(fields[0]);
    auto [it, inserted] = index_of.try_emplace(node, traces.size());
    if (inserted) traces.push_back(Trace{node, {}});
    auto& fixes = traces[it->second].fixes;
    if (!fixes.empty() && !(*t > fixes.back().t)) {
      throw Error(ErrorCode::kUnsortedTimestamps,
                  fmt::format("line {}: node '{}' timestamp {} does not follow {}", line_no, node,
                              *t, fixes.back().t));
    }
    fixes.push_back(GpsFix{*t, *x, *y});
  }

  if (traces.empty()) throw Error(ErrorCode::kEmptyInput, "GPS log contains no fixes");
  return traces;
}

std::vector<Trace> read_log_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open trace file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_log(buffer.str());
}

std::string format_log(std::span<const Trace> traces) {
  std::string out = "node_id,timestamp_s,x_m,y_m\n";
  for (const auto& trace : traces) {
    for (const auto& fix : trace.fixes) {
      out += fmt::format("{},{:.9g},{:.9g},{:.9g}\n", trace.node_id, fix.t, fix.x, fix.y);
    }
  }
  return out;
}

std::vector<StayPoint> detect_stay_points(const Trace& trace, const StayPointParams& params) {
  params.validate();
  const auto& fixes = trace.fixes;
  const std::size_t n = fixes.size();
  std::vector<StayPoint> result;

  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && distance(fixes[j], fixes[i]) <= params.dist_threshold) ++j;
    if (fixes[j - 1].t - fixes[i].t >= params.time_threshold) {
      double sx = 0.0;
      double sy = 0.0;
      for (std::size_t k = i; k < j; ++k) {
        sx += fixes[k].x;
        sy += fixes[k].y;
      }
      const auto count = static_cast<double>(j - i);
      result.push_back(StayPoint{trace.node_id, sx / count, sy / count, fixes[i].t, fixes[j - 1].t});
      i = j;
    } else {
      ++i;
    }
  }
  return result;
}

std::optional<Sample> position_at(const Trace& trace, double t) {
  const auto& fixes = trace.fixes;
  if (fixes.empty() || t < fixes.front().t || t > fixes.back().t) return std::nullopt;
  const auto upper = std::lower_bound(fixes.begin(), fixes.end(), t,
                                      [](const GpsFix& f, double value) { return f.t < value; });
  if (upper->t == t) return Sample{t, upper->x, upper->y};
  const auto& b = *upper;
  const auto& a = *std::prev(upper);
  const double u = (t - a.t) / (b.t - a.t);
  return Sample{t, a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

std::vector<Sample> resample(const Trace& trace, double tick) {
  if (!(tick > 0.0)) throw Error(ErrorCode::kInvalidArgument, "resample tick must be positive");
  std::vector<Sample> samples;
  const double start = trace.start_time();
  const double end = trace.end_time();
  for (std::size_t k = 0;; ++k) {
    const double t = start + static_cast<double>(k) * tick;
    if (t > end) break;
    samples.push_back(*position_at(trace, t));
  }
  if (samples.back().t < end) samples.push_back(*position_at(trace, end));
  return samples;
}

}  // namespace hoten
