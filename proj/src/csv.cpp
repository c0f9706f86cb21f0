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

#include "hoten/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "hoten/error.hpp"

namespace hoten {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::optional<double> parse_optional(const std::string& s, const std::filesystem::path& path, std::size_t line) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kMalformedRow, fmt::format("{}:{}: '{}' is not a number", path.string(), line, s));
  }
  return v;
}

}  // namespace

std::string format_number(double v) { return fmt::format("{:.9g}", v); }

std::string format_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

void write_grid_csv(std::ostream& out, const GridSpec& grid) {
  out << "origin_x,origin_y,cell_size,cols,rows,cells\n";
  out << fmt::format("{},{},{},{},{},{}\n", format_number(grid.origin_x), format_number(grid.origin_y),
                     format_number(grid.cell_size), grid.cols, grid.rows, grid.cell_count());
}

void write_weights_csv(std::ostream& out, const WeightVector& w) {
  out << "cell_index,weight\n";
  for (std::size_t i = 0; i < w.size(); ++i) out << i << ',' << format_number(w[i]) << '\n';
}

void write_hurst_csv(std::ostream& out, const HurstFit& fit) {
  out << "d,h\n";
  for (std::size_t i = 0; i < fit.d_candidates.size(); ++i) {
    out << format_number(fit.d_candidates[i]) << ',' << format_number(fit.h_values[i]) << '\n';
  }
}

void write_metrics_csv(std::ostream& out, std::span<const SimMetrics> metrics) {
  out << "protocol,ttl,cpdr,mdd,infected_ratio,avg_hops\n";
  for (const auto& m : metrics) {
    for (const auto& row : m.by_ttl) {
      out << fmt::format("{},{},{},{},{},{}\n", to_string(m.protocol), format_number(row.ttl),
                         format_number(row.cpdr), format_number(row.mean_delivery_delay),
                         format_number(row.infected_ratio), format_number(row.avg_hops));
    }
  }
}

std::vector<MetricsRow> read_metrics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open metrics file '{}'", path.string()));
  std::vector<MetricsRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("protocol,", 0) == 0) continue;
    const auto f = split(line);
    if (f.size() != 6 || f[0].empty()) {
      throw Error(ErrorCode::kMalformedRow, fmt::format("{}:{}: expected 6 metrics columns", path.string(), line_no));
    }
    const auto required = [&](const std::string& s) {
      const auto v = parse_optional(s, path, line_no);
      if (!v) throw Error(ErrorCode::kMalformedRow, fmt::format("{}:{}: missing value", path.string(), line_no));
      return *v;
    };
    rows.push_back(MetricsRow{f[0], required(f[1]), required(f[2]), parse_optional(f[3], path, line_no),
                              required(f[4]), parse_optional(f[5], path, line_no)});
  }
  return rows;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::kIo, fmt::format("cannot create '{}': {}", path.parent_path().string(), ec.message()));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path.string()));
  out << content;
  if (!out) throw Error(ErrorCode::kIo, fmt::format("write to '{}' failed", path.string()));
}

}  // namespace hoten
