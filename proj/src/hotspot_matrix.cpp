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

#include <fmt/format.h>

#include "hoten/error.hpp"
#include "hoten/protocols.hpp"

namespace hoten {

HotspotMatrix::HotspotMatrix(std::vector<NodeId> nodes, std::size_t cells) : cells_(cells) {
  rows_.reserve(nodes.size());
  for (auto& id : nodes) rows_.push_back(MatrixRow{std::move(id), 0, 0.0, nullptr});
}

WeightVector HotspotMatrix::row_weights(NodeIndex node) const {
  const auto& r = rows_.at(node);
  if (r.placeholder()) return WeightVector{std::vector<double>(cells_, 0.0)};
  return *r.weights;
}

void HotspotMatrix::set_row(NodeIndex node, WeightVector weights, std::uint64_t version, double mass) {
  if (weights.size() != cells_) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("row has {} cells, matrix expects {}", weights.size(), cells_));
  }
  if (version == 0) throw Error(ErrorCode::kInvalidArgument, "version 0 is reserved for placeholders");
  auto& r = rows_.at(node);
  r.version = version;
  r.mass = mass;
  r.weights = std::make_shared<const WeightVector>(std::move(weights));
}

bool operator==(const HotspotMatrix& a, const HotspotMatrix& b) {
  if (a.cells_ != b.cells_ || a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    const auto& ra = a.rows_[i];
    const auto& rb = b.rows_[i];
    if (ra.node_id != rb.node_id || ra.version != rb.version || ra.mass != rb.mass) return false;
    if (!ra.placeholder() && *ra.weights != *rb.weights) return false;
  }
  return true;
}

HotspotMatrix merge_hotspot_matrices(const HotspotMatrix& mine, const HotspotMatrix& theirs) {
  if (mine.node_count() != theirs.node_count() || mine.cell_count() != theirs.cell_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                fmt::format("cannot merge {}x{} matrix with {}x{}", mine.node_count(), mine.cell_count(),
                            theirs.node_count(), theirs.cell_count()));
  }
  HotspotMatrix merged = mine;
  for (NodeIndex n = 0; n < mine.node_count(); ++n) {
    const auto& theirs_row = theirs.row(n);
    if (theirs_row.version > mine.row(n).version) merged.rows_[n] = theirs_row;
  }
  return merged;
}

WeightVector estimated_public(const HotspotMatrix& h) {
  std::vector<double> columns(h.cell_count(), 0.0);
  bool informative = false;
  for (NodeIndex n = 0; n < h.node_count(); ++n) {
    const auto& r = h.row(n);
    if (r.placeholder() || !(r.mass > 0.0)) continue;
    informative = true;
    for (std::size_t c = 0; c < columns.size(); ++c) columns[c] += r.mass * (*r.weights)[c];
  }
  if (!informative) throw Error(ErrorCode::kAllPlaceholders, "hotspot matrix has no informative rows");
  return normalized(columns);
}

}  // namespace hoten
