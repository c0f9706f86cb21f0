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

#include "hoten/protocols.hpp"

namespace hoten {

EgoMatrix::EgoMatrix(std::size_t nodes) : n_(nodes), bits_(nodes * nodes, 0) {}

void EgoMatrix::connect(NodeIndex u, NodeIndex v) {
  if (u == v) return;
  bits_[u * n_ + v] = 1;
  bits_[v * n_ + u] = 1;
}

std::vector<NodeIndex> EgoMatrix::neighbors(NodeIndex u) const {
  std::vector<NodeIndex> out;
  for (NodeIndex v = 0; v < n_; ++v) {
    if (connected(u, v)) out.push_back(v);
  }
  return out;
}

std::size_t EgoMatrix::common_neighbors(NodeIndex u, NodeIndex v) const {
  std::size_t count = 0;
  for (NodeIndex w = 0; w < n_; ++w) {
    if (connected(u, w) && connected(v, w)) ++count;
  }
  return count;
}

double simbet_betweenness(const EgoMatrix& ego, NodeIndex self) {
  auto members = ego.neighbors(self);
  const auto contacts = members.size();
  members.push_back(self);

  double total = 0.0;
  for (std::size_t a = 0; a < contacts; ++a) {
    for (std::size_t b = a + 1; b < contacts; ++b) {
      const NodeIndex u = members[a];
      const NodeIndex v = members[b];
      if (ego.connected(u, v)) continue;
      std::size_t paths = 0;
      for (const NodeIndex w : members) {
        if (ego.connected(u, w) && ego.connected(w, v)) ++paths;
      }
      total += static_cast<double>(paths);
    }
  }
  return total;
}

}  // namespace hoten
