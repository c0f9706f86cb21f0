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

#include <cstdint>

#include "hoten/hotspot.hpp"

namespace hoten {

/// Entropy math parameters. Zero weights are replaced by `delta` before any
/// logarithm (no renormalization). `divergence_floor` caps the reciprocal
/// divergences so identical distributions give 1 / divergence_floor.
struct EntropyParams {
  double delta = 1e-6;
  double divergence_floor = 1e-6;
  double alpha = 1.0 / 3.0;
  double beta = 1.0 / 3.0;
  double gamma = 1.0 / 3.0;

  void validate() const;
};

/// Sum_j p'_j ln(p'_j / q'_j), zeros replaced by delta. Natural log.
double kl_divergence(const WeightVector& p, const WeightVector& q, double delta);

/// Reciprocal relative entropy of a personal distribution against the public one.
double centrality(const WeightVector& personal, const WeightVector& public_w, const EntropyParams& params);

/// Reciprocal of the symmetrized relative entropy. Symmetric in its arguments.
double similarity(const WeightVector& a, const WeightVector& b, const EntropyParams& params);

/// Shannon entropy of a personal distribution with zeros replaced by delta.
double personality(const WeightVector& personal, const EntropyParams& params);

/// A node's hotspot preferences. `advertised` is the top-k truncated copy used
/// for similarity; `personal` is the full vector used for centrality.
struct NodeProfile {
  NodeId node_id;
  WeightVector personal;
  WeightVector advertised;
  std::uint64_t version = 1;
};

NodeProfile make_profile(NodeId node_id, WeightVector personal, std::size_t k, std::uint64_t version = 1);

struct PublicProfile {
  WeightVector public_weights;
};

/// x / (x + y), with 0 / 0 read as an even split.
double pair_share(double x, double y);

/// The per-node inputs of the utility, so a contact can evaluate them once.
struct UtilityTerms {
  double centrality = 0.0;
  double similarity_to_dest = 0.0;
  double personality = 0.0;
};

double hoten_utility(const UtilityTerms& i, const UtilityTerms& j, const EntropyParams& params);

/// Utility of `i` for delivering to `dest` when meeting `j`. The value for j is
/// hoten_utility(j, i, dest, ...) and the two always sum to 1.
double hoten_utility(const NodeProfile& i, const NodeProfile& j, const NodeProfile& dest,
                     const PublicProfile& public_profile, const EntropyParams& params);

}  // namespace hoten
