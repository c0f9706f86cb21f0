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

#include "hoten/entropy.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "hoten/error.hpp"

namespace hoten {
namespace {

void require_same_length(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                fmt::format("weight vectors differ in length ({} vs {})", a.size(), b.size()));
  }
}

inline double substitute(double w, double delta) { return w == 0.0 ? delta : w; }

}  // namespace

void EntropyParams::validate() const {
  if (!(delta > 0.0) || !(divergence_floor > 0.0)) {
    throw Error(ErrorCode::kConfigInvalid, "delta and divergence floor must be positive");
  }
  if (alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
    throw Error(ErrorCode::kConfigInvalid, "alpha, beta, gamma must be non-negative");
  }
  if (std::abs(alpha + beta + gamma - 1.0) > 1e-12) {
    throw Error(ErrorCode::kConfigInvalid,
                fmt::format("alpha + beta + gamma must equal 1, got {}", alpha + beta + gamma));
  }
}

double kl_divergence(const WeightVector& p, const WeightVector& q, double delta) {
  require_same_length(p, q);
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double pj = substitute(p[j], delta);
    const double qj = substitute(q[j], delta);
    sum += pj * std::log(pj / qj);
  }
  return sum;
}

double centrality(const WeightVector& personal, const WeightVector& public_w, const EntropyParams& params) {
  return 1.0 / std::max(kl_divergence(personal, public_w, params.delta), params.divergence_floor);
}

double similarity(const WeightVector& a, const WeightVector& b, const EntropyParams& params) {
  require_same_length(a, b);
  const double total = kl_divergence(a, b, params.delta) + kl_divergence(b, a, params.delta);
  return 1.0 / std::max(total, params.divergence_floor);
}

double personality(const WeightVector& personal, const EntropyParams& params) {
  double h = 0.0;
  for (const double w : personal.weights) {
    const double v = substitute(w, params.delta);
    h -= v * std::log(v);
  }
  return h;
}

NodeProfile make_profile(NodeId node_id, WeightVector personal, std::size_t k, std::uint64_t version) {
  auto advertised = truncate_top_k(personal, k);
  return NodeProfile{std::move(node_id), std::move(personal), std::move(advertised), version};
}

double pair_share(double x, double y) {
  const double total = x + y;
  return total == 0.0 ? 0.5 : x / total;
}

double hoten_utility(const UtilityTerms& i, const UtilityTerms& j, const EntropyParams& params) {
  return params.alpha * pair_share(i.centrality, j.centrality) +
         params.beta * pair_share(i.similarity_to_dest, j.similarity_to_dest) +
         params.gamma * pair_share(i.personality, j.personality);
}

double hoten_utility(const NodeProfile& i, const NodeProfile& j, const NodeProfile& dest,
                     const PublicProfile& public_profile, const EntropyParams& params) {
  const auto& pub = public_profile.public_weights;
  const UtilityTerms ti{centrality(i.personal, pub, params), similarity(i.advertised, dest.advertised, params),
                        personality(i.personal, params)};
  const UtilityTerms tj{centrality(j.personal, pub, params), similarity(j.advertised, dest.advertised, params),
                        personality(j.personal, params)};
  return hoten_utility(ti, tj, params);
}

}  // namespace hoten
