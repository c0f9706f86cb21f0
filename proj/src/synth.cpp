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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "hoten/error.hpp"
#include "hoten/simulator.hpp"

namespace hoten {
namespace {

// std:: distributions are implementation-defined; these keep generated traces
// identical across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

double standard_normal(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t pick(std::mt19937_64& rng, const std::vector<double>& cumulative) {
  const double u = uniform01(rng) * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

struct Point {
  double x;
  double y;
};

Point point_in_disc(std::mt19937_64& rng, Point center, double radius) {
  const double r = radius * std::sqrt(uniform01(rng));
  const double theta = 2.0 * std::numbers::pi * uniform01(rng);
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

}  // namespace

void SynthParams::validate() const {
  if (nodes == 0 || hotspots == 0) throw Error(ErrorCode::kConfigInvalid, "synth needs nodes and hotspots");
  if (zipf_s < 0.0) throw Error(ErrorCode::kConfigInvalid, "zipf exponent must be non-negative");
  if (!(area_side > 0.0) || !(duration > 0.0) || !(speed > 0.0) || !(fix_interval > 0.0)) {
    throw Error(ErrorCode::kConfigInvalid, "synth area, duration, speed and fix interval must be positive");
  }
  if (!(pause_min > 0.0) || pause_max < pause_min) {
    throw Error(ErrorCode::kConfigInvalid, "synth pauses need 0 < pause_min <= pause_max");
  }
  if (hotspot_radius < 0.0 || preference_spread < 0.0) {
    throw Error(ErrorCode::kConfigInvalid, "hotspot radius and preference spread must be non-negative");
  }
}

std::vector<Trace> synth_traces(const SynthParams& params) {
  params.validate();
  std::mt19937_64 rng(params.seed);

  std::vector<Point> centers(params.hotspots);
  for (auto& c : centers) c = {uniform(rng, 0.0, params.area_side), uniform(rng, 0.0, params.area_side)};

  const int width = params.nodes > 1 ? static_cast<int>(std::to_string(params.nodes - 1).size()) : 1;
  std::vector<Trace> traces;
  traces.reserve(params.nodes);
  for (std::size_t node = 0; node < params.nodes; ++node) {
    // Personal ranking: the global order (hotspot 0 most popular) perturbed by
    // log-normal noise, so nodes share popular places but disagree on details.
    std::vector<double> key(params.hotspots);
    for (std::size_t h = 0; h < params.hotspots; ++h) {
      key[h] = static_cast<double>(h + 1) * std::exp(params.preference_spread * standard_normal(rng));
    }
    std::vector<std::size_t> order(params.hotspots);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    std::vector<double> cumulative(params.hotspots);
    double total = 0.0;
    for (std::size_t rank = 0; rank < params.hotspots; ++rank) {
      total += 1.0 / std::pow(static_cast<double>(rank + 1), params.zipf_s);
      cumulative[rank] = total;
    }

    // Itinerary of waypoints; positions between them are linear.
    Trace itinerary{fmt::format("n{:0{}}", node, width), {}};
    Point here = point_in_disc(rng, centers[order[pick(rng, cumulative)]], params.hotspot_radius);
    double t = 0.0;
    itinerary.fixes.push_back({t, here.x, here.y});
    while (t < params.duration) {
      t += uniform(rng, params.pause_min, params.pause_max);
      itinerary.fixes.push_back({t, here.x, here.y});
      const Point next = point_in_disc(rng, centers[order[pick(rng, cumulative)]], params.hotspot_radius);
      const double travel = std::hypot(next.x - here.x, next.y - here.y) / params.speed;
      if (travel > 0.0) {
        t += travel;
        itinerary.fixes.push_back({t, next.x, next.y});
      }
      here = next;
    }

    Trace trace{itinerary.node_id, {}};
    for (std::size_t k = 0;; ++k) {
      const double tk = static_cast<double>(k) * params.fix_interval;
      if (tk > params.duration) break;
      const auto s = position_at(itinerary, tk);
      trace.fixes.push_back({tk, s->x, s->y});
    }
    traces.push_back(std::move(trace));
  }
  return traces;
}

}  // namespace hoten
