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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hoten/entropy.hpp"
#include "hoten/hotspot.hpp"
#include "hoten/protocols.hpp"
#include "hoten/trace.hpp"

namespace hoten {

/// A maximal run of ticks during which nodes a < b are within range,
/// covering [start, end).
struct ContactEvent {
  NodeIndex a = 0;
  NodeIndex b = 0;
  double start = 0.0;
  double end = 0.0;

  friend bool operator==(const ContactEvent&, const ContactEvent&) = default;
};

/// Samples each pair on the shared tick grid t = k * tick inside both traces'
/// windows and coalesces in-range ticks. Sorted by (start, a, b).
std::vector<ContactEvent> extract_contacts(std::span<const Trace> traces, double range, double tick);

/// One message from every node to every other node, created at t0. Ids follow
/// the canonical (source, destination) order.
std::vector<Message> generate_workload(std::size_t nodes, double t0, double ttl);

enum class Protocol { kHoten, kEpidemic, kSimBet };

std::string_view to_string(Protocol p);
Protocol parse_protocol(std::string_view name);

struct SimConfig {
  Protocol protocol = Protocol::kHoten;
  double range = 250.0;
  double tick = 10.0;
  double runtime = 15000.0;
  std::vector<double> ttl_sweep{500, 1000, 2000, 4000, 8000, 15000};
  EntropyParams entropy;
  std::optional<double> grid_size;  // nullopt: choose by Hurst sweep
  std::vector<double> grid_candidates = default_grid_candidates();
  double k_ratio = 0.15;
  StayPointParams stay;
  bool oracle_public = false;
  std::uint64_t rng_seed = 42;

  void validate() const;
};

struct TtlMetrics {
  double ttl = 0.0;
  std::size_t sent = 0;
  std::size_t delivered = 0;
  std::size_t expired = 0;
  std::size_t in_flight = 0;
  double cpdr = 0.0;
  std::optional<double> mean_delivery_delay;
  double infected_ratio = 0.0;
  /// Transmissions of a message (every forward, copy and the delivery) up to
  /// its first delivery, averaged over delivered messages. Equals the
  /// delivered hop_count for single-copy protocols.
  std::optional<double> avg_hops;
  /// hop_count of the delivered copy, averaged over delivered messages.
  std::optional<double> avg_path_hops;
};

struct SimMetrics {
  Protocol protocol = Protocol::kHoten;
  std::vector<TtlMetrics> by_ttl;
};

/// Everything a run needs that does not depend on protocol or TTL.
struct Scenario {
  std::vector<NodeId> nodes;
  std::vector<ContactEvent> contacts;
  GridSpec grid;
  std::optional<HurstFit> hurst;             // set when the grid size was chosen automatically
  std::vector<WeightVector> personal;        // all-zero for nodes without stay points
  std::vector<double> stay_counts;
  WeightVector public_weights;
  std::size_t top_k = 1;
};

Scenario prepare_scenario(const SimConfig& config, std::span<const Trace> traces);

/// Receives `time,event,node_a,node_b,msg_id,detail` rows.
class EventLog {
 public:
  explicit EventLog(std::ostream& out);
  void record(double time, std::string_view event, std::string_view node_a, std::string_view node_b,
              std::optional<MessageId> message, std::string_view detail);

 private:
  std::ostream& out_;
};

TtlMetrics simulate(const Scenario& scenario, const SimConfig& config, double ttl, EventLog* log = nullptr);

/// prepare_scenario followed by simulate for every TTL in the sweep.
SimMetrics run(const SimConfig& config, std::span<const Trace> traces);

// ---------------------------------------------------------------------------
// Synthetic traces
// ---------------------------------------------------------------------------

struct SynthParams {
  std::size_t nodes = 20;
  std::size_t hotspots = 20;
  double zipf_s = 1.2;
  double area_side = 2500.0;       // meters; hotspot centers lie in [0, side)^2
  double duration = 15000.0;       // seconds
  double pause_min = 60.0;
  double pause_max = 900.0;
  double speed = 1.5;              // m/s
  double hotspot_radius = 30.0;    // destinations scatter uniformly in this disc
  double fix_interval = 10.0;
  double preference_spread = 1.0;  // log-normal jitter on each node's hotspot ranking
  std::uint64_t seed = 42;

  void validate() const;
};

/// Nodes hop between hotspots picked from a personal Zipf ranking, walking at
/// constant speed and pausing at each destination. Node ids are n00, n01, ...
std::vector<Trace> synth_traces(const SynthParams& params);

}  // namespace hoten
