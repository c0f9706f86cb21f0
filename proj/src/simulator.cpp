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

#include "hoten/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "hoten/error.hpp"

namespace hoten {

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::kHoten: return "hoten";
    case Protocol::kEpidemic: return "epidemic";
    case Protocol::kSimBet: return "simbet";
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view name) {
  if (name == "hoten") return Protocol::kHoten;
  if (name == "epidemic") return Protocol::kEpidemic;
  if (name == "simbet") return Protocol::kSimBet;
  throw Error(ErrorCode::kConfigInvalid, fmt::format("unknown protocol '{}'", name));
}

void SimConfig::validate() const {
  const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(range)) throw Error(ErrorCode::kConfigInvalid, "transmission range must be positive");
  if (!positive(tick)) throw Error(ErrorCode::kConfigInvalid, "tick must be positive");
  if (!positive(runtime)) throw Error(ErrorCode::kConfigInvalid, "runtime must be positive");
  if (ttl_sweep.empty()) throw Error(ErrorCode::kConfigInvalid, "ttl sweep is empty");
  for (const double ttl : ttl_sweep) {
    if (!positive(ttl)) throw Error(ErrorCode::kConfigInvalid, fmt::format("ttl {} is not positive", ttl));
  }
  if (grid_size && !positive(*grid_size)) throw Error(ErrorCode::kConfigInvalid, "grid size must be positive");
  if (!grid_size && grid_candidates.empty()) {
    throw Error(ErrorCode::kConfigInvalid, "automatic grid size needs at least one candidate");
  }
  for (const double d : grid_candidates) {
    if (!positive(d)) throw Error(ErrorCode::kConfigInvalid, fmt::format("grid candidate {} is not positive", d));
  }
  if (!(k_ratio > 0.0) || k_ratio > 1.0) throw Error(ErrorCode::kConfigInvalid, "k ratio must lie in (0, 1]");
  if (!positive(stay.dist_threshold) || !positive(stay.time_threshold)) {
    throw Error(ErrorCode::kConfigInvalid, "stay point thresholds must be positive");
  }
  entropy.validate();
}

Scenario prepare_scenario(const SimConfig& config, std::span<const Trace> traces) {
  config.validate();
  Scenario scenario;
  std::vector<std::vector<StayPoint>> per_node;
  std::vector<StayPoint> all;
  for (const auto& trace : traces) {
    scenario.nodes.push_back(trace.node_id);
    per_node.push_back(detect_stay_points(trace, config.stay));
    all.insert(all.end(), per_node.back().begin(), per_node.back().end());
  }
  scenario.contacts = extract_contacts(traces, config.range, config.tick);

  if (all.empty()) {
    if (config.protocol == Protocol::kHoten) {
      throw Error(ErrorCode::kEmptyInput, "no stay points in any trace; hotspot weights are undefined");
    }
    return scenario;
  }

  if (config.grid_size) {
    scenario.grid = build_grid(all, *config.grid_size);
  } else {
    scenario.hurst = optimize_grid_size(all, config.grid_candidates);
    scenario.grid = build_grid(all, scenario.hurst->d_optimized);
  }
  const std::size_t cells = scenario.grid.cell_count();
  for (const auto& points : per_node) {
    scenario.stay_counts.push_back(static_cast<double>(points.size()));
    scenario.personal.push_back(points.empty() ? WeightVector{std::vector<double>(cells, 0.0)}
                                               : personal_weights(points, scenario.grid));
  }
  scenario.public_weights = public_weights(all, scenario.grid);
  scenario.top_k = top_k_count(cells, config.k_ratio);
  return scenario;
}

EventLog::EventLog(std::ostream& out) : out_(out) { out_ << "time,event,node_a,node_b,msg_id,detail\n"; }

void EventLog::record(double time, std::string_view event, std::string_view node_a, std::string_view node_b,
                      std::optional<MessageId> message, std::string_view detail) {
  out_ << fmt::format("{:.9g},{},{},{},{},{}\n", time, event, node_a, node_b,
                      message ? fmt::to_string(*message) : std::string(), detail);
}

TtlMetrics simulate(const Scenario& scenario, const SimConfig& config, double ttl, EventLog* log) {
  const std::size_t n = scenario.nodes.size();
  const bool hotspots = config.protocol == Protocol::kHoten;

  std::vector<NodeState> states(n);
  for (NodeIndex i = 0; i < n; ++i) {
    states[i].index = i;
    if (hotspots) {
      states[i].hotspots = HotspotMatrix(scenario.nodes, scenario.grid.cell_count());
      if (scenario.stay_counts[i] > 0.0) {
        states[i].hotspots.set_row(i, scenario.personal[i], 1, scenario.stay_counts[i]);
      }
    }
    if (config.protocol == Protocol::kSimBet) states[i].ego = EgoMatrix(n);
  }

  const auto messages = generate_workload(n, 0.0, ttl);
  std::vector<std::uint8_t> infected(messages.size() * n, 0);
  std::vector<std::optional<double>> delivered_at(messages.size());
  std::vector<std::uint32_t> delivered_hops(messages.size(), 0);
  std::vector<std::uint32_t> transmissions(messages.size(), 0);
  for (const auto& m : messages) {
    states[m.source].queue.push_back(m);
    infected[m.id * n + m.source] = 1;
    if (log) log->record(m.created_at, "create", scenario.nodes[m.source], scenario.nodes[m.destination], m.id, "");
  }

  HotenContext hoten_ctx{config.entropy, scenario.top_k,
                         config.oracle_public ? &scenario.public_weights : nullptr};

  for (const auto& contact : scenario.contacts) {
    const double now = contact.start;
    if (now > config.runtime) break;
    auto& a = states[contact.a];
    auto& b = states[contact.b];
    if (log) {
      log->record(now, "contact", scenario.nodes[contact.a], scenario.nodes[contact.b], std::nullopt,
                  fmt::format("{:.9g}", contact.end));
    }

    ContactOutcome outcome;
    switch (config.protocol) {
      case Protocol::kHoten: outcome = hoten_on_contact(a, b, now, hoten_ctx); break;
      case Protocol::kEpidemic: outcome = epidemic_on_contact(a, b, now); break;
      case Protocol::kSimBet: outcome = simbet_on_contact(a, b, now); break;
    }

    for (const auto& ev : outcome.events) {
      if (log) {
        log->record(now, to_string(ev.kind), scenario.nodes[ev.from], scenario.nodes[ev.to], ev.message_id,
                    fmt::to_string(ev.hop_count));
      }
      if (ev.kind == TransferKind::kExpire) continue;
      infected[ev.message_id * n + ev.to] = 1;
      if (delivered_at[ev.message_id]) continue;
      ++transmissions[ev.message_id];
      if (ev.kind == TransferKind::kDeliver) {
        delivered_at[ev.message_id] = now;
        delivered_hops[ev.message_id] = ev.hop_count;
      }
    }
    apply(std::move(outcome), a, b);
  }

  TtlMetrics metrics;
  metrics.ttl = ttl;
  metrics.sent = messages.size();
  double delay_sum = 0.0;
  double hop_sum = 0.0;
  double path_hop_sum = 0.0;
  double infected_sum = 0.0;
  for (const auto& m : messages) {
    if (delivered_at[m.id]) {
      ++metrics.delivered;
      delay_sum += *delivered_at[m.id] - m.created_at;
      hop_sum += transmissions[m.id];
      path_hop_sum += delivered_hops[m.id];
    } else if (m.expired(config.runtime)) {
      ++metrics.expired;
    } else {
      ++metrics.in_flight;
    }
    const auto first = infected.begin() + static_cast<std::ptrdiff_t>(m.id * n);
    const auto carriers = std::accumulate(first, first + static_cast<std::ptrdiff_t>(n), std::size_t{0});
    infected_sum += static_cast<double>(carriers) / static_cast<double>(n);
  }
  if (metrics.sent > 0) {
    metrics.cpdr = static_cast<double>(metrics.delivered) / static_cast<double>(metrics.sent);
    metrics.infected_ratio = infected_sum / static_cast<double>(metrics.sent);
  }
  if (metrics.delivered > 0) {
    metrics.mean_delivery_delay = delay_sum / static_cast<double>(metrics.delivered);
    metrics.avg_hops = hop_sum / static_cast<double>(metrics.delivered);
    metrics.avg_path_hops = path_hop_sum / static_cast<double>(metrics.delivered);
  }
  return metrics;
}

SimMetrics run(const SimConfig& config, std::span<const Trace> traces) {
  const auto scenario = prepare_scenario(config, traces);
  SimMetrics metrics;
  metrics.protocol = config.protocol;
  for (const double ttl : config.ttl_sweep) metrics.by_ttl.push_back(simulate(scenario, config, ttl));
  return metrics;
}

}  // namespace hoten
