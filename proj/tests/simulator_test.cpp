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

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hoten/csv.hpp"
#include "hoten/error.hpp"

namespace hoten {
namespace {

Trace stationary(NodeId id, double x, double y, double t_end, double step = 10.0) {
  Trace t{std::move(id), {}};
  for (double s = 0; s <= t_end; s += step) t.fixes.push_back(GpsFix{s, x, y});
  return t;
}

// --- contacts -----------------------------------------------------------------

TEST(ExtractContacts, WithinRangeSpansWindow) {
  const std::vector<Trace> traces{stationary("a", 0, 0, 100), stationary("b", 200, 0, 100)};
  const auto contacts = extract_contacts(traces, 250, 10);
  ASSERT_EQ(contacts.size(), 1u);
  EXPECT_EQ(contacts[0], (ContactEvent{0, 1, 0.0, 110.0}));
}

TEST(ExtractContacts, OutOfRange) {
  const std::vector<Trace> traces{stationary("a", 0, 0, 100), stationary("b", 300, 0, 100)};
  EXPECT_TRUE(extract_contacts(traces, 250, 10).empty());
}

TEST(ExtractContacts, PassingChordLength) {
  Trace mover{"m", {}};
  for (int s = 0; s <= 200; ++s) mover.fixes.push_back(GpsFix{double(s), -1000.0 + 10.0 * s, 100.0});
  const std::vector<Trace> traces{stationary("s", 0, 0, 200, 1.0), mover};
  const double tick = 1.0;
  const auto contacts = extract_contacts(traces, 250, tick);
  ASSERT_EQ(contacts.size(), 1u);
  const double chord = 2.0 * std::sqrt(250.0 * 250.0 - 100.0 * 100.0) / 10.0;
  EXPECT_NEAR(contacts[0].end - contacts[0].start, chord, 2 * tick);
  EXPECT_NEAR(chord, 45.8, 0.05);
}

TEST(ExtractContacts, SortedAndDisjointPerPair) {
  SynthParams p;
  p.nodes = 8;
  p.duration = 4000;
  p.area_side = 1000;
  const auto contacts = extract_contacts(synth_traces(p), 250, 10);
  ASSERT_FALSE(contacts.empty());
  std::map<std::pair<NodeIndex, NodeIndex>, double> last_end;
  for (std::size_t i = 0; i < contacts.size(); ++i) {
    const auto& c = contacts[i];
    EXPECT_LT(c.a, c.b);
    EXPECT_LT(c.start, c.end);
    if (i > 0) {
      const auto& p = contacts[i - 1];
      EXPECT_TRUE(std::tie(p.start, p.a, p.b) < std::tie(c.start, c.a, c.b));
    }
    auto [it, fresh] = last_end.try_emplace({c.a, c.b}, c.end);
    if (!fresh) {
      EXPECT_LT(it->second, c.start);  // a gap of at least one tick separates runs
      it->second = c.end;
    }
  }
}

// --- workload -----------------------------------------------------------------

TEST(GenerateWorkload, AllOrderedPairs) {
  const auto w = generate_workload(3, 0.0, 100.0);
  ASSERT_EQ(w.size(), 6u);
  const std::vector<std::pair<NodeIndex, NodeIndex>> expected{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    EXPECT_EQ(w[i].id, i);
    EXPECT_EQ(std::pair(w[i].source, w[i].destination), expected[i]);
    EXPECT_EQ(w[i].hop_count, 0u);
    EXPECT_EQ(w[i].ttl, 100.0);
  }
  EXPECT_TRUE(generate_workload(1, 0.0, 100.0).empty());
  EXPECT_EQ(generate_workload(5, 0.0, 1.0).size(), 20u);
}

// --- small runs ----------------------------------------------------------------

Scenario hand_scenario(std::size_t n, std::vector<ContactEvent> contacts) {
  Scenario s;
  for (std::size_t i = 0; i < n; ++i) s.nodes.push_back("n" + std::to_string(i));
  s.contacts = std::move(contacts);
  s.grid = GridSpec{0, 0, 10, 2, 1};
  for (std::size_t i = 0; i < n; ++i) {
    s.personal.push_back(WeightVector{{i % 2 ? 0.25 : 0.75, i % 2 ? 0.75 : 0.25}});
    s.stay_counts.push_back(4);
  }
  s.public_weights = WeightVector{{0.5, 0.5}};
  s.top_k = 1;
  return s;
}

SimConfig config_for(Protocol p) {
  SimConfig c;
  c.protocol = p;
  return c;
}

TEST(Simulate, TwoNodesAlwaysInContact) {
  const auto s = hand_scenario(2, {ContactEvent{0, 1, 0.0, 15000.0}});
  for (const auto p : {Protocol::kHoten, Protocol::kEpidemic, Protocol::kSimBet}) {
    const auto m = simulate(s, config_for(p), 500.0);
    EXPECT_EQ(m.sent, 2u);
    EXPECT_EQ(m.cpdr, 1.0) << to_string(p);
    EXPECT_EQ(m.mean_delivery_delay, 0.0);
    EXPECT_EQ(m.avg_hops, 1.0);
    EXPECT_EQ(m.avg_path_hops, 1.0);
    EXPECT_EQ(m.infected_ratio, 1.0);
  }
}

TEST(Simulate, NoContacts) {
  const auto s = hand_scenario(4, {});
  for (const auto p : {Protocol::kHoten, Protocol::kEpidemic, Protocol::kSimBet}) {
    const auto m = simulate(s, config_for(p), 500.0);
    EXPECT_EQ(m.cpdr, 0.0);
    EXPECT_FALSE(m.mean_delivery_delay.has_value());
    EXPECT_FALSE(m.avg_hops.has_value());
    EXPECT_EQ(m.infected_ratio, 0.25);
    EXPECT_EQ(m.expired, 12u);
  }
}

TEST(Simulate, ContactsAfterRuntimeIgnored) {
  auto c = config_for(Protocol::kEpidemic);
  c.runtime = 100;
  const auto s = hand_scenario(2, {ContactEvent{0, 1, 100.0, 110.0}, ContactEvent{0, 1, 120.0, 130.0}});
  EXPECT_EQ(simulate(s, c, 1000).cpdr, 1.0);
  const auto late = hand_scenario(2, {ContactEvent{0, 1, 120.0, 130.0}});
  const auto m = simulate(late, c, 1000);
  EXPECT_EQ(m.cpdr, 0.0);
  EXPECT_EQ(m.in_flight, 2u);
}

TEST(Simulate, ExpiredBeforeContact) {
  const auto s = hand_scenario(2, {ContactEvent{0, 1, 600.0, 610.0}});
  const auto m = simulate(s, config_for(Protocol::kEpidemic), 500.0);
  EXPECT_EQ(m.cpdr, 0.0);
  EXPECT_EQ(m.expired, 2u);
  EXPECT_EQ(simulate(s, config_for(Protocol::kEpidemic), 600.0).cpdr, 1.0);  // age == ttl is still live
}

TEST(PrepareScenario, HotenNeedsStayPoints) {
  Trace moving{"m", {}};
  for (int s = 0; s <= 100; ++s) moving.fixes.push_back(GpsFix{10.0 * s, 20.0 * s, 0});
  const std::vector<Trace> traces{moving, stationary("s", 0, 0, 1000)};
  const std::vector<Trace> only_moving{moving};
  try {
    prepare_scenario(config_for(Protocol::kHoten), only_moving);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
  EXPECT_NO_THROW(prepare_scenario(config_for(Protocol::kEpidemic), only_moving));
  auto c = config_for(Protocol::kHoten);
  c.grid_size = 10.0;
  const auto s = prepare_scenario(c, traces);
  EXPECT_EQ(s.stay_counts, (std::vector<double>{0, 1}));
  EXPECT_EQ(s.personal[0].sum(), 0.0);
  EXPECT_EQ(s.public_weights.weights, (std::vector<double>{1.0}));
}

TEST(SimConfig, Validation) {
  const auto code = [](SimConfig c) {
    try {
      c.validate();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  SimConfig c;
  c.ttl_sweep.clear();
  EXPECT_EQ(code(c), ErrorCode::kConfigInvalid);
  c = {};
  c.range = 0;
  EXPECT_EQ(code(c), ErrorCode::kConfigInvalid);
  c = {};
  c.entropy.alpha = 0.5;
  EXPECT_EQ(code(c), ErrorCode::kConfigInvalid);
  c = {};
  c.k_ratio = 1.5;
  EXPECT_EQ(code(c), ErrorCode::kConfigInvalid);
  EXPECT_THROW(parse_protocol("prophet"), Error);
  EXPECT_EQ(parse_protocol("simbet"), Protocol::kSimBet);
}

// --- event log replay -----------------------------------------------------------

struct Row {
  double time;
  std::string event;
  std::string a;
  std::string b;
  std::string msg;
  std::string detail;
};

std::vector<Row> parse_events(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "time,event,node_a,node_b,msg_id,detail");
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    EXPECT_EQ(f.size(), 6u) << line;
    if (f.size() != 6) continue;
    rows.push_back(Row{std::stod(f[0]), f[1], f[2], f[3], f[4], f[5]});
  }
  return rows;
}

struct Run {
  TtlMetrics metrics;
  std::vector<Row> events;
};

Run run_logged(const Scenario& s, Protocol p, double ttl) {
  std::ostringstream text;
  EventLog log(text);
  Run r{simulate(s, config_for(p), ttl, &log), {}};
  r.events = parse_events(text.str());
  return r;
}

std::set<std::string> delivered_ids(const std::vector<Row>& events) {
  std::set<std::string> ids;
  for (const auto& e : events) {
    if (e.event == "deliver") ids.insert(e.msg);
  }
  return ids;
}

SynthParams small_synth(std::uint64_t seed) {
  SynthParams p;
  p.nodes = 8;
  p.hotspots = 10;
  p.area_side = 1500;
  p.duration = 8000;
  p.seed = seed;
  return p;
}

class SimulatorProperties : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  void SetUp() override {
    traces_ = synth_traces(small_synth(GetParam()));
    scenario_ = prepare_scenario(config_for(Protocol::kHoten), traces_);
  }
  std::vector<Trace> traces_;
  Scenario scenario_;
};

TEST_P(SimulatorProperties, Deterministic) {
  for (const auto p : {Protocol::kHoten, Protocol::kEpidemic, Protocol::kSimBet}) {
    std::ostringstream a;
    std::ostringstream b;
    EventLog la(a);
    EventLog lb(b);
    simulate(scenario_, config_for(p), 4000, &la);
    simulate(prepare_scenario(config_for(p), traces_), config_for(p), 4000, &lb);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST_P(SimulatorProperties, MetricInvariants) {
  for (const auto p : {Protocol::kHoten, Protocol::kEpidemic, Protocol::kSimBet}) {
    double prev = 0.0;
    for (const double ttl : SimConfig{}.ttl_sweep) {
      const auto m = simulate(scenario_, config_for(p), ttl);
      EXPECT_EQ(m.sent, m.delivered + m.expired + m.in_flight);
      EXPECT_GE(m.cpdr, prev) << to_string(p) << " ttl " << ttl;
      prev = m.cpdr;
      EXPECT_LE(m.cpdr, 1.0);
      EXPECT_GT(m.infected_ratio, 0.0);
      EXPECT_LE(m.infected_ratio, 1.0);
      if (m.delivered) {
        EXPECT_LE(*m.mean_delivery_delay, ttl);
        EXPECT_GE(*m.avg_hops, 1.0);
        EXPECT_GE(*m.avg_path_hops, 1.0);
        EXPECT_GE(*m.avg_hops, *m.avg_path_hops);
      }
    }
  }
}

TEST_P(SimulatorProperties, EventLogConsistency) {
  for (const auto p : {Protocol::kHoten, Protocol::kEpidemic, Protocol::kSimBet}) {
    const double ttl = 2000;
    const auto r = run_logged(scenario_, p, ttl);
    std::map<std::string, std::set<std::string>> holders;
    std::map<std::string, double> created;
    for (const auto& e : r.events) {
      if (e.event == "create") {
        holders[e.msg] = {e.a};
        created[e.msg] = e.time;
      } else if (e.event == "forward" || e.event == "copy" || e.event == "deliver") {
        EXPECT_TRUE(holders[e.msg].contains(e.a)) << e.event << " from a non-holder";
        EXPECT_LE(e.time - created[e.msg], ttl);
        if (e.event == "forward") holders[e.msg].erase(e.a);
        if (e.event == "deliver") {
          holders[e.msg].erase(e.a);
          if (p == Protocol::kEpidemic) holders[e.msg].insert(e.a);  // copies stay
        } else {
          holders[e.msg].insert(e.b);
        }
        if (p != Protocol::kEpidemic) {
          EXPECT_NE(e.event, "copy");
          EXPECT_LE(holders[e.msg].size(), 1u);
        }
      } else if (e.event == "expire") {
        EXPECT_GT(e.time - created[e.msg], ttl);
        holders[e.msg].erase(e.a);
      }
    }
    EXPECT_EQ(delivered_ids(r.events).size(), r.metrics.delivered);
  }
}

TEST_P(SimulatorProperties, EpidemicDominates) {
  for (const double ttl : {1000.0, 4000.0, 15000.0}) {
    const auto epidemic = run_logged(scenario_, Protocol::kEpidemic, ttl);
    const auto flooded = delivered_ids(epidemic.events);
    for (const auto p : {Protocol::kHoten, Protocol::kSimBet}) {
      const auto single = run_logged(scenario_, p, ttl);
      for (const auto& id : delivered_ids(single.events)) {
        EXPECT_TRUE(flooded.contains(id)) << to_string(p) << " delivered " << id;
      }
      EXPECT_GE(epidemic.metrics.infected_ratio, single.metrics.infected_ratio);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SimulatorProperties, ::testing::Values(1, 2, 3));

// --- five-node epidemic golden ----------------------------------------------------

struct FloodResult {
  std::size_t delivered = 0;
  double delay_sum = 0;
  double hop_sum = 0;
  double infected_sum = 0;
};

// Straight flood replay: every carrier hands a copy to every non-carrier it
// meets while the message is younger than the ttl; the destination keeps it.
FloodResult flood(std::size_t n, const std::vector<ContactEvent>& contacts, double runtime, double ttl) {
  FloodResult r;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t d = 0; d < n; ++d) {
      if (s == d) continue;
      std::vector<bool> carrier(n, false);
      carrier[s] = true;
      bool reached = false;
      double sends = 0;
      for (const auto& c : contacts) {
        if (c.start > runtime || c.start > ttl) break;
        for (const auto [u, v] : {std::pair{c.a, c.b}, std::pair{c.b, c.a}}) {
          if (!carrier[u] || (v == d ? reached : carrier[v])) continue;
          if (!reached) ++sends;
          if (v == d) {
            if (!reached) {
              r.delay_sum += c.start;
              r.hop_sum += sends;
              ++r.delivered;
            }
            reached = true;
          } else {
            carrier[v] = true;
          }
        }
      }
      double infected = reached ? 1 : 0;
      for (std::size_t k = 0; k < n; ++k) infected += carrier[k] ? 1 : 0;
      r.infected_sum += infected / static_cast<double>(n);
    }
  }
  return r;
}

TEST(Simulate, FiveNodeEpidemicGolden) {
  SynthParams p;
  p.nodes = 5;
  p.seed = 42;
  const auto traces = synth_traces(p);
  const auto c = config_for(Protocol::kEpidemic);
  const auto metrics = run(c, traces);
  const auto contacts = extract_contacts(traces, c.range, c.tick);
  for (const auto& m : metrics.by_ttl) {
    const auto oracle = flood(5, contacts, c.runtime, m.ttl);
    ASSERT_EQ(m.delivered, oracle.delivered) << "ttl " << m.ttl;
    EXPECT_NEAR(m.infected_ratio, oracle.infected_sum / 20.0, 1e-12);
    if (oracle.delivered) {
      EXPECT_NEAR(*m.mean_delivery_delay, oracle.delay_sum / oracle.delivered, 1e-9);
      EXPECT_NEAR(*m.avg_hops, oracle.hop_sum / oracle.delivered, 1e-12);
    }
  }

  std::ostringstream csv;
  write_metrics_csv(csv, std::span(&metrics, 1));
  std::ifstream golden(std::string(HOTEN_GOLDEN_DIR) + "/epidemic_5nodes_seed42.csv");
  ASSERT_TRUE(golden) << "missing golden file; current output:\n" << csv.str();
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(csv.str(), expected.str());
}

}  // namespace
}  // namespace hoten
