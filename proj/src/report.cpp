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

#include "hoten/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "hoten/csv.hpp"
#include "hoten/error.hpp"

namespace hoten {
namespace {

std::string to_csv(auto&& writer) {
  std::ostringstream out;
  writer(out);
  return out.str();
}

std::string_view to_string(CheckResult r) {
  switch (r) {
    case CheckResult::kPass: return "PASS";
    case CheckResult::kFail: return "FAIL";
    case CheckResult::kSkip: return "SKIP";
  }
  return "SKIP";
}

}  // namespace

void ExperimentConfig::validate() const {
  if (synthetic == !inputs.empty()) {
    throw Error(ErrorCode::kConfigInvalid, "give exactly one trace source: --input files or --synthetic");
  }
  if (protocols.empty()) throw Error(ErrorCode::kConfigInvalid, "protocol list is empty");
  if (!(confidence > 0.0) || confidence > 1.0) {
    throw Error(ErrorCode::kConfigInvalid, "visited-ratio confidence must lie in (0, 1]");
  }
  if (synthetic) synth.validate();
  sim.validate();
}

std::vector<Trace> load_traces(const ExperimentConfig& config) {
  if (config.synthetic) return synth_traces(config.synth);
  std::vector<Trace> traces;
  for (const auto& path : config.inputs) {
    auto part = read_log_file(path);
    for (auto& t : part) {
      const auto same = std::find_if(traces.begin(), traces.end(),
                                     [&](const Trace& x) { return x.node_id == t.node_id; });
      if (same != traces.end()) {
        throw Error(ErrorCode::kMalformedRow,
                    fmt::format("node '{}' appears in more than one input file", t.node_id));
      }
      traces.push_back(std::move(t));
    }
  }
  return traces;
}

void cmd_hotspots(const ExperimentConfig& config, std::ostream& console) {
  config.validate();
  const auto traces = load_traces(config);
  const auto& out = config.out_dir;

  std::vector<std::vector<StayPoint>> per_node;
  std::vector<StayPoint> all;
  for (const auto& trace : traces) {
    per_node.push_back(detect_stay_points(trace, config.sim.stay));
    all.insert(all.end(), per_node.back().begin(), per_node.back().end());
  }
  if (all.empty()) throw Error(ErrorCode::kEmptyInput, "no stay points detected in any trace");

  // The Hurst sweep is informative even when the grid size is pinned.
  std::optional<HurstFit> fit;
  try {
    fit = optimize_grid_size(all, config.sim.grid_candidates);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoUsableCandidate || !config.sim.grid_size) throw;
  }
  const double d = config.sim.grid_size ? *config.sim.grid_size : fit->d_optimized;
  const auto grid = build_grid(all, d);

  write_file(out / "grid.csv", to_csv([&](std::ostream& o) { write_grid_csv(o, grid); }));
  write_file(out / "public_weights.csv",
             to_csv([&](std::ostream& o) { write_weights_csv(o, public_weights(all, grid)); }));
  write_file(out / "hurst_fit.csv", to_csv([&](std::ostream& o) {
               if (fit) {
                 write_hurst_csv(o, *fit);
               } else {
                 o << "d,h\n";
               }
             }));

  std::string visited = "node_id,visited_ratio\n";
  double ratio_sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    if (per_node[i].empty()) continue;
    const auto w = personal_weights(per_node[i], grid);
    write_file(out / "personal_weights" / (traces[i].node_id + ".csv"),
               to_csv([&](std::ostream& o) { write_weights_csv(o, w); }));
    const double r = visited_ratio(w, config.confidence);
    visited += fmt::format("{},{}\n", traces[i].node_id, format_number(r));
    ratio_sum += r;
    ++counted;
  }
  visited += fmt::format("mean,{}\n", format_number(ratio_sum / static_cast<double>(counted)));
  write_file(out / "visited_ratio.csv", visited);

  console << fmt::format("nodes {}  stay points {}  grid {}x{} (d = {} m, K = {})\n", traces.size(), all.size(),
                         grid.cols, grid.rows, format_number(d), grid.cell_count());
  if (fit) {
    for (const auto& s : fit->skipped) {
      console << fmt::format("  candidate d = {} skipped: {}\n", format_number(s.d), s.reason);
    }
    console << fmt::format("Hurst optimum d = {} (H = {})\n", format_number(fit->d_optimized),
                           format_number(fit->h_max));
  }
  console << fmt::format("mean visited ratio at c = {}: {}\n", format_number(config.confidence),
                         format_number(ratio_sum / static_cast<double>(counted)));
}

std::vector<SimMetrics> cmd_simulate(const ExperimentConfig& config, std::ostream& console) {
  config.validate();
  const auto traces = load_traces(config);

  SimConfig base = config.sim;
  const bool any_hoten =
      std::find(config.protocols.begin(), config.protocols.end(), Protocol::kHoten) != config.protocols.end();
  base.protocol = any_hoten ? Protocol::kHoten : config.protocols.front();
  const auto scenario = prepare_scenario(base, traces);

  std::vector<SimMetrics> results;
  for (const Protocol p : config.protocols) {
    SimConfig sim = base;
    sim.protocol = p;
    SimMetrics metrics{p, {}};
    for (const double ttl : sim.ttl_sweep) {
      if (config.event_logs) {
        std::ostringstream events;
        EventLog log(events);
        metrics.by_ttl.push_back(simulate(scenario, sim, ttl, &log));
        write_file(config.out_dir / fmt::format("events_{}_ttl{}.csv", to_string(p), format_number(ttl)),
                   events.str());
      } else {
        metrics.by_ttl.push_back(simulate(scenario, sim, ttl));
      }
    }
    results.push_back(std::move(metrics));
  }
  write_file(config.out_dir / "metrics.csv", to_csv([&](std::ostream& o) { write_metrics_csv(o, results); }));

  console << fmt::format("{} nodes, {} contacts, K = {}, k = {}\n", scenario.nodes.size(), scenario.contacts.size(),
                         scenario.grid.cell_count(), scenario.top_k);
  console << fmt::format("{:<10} {:>8} {:>8} {:>10} {:>9} {:>8} {:>10}\n", "protocol", "ttl", "cpdr", "mdd",
                         "infected", "hops", "path_hops");
  for (const auto& m : results) {
    for (const auto& r : m.by_ttl) {
      const auto fixed = [](const std::optional<double>& v, int digits) {
        return v ? fmt::format("{:.{}f}", *v, digits) : std::string("-");
      };
      console << fmt::format("{:<10} {:>8} {:>8.4f} {:>10} {:>9.4f} {:>8} {:>10}\n", to_string(m.protocol),
                             format_number(r.ttl), r.cpdr, fixed(r.mean_delivery_delay, 1), r.infected_ratio,
                             fixed(r.avg_hops, 2), fixed(r.avg_path_hops, 2));
    }
  }
  return results;
}

void cmd_synth(const ExperimentConfig& config, std::ostream& console) {
  config.synth.validate();
  const auto traces = synth_traces(config.synth);
  write_file(config.out_dir / "traces.csv", format_log(traces));
  std::size_t fixes = 0;
  for (const auto& t : traces) fixes += t.fixes.size();
  console << fmt::format("wrote {} traces ({} fixes) to {}\n", traces.size(), fixes,
                         (config.out_dir / "traces.csv").string());
}

std::vector<DirectionalCheck> cmd_compare(std::span<const std::filesystem::path> metric_files,
                                          const std::filesystem::path& out_dir, std::ostream& console) {
  if (metric_files.empty()) throw Error(ErrorCode::kConfigInvalid, "compare needs at least one metrics file");

  // label -> ttl -> row, labels in first-seen order
  std::vector<std::string> labels;
  std::map<std::string, std::map<double, MetricsRow>> table;
  for (const auto& path : metric_files) {
    const auto rows = read_metrics_csv(path);
    std::set<std::string> in_this_file;
    for (const auto& row : rows) in_this_file.insert(row.protocol);
    for (const auto& protocol : in_this_file) {
      if (table.contains(protocol)) {
        throw Error(ErrorCode::kMalformedRow,
                    fmt::format("protocol '{}' appears in more than one metrics file", protocol));
      }
    }
    for (const auto& row : rows) {
      if (!table.contains(row.protocol)) labels.push_back(row.protocol);
      table[row.protocol][row.ttl] = row;
    }
  }

  struct Criterion {
    std::string_view name;
    std::optional<double> (*get)(const MetricsRow&);
  };
  const Criterion criteria[] = {
      {"cpdr", [](const MetricsRow& r) -> std::optional<double> { return r.cpdr; }},
      {"mdd", [](const MetricsRow& r) { return r.mdd; }},
      {"infected_ratio", [](const MetricsRow& r) -> std::optional<double> { return r.infected_ratio; }},
      {"avg_hops", [](const MetricsRow& r) { return r.avg_hops; }},
  };

  std::string comparison = "criterion,ttl,protocol_a,protocol_b,value_a,value_b,delta\n";
  for (const auto& c : criteria) {
    for (std::size_t x = 0; x < labels.size(); ++x) {
      for (std::size_t y = x + 1; y < labels.size(); ++y) {
        const auto& rows_a = table[labels[x]];
        const auto& rows_b = table[labels[y]];
        for (const auto& [ttl, row_a] : rows_a) {
          const auto it = rows_b.find(ttl);
          if (it == rows_b.end()) continue;
          const auto va = c.get(row_a);
          const auto vb = c.get(it->second);
          const auto delta = (va && vb) ? std::optional<double>(*va - *vb) : std::nullopt;
          comparison += fmt::format("{},{},{},{},{},{},{}\n", c.name, format_number(ttl), labels[x], labels[y],
                                    format_number(va), format_number(vb), format_number(delta));
        }
      }
    }
  }
  write_file(out_dir / "comparison.csv", comparison);

  std::vector<DirectionalCheck> checks;
  const bool all_three = table.contains("epidemic") && table.contains("hoten") && table.contains("simbet");
  std::optional<double> ttl;
  if (all_three) {
    for (auto it = table["epidemic"].rbegin(); it != table["epidemic"].rend(); ++it) {
      if (table["hoten"].contains(it->first) && table["simbet"].contains(it->first)) {
        ttl = it->first;
        break;
      }
    }
  }
  const auto check = [&](std::string name, std::string_view lhs, std::string_view rhs, auto criterion, auto cmp) {
    DirectionalCheck result{std::move(name), ttl.value_or(0.0), CheckResult::kSkip};
    if (ttl) {
      const auto a = criterion(table[std::string(lhs)][*ttl]);
      const auto b = criterion(table[std::string(rhs)][*ttl]);
      if (a && b) result.result = cmp(*a, *b) ? CheckResult::kPass : CheckResult::kFail;
    }
    checks.push_back(std::move(result));
  };
  const auto ge = [](double a, double b) { return a >= b; };
  const auto le = [](double a, double b) { return a <= b; };
  const auto gt = [](double a, double b) { return a > b; };
  const auto lt = [](double a, double b) { return a < b; };
  check("cpdr_epidemic_ge_hoten", "epidemic", "hoten", criteria[0].get, ge);
  check("cpdr_hoten_ge_simbet", "hoten", "simbet", criteria[0].get, ge);
  check("mdd_epidemic_le_hoten", "epidemic", "hoten", criteria[1].get, le);
  check("mdd_epidemic_le_simbet", "epidemic", "simbet", criteria[1].get, le);
  check("infected_epidemic_gt_hoten", "epidemic", "hoten", criteria[2].get, gt);
  check("infected_epidemic_gt_simbet", "epidemic", "simbet", criteria[2].get, gt);
  check("hops_hoten_lt_epidemic", "hoten", "epidemic", criteria[3].get, lt);
  check("hops_hoten_lt_simbet", "hoten", "simbet", criteria[3].get, lt);

  std::string checks_csv = "check,ttl,result\n";
  for (const auto& c : checks) {
    const auto ttl_text = ttl ? format_number(c.ttl) : std::string();
    checks_csv += fmt::format("{},{},{}\n", c.name, ttl_text, to_string(c.result));
    console << fmt::format("{:<30} {}\n", c.name, to_string(c.result));
  }
  write_file(out_dir / "checks.csv", checks_csv);
  return checks;
}

}  // namespace hoten
