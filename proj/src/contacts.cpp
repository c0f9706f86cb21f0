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
#include <tuple>

#include "hoten/error.hpp"
#include "hoten/simulator.hpp"

namespace hoten {
namespace {

// Positions of one trace on the global tick grid, starting at tick index `first`.
struct TickSamples {
  long long first = 0;
  std::vector<Sample> samples;

  long long last() const { return first + static_cast<long long>(samples.size()) - 1; }
};

TickSamples sample_on_ticks(const Trace& trace, double tick) {
  TickSamples out;
  out.first = static_cast<long long>(std::ceil(trace.start_time() / tick));
  const auto last = static_cast<long long>(std::floor(trace.end_time() / tick));
  for (long long k = out.first; k <= last; ++k) {
    const auto s = position_at(trace, static_cast<double>(k) * tick);
    if (s) out.samples.push_back(*s);
  }
  return out;
}

}  // namespace

std::vector<ContactEvent> extract_contacts(std::span<const Trace> traces, double range, double tick) {
  if (!(range > 0.0) || !(tick > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "contact extraction needs positive range and tick");
  }
  std::vector<TickSamples> sampled;
  sampled.reserve(traces.size());
  for (const auto& trace : traces) sampled.push_back(sample_on_ticks(trace, tick));

  std::vector<ContactEvent> contacts;
  for (NodeIndex a = 0; a < traces.size(); ++a) {
    for (NodeIndex b = a + 1; b < traces.size(); ++b) {
      const auto& sa = sampled[a];
      const auto& sb = sampled[b];
      if (sa.samples.empty() || sb.samples.empty()) continue;
      const long long lo = std::max(sa.first, sb.first);
      const long long hi = std::min(sa.last(), sb.last());
      std::optional<long long> run_start;
      for (long long k = lo; k <= hi + 1; ++k) {
        bool in_range = false;
        if (k <= hi) {
          const auto& pa = sa.samples[static_cast<std::size_t>(k - sa.first)];
          const auto& pb = sb.samples[static_cast<std::size_t>(k - sb.first)];
          in_range = std::hypot(pa.x - pb.x, pa.y - pb.y) <= range;
        }
        if (in_range && !run_start) {
          run_start = k;
        } else if (!in_range && run_start) {
          contacts.push_back(ContactEvent{a, b, static_cast<double>(*run_start) * tick,
                                          static_cast<double>(k) * tick});
          run_start.reset();
        }
      }
    }
  }
  std::sort(contacts.begin(), contacts.end(), [](const ContactEvent& x, const ContactEvent& y) {
    return std::tie(x.start, x.a, x.b) < std::tie(y.start, y.a, y.b);
  });
  return contacts;
}

std::vector<Message> generate_workload(std::size_t nodes, double t0, double ttl) {
  std::vector<Message> messages;
  if (nodes < 2) return messages;
  messages.reserve(nodes * (nodes - 1));
  MessageId next = 0;
  for (NodeIndex s = 0; s < nodes; ++s) {
    for (NodeIndex d = 0; d < nodes; ++d) {
      if (s == d) continue;
      messages.push_back(Message{next++, s, d, t0, ttl, 0});
    }
  }
  return messages;
}

}  // namespace hoten
