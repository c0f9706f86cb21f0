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
#include <map>

#include "hoten/error.hpp"
#include "hoten/protocols.hpp"

namespace hoten {
namespace {

bool contains(const std::vector<Message>& queue, MessageId id) {
  const auto it = std::lower_bound(queue.begin(), queue.end(), id,
                                   [](const Message& m, MessageId v) { return m.id < v; });
  return it != queue.end() && it->id == id;
}

void insert_sorted(std::vector<Message>& queue, Message m) {
  const auto it = std::lower_bound(queue.begin(), queue.end(), m.id,
                                   [](const Message& x, MessageId v) { return x.id < v; });
  queue.insert(it, m);
}

// Copies both queues into the outcome, dropping expired messages.
ContactOutcome start_contact(const NodeState& a, const NodeState& b, double now) {
  ContactOutcome out;
  const auto keep_live = [&](const NodeState& s, std::vector<Message>& dst) {
    dst.reserve(s.queue.size());
    for (const auto& m : s.queue) {
      if (m.expired(now)) {
        out.events.push_back(TransferEvent{TransferKind::kExpire, s.index, s.index, m.id, m.hop_count});
      } else {
        dst.push_back(m);
      }
    }
  };
  keep_live(a, out.queue_a);
  keep_live(b, out.queue_b);
  return out;
}

// Side of a contact seen from the sender of one pass.
struct Side {
  NodeIndex index;
  std::vector<Message>* queue;
  std::vector<MessageId>* newly_received;
  const std::set<MessageId>* received_before;

  bool has_received(MessageId id) const {
    return received_before->contains(id) ||
           std::find(newly_received->begin(), newly_received->end(), id) != newly_received->end();
  }
};

// One direction of a single-copy exchange. `should_forward(m)` decides
// relaying for messages not addressed to the receiver.
template <typename ForwardRule>
void single_copy_pass(Side from, Side to, ContactOutcome& out, ForwardRule&& should_forward) {
  std::vector<Message> kept;
  kept.reserve(from.queue->size());
  for (auto m : *from.queue) {
    if (m.destination == to.index) {
      m.hop_count += 1;
      to.newly_received->push_back(m.id);
      out.events.push_back(TransferEvent{TransferKind::kDeliver, from.index, to.index, m.id, m.hop_count});
    } else if (!contains(*to.queue, m.id) && should_forward(m)) {
      m.hop_count += 1;
      out.events.push_back(TransferEvent{TransferKind::kForward, from.index, to.index, m.id, m.hop_count});
      insert_sorted(*to.queue, m);
    } else {
      kept.push_back(m);
    }
  }
  *from.queue = std::move(kept);
}

Side side_a(const NodeState& a, ContactOutcome& out) {
  return Side{a.index, &out.queue_a, &out.received_a, &a.received};
}
Side side_b(const NodeState& b, ContactOutcome& out) {
  return Side{b.index, &out.queue_b, &out.received_b, &b.received};
}

}  // namespace

bool NodeState::holds(MessageId id) const { return contains(queue, id); }

std::string_view to_string(TransferKind kind) {
  switch (kind) {
    case TransferKind::kDeliver: return "deliver";
    case TransferKind::kForward: return "forward";
    case TransferKind::kCopy: return "copy";
    case TransferKind::kExpire: return "expire";
  }
  return "unknown";
}

void apply(ContactOutcome&& outcome, NodeState& a, NodeState& b) {
  a.queue = std::move(outcome.queue_a);
  b.queue = std::move(outcome.queue_b);
  a.received.insert(outcome.received_a.begin(), outcome.received_a.end());
  b.received.insert(outcome.received_b.begin(), outcome.received_b.end());
  if (outcome.hotspots) {
    a.hotspots = *outcome.hotspots;
    b.hotspots = std::move(*outcome.hotspots);
  }
  if (outcome.ego_a) a.ego = std::move(*outcome.ego_a);
  if (outcome.ego_b) b.ego = std::move(*outcome.ego_b);
}

ContactOutcome hoten_on_contact(const NodeState& a, const NodeState& b, double now, const HotenContext& ctx) {
  ContactOutcome out = start_contact(a, b, now);
  out.hotspots = merge_hotspot_matrices(a.hotspots, b.hotspots);
  const HotspotMatrix& h = *out.hotspots;

  // Without any informative row there is no public estimate; only delivery happens.
  std::optional<WeightVector> public_w;
  if (ctx.oracle_public != nullptr) {
    public_w = *ctx.oracle_public;
  } else {
    try {
      public_w = estimated_public(h);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAllPlaceholders) throw;
    }
  }

  const auto& params = ctx.params;
  const WeightVector personal_a = h.row_weights(a.index);
  const WeightVector personal_b = h.row_weights(b.index);
  const WeightVector advertised_a = truncate_top_k(personal_a, ctx.top_k);
  const WeightVector advertised_b = truncate_top_k(personal_b, ctx.top_k);
  UtilityTerms terms_a;
  UtilityTerms terms_b;
  if (public_w) {
    terms_a.centrality = centrality(personal_a, *public_w, params);
    terms_b.centrality = centrality(personal_b, *public_w, params);
    terms_a.personality = personality(personal_a, params);
    terms_b.personality = personality(personal_b, params);
  }

  // Similarity shares per destination, evaluated once per contact.
  std::map<NodeIndex, std::pair<double, double>> sims;
  const auto similarities = [&](NodeIndex dest) -> const std::pair<double, double>& {
    auto it = sims.find(dest);
    if (it == sims.end()) {
      const auto advertised_dest = truncate_top_k(h.row_weights(dest), ctx.top_k);
      it = sims.emplace(dest, std::pair{similarity(advertised_a, advertised_dest, params),
                                        similarity(advertised_b, advertised_dest, params)})
               .first;
    }
    return it->second;
  };
  const auto utility_gain = [&](const Message& m, bool a_sends) {
    if (!public_w) return false;
    const auto& [sim_a, sim_b] = similarities(m.destination);
    UtilityTerms ta = terms_a;
    UtilityTerms tb = terms_b;
    ta.similarity_to_dest = sim_a;
    tb.similarity_to_dest = sim_b;
    const double util_a = hoten_utility(ta, tb, params);
    const double util_b = hoten_utility(tb, ta, params);
    return a_sends ? util_a < util_b : util_b < util_a;
  };

  single_copy_pass(side_a(a, out), side_b(b, out), out, [&](const Message& m) { return utility_gain(m, true); });
  single_copy_pass(side_b(b, out), side_a(a, out), out, [&](const Message& m) { return utility_gain(m, false); });
  return out;
}

ContactOutcome epidemic_on_contact(const NodeState& a, const NodeState& b, double now) {
  ContactOutcome out = start_contact(a, b, now);
  const auto pass = [&](Side from, Side to) {
    const auto snapshot = *from.queue;
    for (const auto& m : snapshot) {
      if (m.destination == to.index) {
        if (to.has_received(m.id)) continue;
        to.newly_received->push_back(m.id);
        out.events.push_back(TransferEvent{TransferKind::kDeliver, from.index, to.index, m.id, m.hop_count + 1});
      } else if (!contains(*to.queue, m.id)) {
        Message copy = m;
        copy.hop_count += 1;
        out.events.push_back(TransferEvent{TransferKind::kCopy, from.index, to.index, m.id, copy.hop_count});
        insert_sorted(*to.queue, copy);
      }
    }
  };
  pass(side_a(a, out), side_b(b, out));
  pass(side_b(b, out), side_a(a, out));
  return out;
}

ContactOutcome simbet_on_contact(const NodeState& a, const NodeState& b, double now) {
  ContactOutcome out = start_contact(a, b, now);

  EgoMatrix ego_a = a.ego;
  EgoMatrix ego_b = b.ego;
  ego_a.connect(a.index, b.index);
  ego_b.connect(a.index, b.index);
  const auto neighbors_a = ego_a.neighbors(a.index);
  const auto neighbors_b = ego_b.neighbors(b.index);
  for (const NodeIndex v : neighbors_b) ego_a.connect(b.index, v);
  for (const NodeIndex v : neighbors_a) ego_b.connect(a.index, v);

  const double bet_a = simbet_betweenness(ego_a, a.index);
  const double bet_b = simbet_betweenness(ego_b, b.index);
  const auto utilities = [&](NodeIndex dest) {
    const auto sim_a = static_cast<double>(ego_a.common_neighbors(a.index, dest));
    const auto sim_b = static_cast<double>(ego_b.common_neighbors(b.index, dest));
    const double util_a = 0.5 * pair_share(bet_a, bet_b) + 0.5 * pair_share(sim_a, sim_b);
    const double util_b = 0.5 * pair_share(bet_b, bet_a) + 0.5 * pair_share(sim_b, sim_a);
    return std::pair{util_a, util_b};
  };

  single_copy_pass(side_a(a, out), side_b(b, out), out, [&](const Message& m) {
    const auto [util_a, util_b] = utilities(m.destination);
    return util_b > util_a;
  });
  single_copy_pass(side_b(b, out), side_a(a, out), out, [&](const Message& m) {
    const auto [util_a, util_b] = utilities(m.destination);
    return util_a > util_b;
  });

  out.ego_a = std::move(ego_a);
  out.ego_b = std::move(ego_b);
  return out;
}

}  // namespace hoten
