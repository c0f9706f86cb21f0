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
#include <memory>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "hoten/entropy.hpp"
#include "hoten/hotspot.hpp"

namespace hoten {

/// Position of a node in the simulation's canonical node order.
using NodeIndex = std::size_t;
using MessageId = std::uint64_t;

// ---------------------------------------------------------------------------
// Gossiped hotspot matrix
// ---------------------------------------------------------------------------

/// One node's entry in a hotspot matrix. Version 0 marks a placeholder that
/// carries no information (all-zero weights).
struct MatrixRow {
  NodeId node_id;
  std::uint64_t version = 0;
  /// Stay points behind `weights`; the column-sum estimate weights rows by it.
  double mass = 0.0;
  std::shared_ptr<const WeightVector> weights;

  bool placeholder() const { return version == 0; }
};

/// The N x K matrix every node carries: its knowledge of each node's personal
/// hotspot weights. Rows are immutable once set and shared between copies.
class HotspotMatrix {
 public:
  HotspotMatrix() = default;
  HotspotMatrix(std::vector<NodeId> nodes, std::size_t cells);

  std::size_t node_count() const { return rows_.size(); }
  std::size_t cell_count() const { return cells_; }
  const MatrixRow& row(NodeIndex node) const { return rows_.at(node); }

  /// All-zero vector for placeholders.
  WeightVector row_weights(NodeIndex node) const;

  void set_row(NodeIndex node, WeightVector weights, std::uint64_t version, double mass = 1.0);

  /// Same node universe, same versions, same weights.
  friend bool operator==(const HotspotMatrix& a, const HotspotMatrix& b);
  friend HotspotMatrix merge_hotspot_matrices(const HotspotMatrix& mine, const HotspotMatrix& theirs);

 private:
  std::size_t cells_ = 0;
  std::vector<MatrixRow> rows_;
};

/// Row-wise higher version wins; equal versions keep `mine`.
HotspotMatrix merge_hotspot_matrices(const HotspotMatrix& mine, const HotspotMatrix& theirs);

/// Normalized column sums, each row scaled by its mass. Throws AllPlaceholders
/// when no row carries information.
WeightVector estimated_public(const HotspotMatrix& h);

// ---------------------------------------------------------------------------
// SimBet ego network
// ---------------------------------------------------------------------------

/// Symmetric binary contact adjacency with a zero diagonal. Entries only ever
/// go from 0 to 1.
class EgoMatrix {
 public:
  EgoMatrix() = default;
  explicit EgoMatrix(std::size_t nodes);

  std::size_t size() const { return n_; }
  bool connected(NodeIndex u, NodeIndex v) const { return bits_[u * n_ + v] != 0; }
  void connect(NodeIndex u, NodeIndex v);
  std::vector<NodeIndex> neighbors(NodeIndex u) const;
  std::size_t common_neighbors(NodeIndex u, NodeIndex v) const;

  friend bool operator==(const EgoMatrix&, const EgoMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Sum over unordered pairs (u, v) of self's neighbors with A_uv = 0 of
/// (A^2)_uv, where A is restricted to self and its neighbors.
double simbet_betweenness(const EgoMatrix& ego, NodeIndex self);

// ---------------------------------------------------------------------------
// Messages and per-node routing state
// ---------------------------------------------------------------------------

struct Message {
  MessageId id = 0;
  NodeIndex source = 0;
  NodeIndex destination = 0;
  double created_at = 0.0;
  double ttl = 0.0;
  std::uint32_t hop_count = 0;

  bool expired(double now) const { return now - created_at > ttl; }
};

struct NodeState {
  NodeIndex index = 0;
  std::vector<Message> queue;      // sorted by id
  std::set<MessageId> received;    // messages delivered to this node
  HotspotMatrix hotspots;
  EgoMatrix ego;

  bool holds(MessageId id) const;
};

enum class TransferKind { kDeliver, kForward, kCopy, kExpire };

std::string_view to_string(TransferKind kind);

/// One message movement during a contact. For kExpire, `from` is the holder
/// and `to` equals `from`.
struct TransferEvent {
  TransferKind kind = TransferKind::kForward;
  NodeIndex from = 0;
  NodeIndex to = 0;
  MessageId message_id = 0;
  std::uint32_t hop_count = 0;  // after the transfer
};

/// State changes produced by one contact between nodes a and b.
struct ContactOutcome {
  std::vector<Message> queue_a;
  std::vector<Message> queue_b;
  std::vector<MessageId> received_a;
  std::vector<MessageId> received_b;
  std::optional<HotspotMatrix> hotspots;  // adopted by both sides
  std::optional<EgoMatrix> ego_a;
  std::optional<EgoMatrix> ego_b;
  std::vector<TransferEvent> events;
};

void apply(ContactOutcome&& outcome, NodeState& a, NodeState& b);

struct HotenContext {
  EntropyParams params;
  std::size_t top_k = 1;
  /// When set, replaces the gossiped public estimate.
  const WeightVector* oracle_public = nullptr;
};

/// Single-copy forwarding on the Hoten utility: messages for the peer are
/// delivered, others move to the peer when its utility is strictly higher and
/// it does not already hold them. Hotspot matrices are merged first.
ContactOutcome hoten_on_contact(const NodeState& a, const NodeState& b, double now, const HotenContext& ctx);

/// Each side copies every unexpired message the other lacks.
ContactOutcome epidemic_on_contact(const NodeState& a, const NodeState& b, double now);

/// SimBet comparator: ego matrices absorb the contact and each other's
/// neighbor lists, then single-copy forwarding on equal-weight betweenness and
/// common-neighbor similarity shares.
ContactOutcome simbet_on_contact(const NodeState& a, const NodeState& b, double now);

}  // namespace hoten
