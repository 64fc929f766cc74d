// Copyright 2026 The hugr-cpp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hugr/ops.hpp"

namespace hugr {

/// Stable node handle. Indices are never handed out twice by one graph.
struct NodeId {
  std::uint32_t index = 0;
  auto operator<=>(const NodeId&) const = default;
};

enum class Direction : std::uint8_t { Incoming, Outgoing };

struct Port {
  NodeId node;
  Direction direction = Direction::Incoming;
  std::uint32_t offset = 0;
  auto operator<=>(const Port&) const = default;
};

inline Port in_port(NodeId n, std::uint32_t offset) { return {n, Direction::Incoming, offset}; }
inline Port out_port(NodeId n, std::uint32_t offset) { return {n, Direction::Outgoing, offset}; }

std::string to_string(NodeId n);
std::string to_string(const Port& p);

struct Edge {
  Port src;
  Port dst;
  EdgeKind kind;
};

struct EdgeRef {
  std::uint32_t index = 0;
  auto operator<=>(const EdgeRef&) const = default;
};

class HugrError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything `Hugr::remove_node` took out, in a form `Hugr::reinsert` can put
/// back under the original ids.
struct RemovedSubtree {
  struct Entry {
    NodeId id;
    NodeId parent;
    std::size_t position = 0;  // index in the parent's child list
    OpKind op;
  };
  std::vector<Entry> nodes;  // preorder, first entry is the subtree root
  std::vector<Edge> edges;
};

/// Hierarchical port graph. Nodes form a tree through parent links; each node
/// has ordered ports whose kinds come from its op; edges join an outgoing
/// port to an incoming one.
///
/// `connect` records edges without type checking: validate() is the judge of
/// well-formedness. Mutations require exclusive access; const access is safe
/// from several threads.
class Hugr {
 public:
  /// A graph holding just a Module root.
  Hugr();
  explicit Hugr(OpKind root_op);

  NodeId root() const { return root_; }

  NodeId add_node(OpKind op, NodeId parent);
  /// Inserts at `position` in the parent's child list (clamped to its size).
  NodeId insert_node(OpKind op, NodeId parent, std::size_t position);

  EdgeRef connect(Port src, Port dst, EdgeKind kind);
  /// Connects with the kind declared by the source port.
  EdgeRef connect(NodeId src, std::uint32_t src_offset, NodeId dst, std::uint32_t dst_offset);
  void disconnect(EdgeRef e);

  RemovedSubtree remove_node(NodeId n);
  /// Undo of remove_node. The ids in `removed` must not be live.
  void reinsert(const RemovedSubtree& removed);

  /// Moves `n` (with its subtree) to the end of `new_parent`'s children.
  void set_parent(NodeId n, NodeId new_parent);

  bool contains(NodeId n) const;
  bool contains(EdgeRef e) const;
  const OpKind& op(NodeId n) const;
  std::optional<NodeId> parent(NodeId n) const;
  std::span<const NodeId> children(NodeId n) const;
  /// Direct children of `parent`, in order.
  std::vector<NodeId> region_nodes(NodeId parent) const;

  std::uint32_t num_ports(NodeId n, Direction d) const;
  const PortRows& port_kinds(NodeId n) const;
  const EdgeKind& port_kind(Port p) const;

  /// Ports joined to `p` by any edge, in insertion order.
  std::vector<Port> neighbours(Port p) const;
  std::span<const EdgeRef> edges_at(Port p) const;
  const Edge& edge(EdgeRef e) const;

  std::size_t node_count() const { return live_nodes_; }
  std::size_t edge_count() const { return live_edges_; }
  /// Live node ids in ascending order.
  std::vector<NodeId> nodes() const;
  /// Live edges in creation order.
  std::vector<EdgeRef> edges() const;

  /// Preorder walk of the subtree at `n`, including `n`.
  std::vector<NodeId> descendants(NodeId n) const;
  bool is_ancestor_or_self(NodeId ancestor, NodeId n) const;

  /// Throws HugrError if the hierarchy or edge tables are inconsistent.
  void check_invariants() const;

 private:
  struct NodeData {
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
    OpKind op;
    PortRows ports;
    std::vector<std::vector<EdgeRef>> in_links;
    std::vector<std::vector<EdgeRef>> out_links;
  };

  NodeData& data(NodeId n);
  const NodeData& data(NodeId n) const;
  void check_port(const Port& p) const;
  NodeId place_node(NodeId id, OpKind op, NodeId parent, std::size_t position);
  EdgeRef place_edge(const Edge& e);
  void debug_check() const;

  std::vector<std::optional<NodeData>> nodes_;
  std::vector<std::optional<Edge>> edges_;
  NodeId root_;
  std::size_t live_nodes_ = 0;
  std::size_t live_edges_ = 0;
};

}  // namespace hugr

template <>
struct std::hash<hugr::NodeId> {
  std::size_t operator()(const hugr::NodeId& n) const noexcept { return std::hash<std::uint32_t>{}(n.index); }
};
