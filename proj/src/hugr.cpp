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

#include "hugr/hugr.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace hugr {

std::string to_string(NodeId n) { return "n" + std::to_string(n.index); }

std::string to_string(const Port& p) {
  return to_string(p.node) + (p.direction == Direction::Incoming ? ".in" : ".out") +
         std::to_string(p.offset);
}

Hugr::Hugr() : Hugr(op::Module{}) {}

Hugr::Hugr(OpKind root_op) {
  NodeData d{std::nullopt, {}, std::move(root_op), {}, {}, {}};
  d.ports = ports_of(d.op);
  d.in_links.resize(d.ports.in.size());
  d.out_links.resize(d.ports.out.size());
  nodes_.emplace_back(std::move(d));
  root_ = NodeId{0};
  live_nodes_ = 1;
}

Hugr::NodeData& Hugr::data(NodeId n) {
  if (n.index >= nodes_.size() || !nodes_[n.index]) throw HugrError("unknown node " + to_string(n));
  return *nodes_[n.index];
}

const Hugr::NodeData& Hugr::data(NodeId n) const {
  if (n.index >= nodes_.size() || !nodes_[n.index]) throw HugrError("unknown node " + to_string(n));
  return *nodes_[n.index];
}

bool Hugr::contains(NodeId n) const { return n.index < nodes_.size() && nodes_[n.index].has_value(); }

bool Hugr::contains(EdgeRef e) const { return e.index < edges_.size() && edges_[e.index].has_value(); }

NodeId Hugr::place_node(NodeId id, OpKind op, NodeId parent, std::size_t position) {
  data(parent);  // throws for an unknown parent
  NodeData d{parent, {}, std::move(op), {}, {}, {}};
  d.ports = ports_of(d.op);
  d.in_links.resize(d.ports.in.size());
  d.out_links.resize(d.ports.out.size());
  if (id.index >= nodes_.size()) nodes_.resize(id.index + 1);
  auto& siblings = data(parent).children;
  position = std::min(position, siblings.size());
  siblings.insert(siblings.begin() + static_cast<std::ptrdiff_t>(position), id);
  nodes_[id.index] = std::move(d);
  ++live_nodes_;
  return id;
}

NodeId Hugr::add_node(OpKind op, NodeId parent) {
  return insert_node(std::move(op), parent, std::numeric_limits<std::size_t>::max());
}

NodeId Hugr::insert_node(OpKind op, NodeId parent, std::size_t position) {
  if (!contains(parent)) throw HugrError("unknown parent " + to_string(parent));
  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  place_node(id, std::move(op), parent, position);
  debug_check();
  return id;
}

void Hugr::check_port(const Port& p) const {
  const NodeData& d = data(p.node);
  std::size_t count = p.direction == Direction::Incoming ? d.ports.in.size() : d.ports.out.size();
  if (p.offset >= count) {
    throw HugrError("port " + to_string(p) + " out of range (node has " + std::to_string(count) + ")");
  }
}

EdgeRef Hugr::place_edge(const Edge& e) {
  EdgeRef ref{static_cast<std::uint32_t>(edges_.size())};
  edges_.emplace_back(e);
  data(e.src.node).out_links[e.src.offset].push_back(ref);
  data(e.dst.node).in_links[e.dst.offset].push_back(ref);
  ++live_edges_;
  return ref;
}

EdgeRef Hugr::connect(Port src, Port dst, EdgeKind kind) {
  if (src.direction != Direction::Outgoing || dst.direction != Direction::Incoming) {
    throw HugrError("edge must run from an outgoing to an incoming port (" + to_string(src) + " -> " +
                    to_string(dst) + ")");
  }
  check_port(src);
  check_port(dst);
  if (kind.is_control_flow() == kind.type.has_value()) {
    throw HugrError("control-flow edges carry no type; value and static edges carry one");
  }
  for (EdgeRef r : data(src.node).out_links[src.offset]) {
    const Edge& e = *edges_[r.index];
    if (e.dst == dst && e.kind == kind) {
      throw HugrError("duplicate edge " + to_string(src) + " -> " + to_string(dst));
    }
  }
  return place_edge(Edge{src, dst, std::move(kind)});
}

EdgeRef Hugr::connect(NodeId src, std::uint32_t src_offset, NodeId dst, std::uint32_t dst_offset) {
  Port s = out_port(src, src_offset);
  check_port(s);
  return connect(s, in_port(dst, dst_offset), port_kind(s));
}

void Hugr::disconnect(EdgeRef e) {
  if (!contains(e)) throw HugrError("unknown edge");
  const Edge edge = *edges_[e.index];
  auto& outs = data(edge.src.node).out_links[edge.src.offset];
  outs.erase(std::find(outs.begin(), outs.end(), e));
  auto& ins = data(edge.dst.node).in_links[edge.dst.offset];
  ins.erase(std::find(ins.begin(), ins.end(), e));
  edges_[e.index].reset();
  --live_edges_;
}

RemovedSubtree Hugr::remove_node(NodeId n) {
  if (!contains(n)) throw HugrError("unknown node " + to_string(n));
  if (n == root_) throw HugrError("cannot remove the root node");
  RemovedSubtree out;
  const std::vector<NodeId> sub = descendants(n);
  std::unordered_set<NodeId> in_sub(sub.begin(), sub.end());

  for (NodeId m : sub) {
    const NodeData& d = data(m);
    const NodeId p = *d.parent;
    const auto& siblings = data(p).children;
    const auto pos = static_cast<std::size_t>(std::find(siblings.begin(), siblings.end(), m) - siblings.begin());
    out.nodes.push_back({m, p, pos, d.op});
  }

  // Collect each incident edge once, in creation order.
  std::vector<EdgeRef> incident;
  for (NodeId m : sub) {
    const NodeData& d = data(m);
    for (const auto& links : d.in_links) incident.insert(incident.end(), links.begin(), links.end());
    for (const auto& links : d.out_links) {
      for (EdgeRef r : links) {
        // Internal edges were already collected from their target side.
        if (!in_sub.count(edges_[r.index]->dst.node)) incident.push_back(r);
      }
    }
  }
  std::sort(incident.begin(), incident.end());
  for (EdgeRef r : incident) {
    out.edges.push_back(*edges_[r.index]);
    disconnect(r);
  }

  auto& siblings = data(*data(n).parent).children;
  siblings.erase(std::find(siblings.begin(), siblings.end(), n));
  for (NodeId m : sub) {
    nodes_[m.index].reset();
    --live_nodes_;
  }
  debug_check();
  return out;
}

void Hugr::reinsert(const RemovedSubtree& removed) {
  for (const auto& entry : removed.nodes) {
    if (contains(entry.id)) throw HugrError("cannot reinsert live node " + to_string(entry.id));
  }
  for (const auto& entry : removed.nodes) {
    place_node(entry.id, entry.op, entry.parent, entry.position);
  }
  for (const Edge& e : removed.edges) {
    check_port(e.src);
    check_port(e.dst);
    place_edge(e);
  }
  debug_check();
}

void Hugr::set_parent(NodeId n, NodeId new_parent) {
  if (n == root_) throw HugrError("cannot move the root node");
  if (is_ancestor_or_self(n, new_parent)) throw HugrError("move would make a node its own ancestor");
  NodeData& d = data(n);
  auto& old_siblings = data(*d.parent).children;
  old_siblings.erase(std::find(old_siblings.begin(), old_siblings.end(), n));
  data(new_parent).children.push_back(n);
  d.parent = new_parent;
  debug_check();
}

const OpKind& Hugr::op(NodeId n) const { return data(n).op; }

std::optional<NodeId> Hugr::parent(NodeId n) const { return data(n).parent; }

std::span<const NodeId> Hugr::children(NodeId n) const { return data(n).children; }

std::vector<NodeId> Hugr::region_nodes(NodeId parent) const { return data(parent).children; }

std::uint32_t Hugr::num_ports(NodeId n, Direction d) const {
  const NodeData& nd = data(n);
  return static_cast<std::uint32_t>(d == Direction::Incoming ? nd.ports.in.size() : nd.ports.out.size());
}

const PortRows& Hugr::port_kinds(NodeId n) const { return data(n).ports; }

const EdgeKind& Hugr::port_kind(Port p) const {
  check_port(p);
  const NodeData& d = data(p.node);
  return p.direction == Direction::Incoming ? d.ports.in[p.offset] : d.ports.out[p.offset];
}

std::span<const EdgeRef> Hugr::edges_at(Port p) const {
  check_port(p);
  const NodeData& d = data(p.node);
  return p.direction == Direction::Incoming ? d.in_links[p.offset] : d.out_links[p.offset];
}

std::vector<Port> Hugr::neighbours(Port p) const {
  std::vector<Port> out;
  for (EdgeRef r : edges_at(p)) {
    const Edge& e = *edges_[r.index];
    out.push_back(p.direction == Direction::Incoming ? e.src : e.dst);
  }
  return out;
}

const Edge& Hugr::edge(EdgeRef e) const {
  if (!contains(e)) throw HugrError("unknown edge");
  return *edges_[e.index];
}

std::vector<NodeId> Hugr::nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_nodes_);
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i]) out.push_back(NodeId{i});
  }
  return out;
}

std::vector<EdgeRef> Hugr::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(live_edges_);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i]) out.push_back(EdgeRef{i});
  }
  return out;
}

std::vector<NodeId> Hugr::descendants(NodeId n) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{n};
  while (!stack.empty()) {
    NodeId m = stack.back();
    stack.pop_back();
    out.push_back(m);
    const auto& ch = data(m).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool Hugr::is_ancestor_or_self(NodeId ancestor, NodeId n) const {
  std::optional<NodeId> cur = n;
  while (cur) {
    if (*cur == ancestor) return true;
    cur = data(*cur).parent;
  }
  return false;
}

void Hugr::check_invariants() const {
  std::size_t seen = 0;
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i]) continue;
    ++seen;
    const NodeId id{i};
    const NodeData& d = *nodes_[i];
    if (id == root_) {
      if (d.parent) throw HugrError("root has a parent");
    } else {
      if (!d.parent || !contains(*d.parent)) throw HugrError(to_string(id) + " has no live parent");
      const auto& sib = data(*d.parent).children;
      if (std::count(sib.begin(), sib.end(), id) != 1) {
        throw HugrError(to_string(id) + " missing from its parent's child list");
      }
      // Walk up; a cycle would exceed the node count.
      std::size_t steps = 0;
      std::optional<NodeId> cur = d.parent;
      while (cur && *cur != root_) {
        if (++steps > nodes_.size()) throw HugrError("hierarchy cycle through " + to_string(id));
        cur = data(*cur).parent;
      }
    }
    for (NodeId c : d.children) {
      if (!contains(c) || data(c).parent != id) throw HugrError("bad child link at " + to_string(id));
    }
  }
  if (seen != live_nodes_) throw HugrError("live node count out of sync");
  std::size_t edges_seen = 0;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (!edges_[i]) continue;
    ++edges_seen;
    const Edge& e = *edges_[i];
    if (!contains(e.src.node) || !contains(e.dst.node)) throw HugrError("dangling edge");
    const auto& outs = data(e.src.node).out_links.at(e.src.offset);
    const auto& ins = data(e.dst.node).in_links.at(e.dst.offset);
    if (std::find(outs.begin(), outs.end(), EdgeRef{i}) == outs.end() ||
        std::find(ins.begin(), ins.end(), EdgeRef{i}) == ins.end()) {
      throw HugrError("edge missing from port link table");
    }
  }
  if (edges_seen != live_edges_) throw HugrError("live edge count out of sync");
}

void Hugr::debug_check() const {
#ifdef HUGR_EXPENSIVE_CHECKS
  check_invariants();
#endif
}

}  // namespace hugr
