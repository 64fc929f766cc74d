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

#include "hugr/rewrite.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "hugr/builder.hpp"
#include "hugr/serial.hpp"
#include "hugr/validate.hpp"
#include "json.hpp"

namespace hugr {

namespace {

[[noreturn]] void invalid_pattern(const std::string& msg) { throw RewriteError(RewriteErrorCode::InvalidPattern, msg); }

bool is_io(const OpKind& op) { return is_a<op::Input>(op) || is_a<op::Output>(op); }

/// Value-port types of a node, or nullopt if it has non-value ports.
std::optional<Signature> value_rows(const Hugr& h, NodeId n) {
  Signature sig;
  const PortRows& rows = h.port_kinds(n);
  for (const EdgeKind& k : rows.in) {
    if (!k.is_value()) return std::nullopt;
    sig.inputs.push_back(*k.type);
  }
  for (const EdgeKind& k : rows.out) {
    if (!k.is_value()) return std::nullopt;
    sig.outputs.push_back(*k.type);
  }
  return sig;
}

bool op_matches(const OpKind& pattern_op, const Hugr& h, NodeId n) {
  const OpKind& host = h.op(n);
  if (!is_wildcard(pattern_op)) return pattern_op == host;
  if (!is_leaf(host) || is_io(host) || is_a<op::Const>(host)) return false;
  auto rows = value_rows(h, n);
  return rows && *rows == std::get<op::ExtensionOp>(pattern_op).signature;
}

/// One step of the anchored search: reach `to` from the already placed
/// `from` through port `via` of `from`, landing on offset `to_offset`.
struct Step {
  NodeId to;
  NodeId from;
  Port via;
  std::uint32_t to_offset;
};

std::vector<Step> plan(const Pattern& p) {
  const Fragment& f = p.fragment;
  const Hugr& g = f.hugr;
  std::set<NodeId> members(f.nodes.begin(), f.nodes.end());
  std::set<NodeId> placed{p.anchor};
  std::vector<NodeId> queue{p.anchor};
  std::vector<Step> steps;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const NodeId n = queue[qi];
    auto visit = [&](const Port& here, const Port& there) {
      if (!members.count(there.node) || placed.count(there.node)) return;
      placed.insert(there.node);
      queue.push_back(there.node);
      steps.push_back(Step{there.node, n, here, there.offset});
    };
    for (std::uint32_t i = 0; i < g.num_ports(n, Direction::Incoming); ++i) {
      for (const Port& src : g.neighbours(in_port(n, i))) visit(in_port(n, i), src);
    }
    for (std::uint32_t o = 0; o < g.num_ports(n, Direction::Outgoing); ++o) {
      for (const Port& dst : g.neighbours(out_port(n, o))) visit(out_port(n, o), dst);
    }
  }
  return steps;
}

class Matcher {
 public:
  Matcher(const Pattern& p, const Hugr& h, NodeId region, MatchStats* stats)
      : p_(p), h_(h), region_(region), stats_(stats), steps_(plan(p)) {}

  /// Embeddings anchored at `host_anchor`, in lexicographic order.
  void at(NodeId host_anchor, std::vector<Match>& out, bool first_only) {
    if (!h_.contains(host_anchor) || h_.parent(host_anchor) != region_) return;
    if (!op_matches(p_.fragment.hugr.op(p_.anchor), h_, host_anchor)) return;
    if (stats_) ++stats_->anchors_tried;
    emb_.clear();
    used_.clear();
    emb_[p_.anchor] = host_anchor;
    used_.insert(host_anchor);
    found_.clear();
    first_only_ = first_only;
    search(0);
    std::sort(found_.begin(), found_.end(), [](const Match& a, const Match& b) {
      return std::lexicographical_compare(
          a.embedding.begin(), a.embedding.end(), b.embedding.begin(), b.embedding.end(),
          [](const auto& x, const auto& y) { return x.second < y.second; });
    });
    for (Match& m : found_) out.push_back(std::move(m));
  }

 private:
  void search(std::size_t k) {
    if (first_only_ && !found_.empty()) return;
    if (k == steps_.size()) {
      finish();
      return;
    }
    const Step& s = steps_[k];
    const Port host_port{emb_.at(s.from), s.via.direction, s.via.offset};
    std::vector<NodeId> candidates;
    for (const Port& q : h_.neighbours(host_port)) {
      if (q.offset != s.to_offset || used_.count(q.node) || h_.parent(q.node) != region_) continue;
      if (!op_matches(p_.fragment.hugr.op(s.to), h_, q.node)) continue;
      if (std::find(candidates.begin(), candidates.end(), q.node) == candidates.end()) candidates.push_back(q.node);
    }
    if (stats_) {
      stats_->extensions += candidates.size();
      if (candidates.size() > 1) ++stats_->branch_points;
    }
    for (NodeId c : candidates) {
      emb_[s.to] = c;
      used_.insert(c);
      search(k + 1);
      used_.erase(c);
      emb_.erase(s.to);
    }
  }

  void finish() {
    const Fragment& f = p_.fragment;
    Match m;
    m.region = region_;
    for (NodeId n : f.nodes) m.embedding.emplace_back(n, emb_.at(n));
    std::sort(m.embedding.begin(), m.embedding.end());
    for (std::uint32_t i = 0; i < f.boundary.inputs.size(); ++i) {
      // Any use will do; is_current checks that they all agree.
      const Port use = f.hugr.neighbours(out_port(f.input, i)).front();
      auto srcs = h_.neighbours(Port{emb_.at(use.node), Direction::Incoming, use.offset});
      if (srcs.size() != 1) return;
      m.inputs.push_back(srcs.front());
    }
    for (std::uint32_t j = 0; j < f.boundary.outputs.size(); ++j) {
      const Port src = f.hugr.neighbours(in_port(f.output, j)).front();
      m.outputs.push_back(out_port(emb_.at(src.node), src.offset));
    }
    if (!is_current(p_, m, h_)) return;
    std::vector<NodeId> image;
    for (const auto& [pn, hn] : m.embedding) image.push_back(hn);
    if (!is_convex(h_, region_, image)) return;
    found_.push_back(std::move(m));
  }

  const Pattern& p_;
  const Hugr& h_;
  NodeId region_;
  MatchStats* stats_;
  std::vector<Step> steps_;
  std::map<NodeId, NodeId> emb_;
  std::unordered_set<NodeId> used_;
  std::vector<Match> found_;
  bool first_only_ = false;
};

std::string index_key(const OpKind& op) {
  if (const auto* e = std::get_if<op::ExtensionOp>(&op)) return e->extension + "." + e->name;
  return op_tag(op);
}

}  // namespace

// ----------------------------------------------------------------- basics

op::ExtensionOp wildcard(Signature sig) {
  return op::ExtensionOp{std::string(kPatternExt), "Any", {}, std::move(sig)};
}

bool is_wildcard(const OpKind& op) {
  const auto* e = std::get_if<op::ExtensionOp>(&op);
  return e && e->extension == kPatternExt && e->name == "Any";
}

std::string_view code_name(RewriteErrorCode code) {
  switch (code) {
    case RewriteErrorCode::InvalidPattern: return "InvalidPattern";
    case RewriteErrorCode::StaleMatch: return "StaleMatch";
    case RewriteErrorCode::WouldCreateCycle: return "WouldCreateCycle";
    case RewriteErrorCode::ValidationFailed: return "ValidationFailed";
  }
  return "?";
}

RewriteError::RewriteError(RewriteErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(code_name(code)) + ": " + msg), code_(code) {}

NodeId Match::image(NodeId pattern_node) const {
  for (const auto& [p, h] : embedding) {
    if (p == pattern_node) return h;
  }
  throw std::out_of_range("pattern node " + to_string(pattern_node) + " is not embedded");
}

Fragment Fragment::from(Hugr h) {
  const auto top = h.children(h.root());
  if (!is_a<op::Module>(h.op(h.root())) || top.size() != 1 || !is_a<op::FuncDef>(h.op(top[0]))) {
    invalid_pattern("fragment must be a Module holding exactly one FuncDef");
  }
  const NodeId region = top[0];
  const auto& def = std::get<op::FuncDef>(h.op(region));
  if (def.signature.params != 0) invalid_pattern("fragment signature must be monomorphic");
  const auto kids = h.children(region);
  if (kids.size() < 2 || !is_a<op::Input>(h.op(kids[0])) || !is_a<op::Output>(h.op(kids[1]))) {
    invalid_pattern("fragment region must start with Input and Output");
  }
  if (std::get<op::Input>(h.op(kids[0])).types != def.signature.body.inputs ||
      std::get<op::Output>(h.op(kids[1])).types != def.signature.body.outputs) {
    invalid_pattern("fragment Input/Output rows differ from its signature");
  }
  Fragment f{Hugr(), region, kids[0], kids[1], {}, def.signature.body};
  const std::set<NodeId> members(kids.begin(), kids.end());
  for (std::size_t i = 2; i < kids.size(); ++i) f.nodes.push_back(kids[i]);
  for (NodeId n : kids) {
    for (std::uint32_t i = 0; i < h.num_ports(n, Direction::Incoming); ++i) {
      auto srcs = h.neighbours(in_port(n, i));
      if (srcs.size() != 1) {
        invalid_pattern("port " + to_string(in_port(n, i)) + " of the fragment must have exactly one edge");
      }
      if (!members.count(srcs[0].node)) invalid_pattern("fragment edge enters from outside its region");
    }
  }
  f.hugr = std::move(h);
  return f;
}

Pattern Pattern::make(Hugr h, NodeId anchor) {
  Fragment f = Fragment::from(std::move(h));
  const Hugr& g = f.hugr;
  if (f.nodes.empty()) invalid_pattern("pattern has no nodes");
  if (std::find(f.nodes.begin(), f.nodes.end(), anchor) == f.nodes.end()) {
    invalid_pattern("anchor " + to_string(anchor) + " is not a pattern node");
  }
  if (is_wildcard(g.op(anchor))) invalid_pattern("the anchor cannot be a wildcard");
  for (NodeId n : f.nodes) {
    if (!is_leaf(g.op(n))) invalid_pattern("pattern node " + to_string(n) + " is a container");
  }
  for (std::uint32_t i = 0; i < f.boundary.inputs.size(); ++i) {
    auto uses = g.neighbours(out_port(f.input, i));
    if (uses.empty()) invalid_pattern("boundary input " + std::to_string(i) + " is unused");
    for (const Port& u : uses) {
      if (u.node == f.output) invalid_pattern("pattern wires an input straight to an output");
    }
  }
  std::set<Port> out_sources;
  for (std::uint32_t j = 0; j < f.boundary.outputs.size(); ++j) {
    if (!out_sources.insert(g.neighbours(in_port(f.output, j)).front()).second) {
      invalid_pattern("two boundary outputs share a source port");
    }
  }
  Pattern p{std::move(f), anchor};
  if (plan(p).size() + 1 != p.fragment.nodes.size()) invalid_pattern("pattern is not connected");
  return p;
}

RewriteRule RewriteRule::make(std::string name, Pattern lhs, Fragment rhs) {
  if (lhs.fragment.boundary != rhs.boundary) {
    invalid_pattern("rule '" + name + "': boundary " + lhs.fragment.boundary.to_string() + " differs from " +
                    rhs.boundary.to_string());
  }
  return RewriteRule{std::move(name), std::move(lhs), std::move(rhs)};
}

// --------------------------------------------------------------- matching

bool is_current(const Pattern& p, const Match& m, const Hugr& h) {
  const Fragment& f = p.fragment;
  const Hugr& g = f.hugr;
  if (m.embedding.size() != f.nodes.size() || m.inputs.size() != f.boundary.inputs.size() ||
      m.outputs.size() != f.boundary.outputs.size()) {
    return false;
  }
  std::map<NodeId, NodeId> emb;
  std::set<NodeId> image;
  for (const auto& [pn, hn] : m.embedding) {
    if (!h.contains(hn) || h.parent(hn) != m.region) return false;
    if (!op_matches(g.op(pn), h, hn)) return false;
    if (!image.insert(hn).second) return false;
    emb.emplace(pn, hn);
  }
  for (const Port& src : m.inputs) {
    if (!h.contains(src.node) || image.count(src.node)) return false;
  }
  for (NodeId pn : f.nodes) {
    const NodeId hn = emb.at(pn);
    for (std::uint32_t i = 0; i < g.num_ports(pn, Direction::Incoming); ++i) {
      const Port psrc = g.neighbours(in_port(pn, i)).front();
      auto hsrc = h.neighbours(in_port(hn, i));
      if (hsrc.size() != 1) return false;
      const Port expect = psrc.node == f.input ? m.inputs[psrc.offset] : out_port(emb.at(psrc.node), psrc.offset);
      if (hsrc.front() != expect) return false;
    }
    for (std::uint32_t o = 0; o < g.num_ports(pn, Direction::Outgoing); ++o) {
      std::multiset<Port> internal;
      bool boundary = false;
      for (const Port& d : g.neighbours(out_port(pn, o))) {
        if (d.node == f.output) {
          boundary = true;
          if (m.outputs[d.offset] != out_port(hn, o)) return false;
        } else {
          internal.insert(Port{emb.at(d.node), Direction::Incoming, d.offset});
        }
      }
      std::multiset<Port> host_internal;
      for (const Port& d : h.neighbours(out_port(hn, o))) {
        if (image.count(d.node)) {
          host_internal.insert(d);
        } else if (!boundary) {
          return false;
        }
      }
      if (internal != host_internal) return false;
    }
  }
  return true;
}

bool is_convex(const Hugr& h, NodeId region, const std::vector<NodeId>& image) {
  const std::unordered_set<NodeId> in_image(image.begin(), image.end());
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> work;
  auto push_successors = [&](NodeId n) {
    for (std::uint32_t o = 0; o < h.num_ports(n, Direction::Outgoing); ++o) {
      for (const Port& d : h.neighbours(out_port(n, o))) {
        if (h.parent(d.node) == region && !in_image.count(d.node) && seen.insert(d.node).second) {
          work.push_back(d.node);
        }
      }
    }
  };
  for (NodeId n : image) push_successors(n);
  while (!work.empty()) {
    const NodeId n = work.back();
    work.pop_back();
    for (std::uint32_t o = 0; o < h.num_ports(n, Direction::Outgoing); ++o) {
      for (const Port& d : h.neighbours(out_port(n, o))) {
        if (in_image.count(d.node)) return false;
      }
    }
    push_successors(n);
  }
  return true;
}

std::vector<Match> find_matches(const Pattern& p, const Hugr& h, NodeId region, MatchStats* stats) {
  std::vector<Match> out;
  if (!h.contains(region) || !is_dataflow_container(h.op(region))) return out;
  Matcher matcher(p, h, region, stats);
  std::vector<NodeId> anchors(h.children(region).begin(), h.children(region).end());
  std::sort(anchors.begin(), anchors.end());
  for (NodeId a : anchors) matcher.at(a, out, false);
  return out;
}

// ------------------------------------------------------------- replacement

void undo(const RewriteDelta& delta, Hugr& h) {
  for (EdgeRef e : delta.added_edges) {
    if (h.contains(e)) h.disconnect(e);
  }
  for (auto it = delta.added.rbegin(); it != delta.added.rend(); ++it) {
    if (h.contains(*it)) h.remove_node(*it);
  }
  for (auto it = delta.removed.rbegin(); it != delta.removed.rend(); ++it) h.reinsert(*it);
}

namespace {

struct DiagKey {
  DiagCode code;
  NodeId node;
  std::optional<Port> port;
  auto operator<=>(const DiagKey&) const = default;
};

std::vector<Diagnostic> region_diagnostics(const Hugr& h, NodeId region, const std::vector<NodeId>& added,
                                           const Registry& r) {
  std::vector<Diagnostic> out = validate_region(h, region, r);
  for (NodeId n : added) {
    for (NodeId d : h.descendants(n)) {
      auto more = validate_region(h, d, r);
      out.insert(out.end(), more.begin(), more.end());
    }
  }
  return out;
}

}  // namespace

RewriteDelta apply(const RewriteRule& rule, const Match& m, Hugr& h, const Registry& r) {
  const Fragment& lhs = rule.lhs.fragment;
  const Fragment& rhs = rule.rhs;
  if (lhs.boundary != rhs.boundary) {
    throw RewriteError(RewriteErrorCode::ValidationFailed, "rule '" + rule.name + "' has mismatched boundaries " +
                                                               lhs.boundary.to_string() + " and " +
                                                               rhs.boundary.to_string());
  }
  if (auto d = validate(rhs.hugr, r); !d.empty()) {
    throw RewriteError(RewriteErrorCode::ValidationFailed,
                       "rule '" + rule.name + "' has an invalid replacement: " + render(d.front()));
  }
  if (!is_current(rule.lhs, m, h)) {
    throw RewriteError(RewriteErrorCode::StaleMatch, "match of rule '" + rule.name + "' no longer holds");
  }
  std::vector<NodeId> image;
  for (const auto& [pn, hn] : m.embedding) image.push_back(hn);
  if (!is_convex(h, m.region, image)) {
    throw RewriteError(RewriteErrorCode::WouldCreateCycle, "match of rule '" + rule.name + "' is not convex");
  }
  const std::unordered_set<NodeId> in_image(image.begin(), image.end());
  std::set<DiagKey> before;
  for (const Diagnostic& d : validate_region(h, m.region, r)) before.insert(DiagKey{d.code, d.node, d.port});

  // External consumers of each boundary output, with the kind they expect.
  std::vector<std::vector<std::pair<Port, EdgeKind>>> consumers(m.outputs.size());
  for (std::size_t j = 0; j < m.outputs.size(); ++j) {
    for (EdgeRef e : h.edges_at(m.outputs[j])) {
      const Edge& edge = h.edge(e);
      if (!in_image.count(edge.dst.node)) consumers[j].emplace_back(edge.dst, edge.kind);
    }
  }

  RewriteDelta delta{m.region, {}, {}, {}};
  try {
    for (NodeId n : image) delta.removed.push_back(h.remove_node(n));

    const Hugr& g = rhs.hugr;
    std::map<NodeId, NodeId> copy;
    std::vector<NodeId> order;
    auto clone = [&](auto& self, NodeId n, NodeId parent) -> NodeId {
      const NodeId c = h.add_node(g.op(n), parent);
      copy.emplace(n, c);
      order.push_back(n);
      const std::vector<NodeId> kids(g.children(n).begin(), g.children(n).end());
      for (NodeId k : kids) self(self, k, c);
      return c;
    };
    for (NodeId n : rhs.nodes) delta.added.push_back(clone(clone, n, m.region));

    auto source = [&](const Port& src) {
      return src.node == rhs.input ? m.inputs.at(src.offset) : out_port(copy.at(src.node), src.offset);
    };
    for (NodeId n : order) {
      for (std::uint32_t i = 0; i < g.num_ports(n, Direction::Incoming); ++i) {
        for (EdgeRef e : g.edges_at(in_port(n, i))) {
          const Edge& edge = g.edge(e);
          delta.added_edges.push_back(h.connect(source(edge.src), in_port(copy.at(n), i), edge.kind));
        }
      }
    }
    for (std::size_t j = 0; j < consumers.size(); ++j) {
      const Port src = source(g.edge(g.edges_at(in_port(rhs.output, static_cast<std::uint32_t>(j))).front()).src);
      for (const auto& [dst, kind] : consumers[j]) delta.added_edges.push_back(h.connect(src, dst, kind));
    }
  } catch (const HugrError& e) {
    undo(delta, h);
    throw RewriteError(RewriteErrorCode::ValidationFailed, std::string("rule '") + rule.name + "': " + e.what());
  }

  // Only problems the rewrite introduced count.
  for (const Diagnostic& d : region_diagnostics(h, m.region, delta.added, r)) {
    if (!before.count(DiagKey{d.code, d.node, d.port})) {
      undo(delta, h);
      throw RewriteError(RewriteErrorCode::ValidationFailed,
                         "rule '" + rule.name + "' would break the region: " + render(d));
    }
  }
  return delta;
}

// -------------------------------------------------------------- saturation

namespace {

/// Nodes by op family, kept in sync with the host across applications.
class OpIndex {
 public:
  explicit OpIndex(const Hugr& h) {
    for (NodeId n : h.nodes()) add(h, n);
  }
  void add(const Hugr& h, NodeId n) { by_key_[index_key(h.op(n))].insert(n); }
  void erase(const Hugr& h, NodeId n) {
    auto it = by_key_.find(index_key(h.op(n)));
    if (it != by_key_.end()) it->second.erase(n);
  }
  const std::set<NodeId>& at(const std::string& key) const {
    static const std::set<NodeId> none;
    auto it = by_key_.find(key);
    return it == by_key_.end() ? none : it->second;
  }

 private:
  std::map<std::string, std::set<NodeId>> by_key_;
};

std::optional<Match> leftmost(const RewriteRule& rule, const Hugr& h, const OpIndex& index) {
  const Pattern& p = rule.lhs;
  for (NodeId a : index.at(index_key(p.fragment.hugr.op(p.anchor)))) {
    const auto region = h.parent(a);
    if (!region || !is_dataflow_container(h.op(*region))) continue;
    std::vector<Match> found;
    Matcher(p, h, *region, nullptr).at(a, found, true);
    if (!found.empty()) return std::move(found.front());
  }
  return std::nullopt;
}

}  // namespace

SaturateResult saturate(const std::vector<RewriteRule>& rules, Hugr& h, std::size_t budget, const Registry& r,
                        const std::function<void(const Hugr&, const AppliedRewrite&)>& observer) {
  SaturateResult result;
  OpIndex index(h);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const RewriteRule& rule : rules) {
      while (true) {
        auto m = leftmost(rule, h, index);
        if (!m) break;
        if (result.applied.size() >= budget) {
          result.budget_exhausted = true;
          return result;
        }
        std::vector<NodeId> gone;
        for (const auto& [pn, hn] : m->embedding) {
          for (NodeId d : h.descendants(hn)) gone.push_back(d);
        }
        for (NodeId n : gone) index.erase(h, n);
        RewriteDelta delta;
        try {
          delta = apply(rule, *m, h, r);
        } catch (...) {
          for (NodeId n : gone) index.add(h, n);
          throw;
        }
        for (NodeId n : delta.added) {
          for (NodeId d : h.descendants(n)) index.add(h, d);
        }
        result.applied.push_back(AppliedRewrite{rule.name, m->image(rule.lhs.anchor)});
        changed = true;
        if (observer) observer(h, result.applied.back());
      }
    }
  }
  return result;
}

// ------------------------------------------------------------ standard rules

namespace {

using BodyFn = std::function<std::vector<Wire>(RegionBuilder&, NodeId& anchor)>;

Hugr fragment_hugr(const Signature& sig, const BodyFn& body, NodeId* anchor) {
  Hugr h(op::Module{});
  RegionBuilder b = define_function(h, h.root(), "fragment", sig);
  NodeId a;
  b.finish(body(b, a));
  if (anchor) *anchor = a;
  return h;
}

RewriteRule make_rule(std::string name, const Signature& sig, const BodyFn& lhs, const BodyFn& rhs) {
  NodeId anchor;
  Hugr l = fragment_hugr(sig, lhs, &anchor);
  Hugr rh = fragment_hugr(sig, rhs, nullptr);
  return RewriteRule::make(std::move(name), Pattern::make(std::move(l), anchor), Fragment::from(std::move(rh)));
}

}  // namespace

std::vector<RewriteRule> standard_rules(const Registry& r) {
  const Type q = qubit_type();
  const Type f = float_type();
  auto pair_of = [&r](const char* gate) {
    return [&r, gate](RegionBuilder& b, NodeId& anchor) {
      auto first = b.q(r, gate, {b.input(0)});
      anchor = first[0].node;
      return b.q(r, gate, first);
    };
  };
  auto wire = [](RegionBuilder& b, NodeId&) { return b.inputs(); };
  std::vector<RewriteRule> rules;
  rules.push_back(make_rule("hh_cancel", Signature{{q}, {q}}, pair_of("H"), wire));
  rules.push_back(make_rule("xx_cancel", Signature{{q}, {q}}, pair_of("X"), wire));
  rules.push_back(make_rule(
      "rz_merge", Signature{{q, f, f}, {q}},
      [&r](RegionBuilder& b, NodeId& anchor) {
        auto first = b.q(r, "Rz", {b.input(0), b.input(1)});
        anchor = first[0].node;
        return b.q(r, "Rz", {first[0], b.input(2)});
      },
      [&r](RegionBuilder& b, NodeId&) {
        Wire sum = b.c(r, "Add", {b.input(1), b.input(2)})[0];
        return b.q(r, "Rz", {b.input(0), sum});
      }));
  rules.push_back(make_rule(
      "cx_cancel", Signature{{q, q}, {q, q}},
      [&r](RegionBuilder& b, NodeId& anchor) {
        auto first = b.q(r, "CX", b.inputs());
        anchor = first[0].node;
        return b.q(r, "CX", first);
      },
      wire));
  return rules;
}

// ---------------------------------------------------------------- rule files

std::string encode_rule(const RewriteRule& rule) {
  using nlohmann::json;
  json doc;
  doc["name"] = rule.name;
  doc["anchor"] = canonical_ids(rule.lhs.fragment.hugr).at(rule.lhs.anchor);
  doc["lhs"] = json::parse(encode(rule.lhs.fragment.hugr));
  doc["rhs"] = json::parse(encode(rule.rhs.hugr));
  return doc.dump(2) + "\n";
}

RewriteRule decode_rule(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DecodeError(std::string("rule is not valid JSON: ") + e.what());
  }
  for (const char* key : {"name", "anchor", "lhs", "rhs"}) {
    if (!doc.is_object() || !doc.contains(key)) throw DecodeError(std::string("rule is missing '") + key + "'");
  }
  if (!doc["name"].is_string() || !doc["anchor"].is_number_unsigned()) {
    throw DecodeError("rule 'name' must be a string and 'anchor' a node id");
  }
  Decoded lhs = decode_document(doc["lhs"].dump());
  Decoded rhs = decode_document(doc["rhs"].dump());
  auto anchor = lhs.ids.find(doc["anchor"].get<std::uint64_t>());
  if (anchor == lhs.ids.end()) throw DecodeError("rule anchor is not a node of its left-hand side");
  return RewriteRule::make(doc["name"].get<std::string>(), Pattern::make(std::move(lhs.hugr), anchor->second),
                           Fragment::from(std::move(rhs.hugr)));
}

}  // namespace hugr
