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

#include "hugr/structure.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include "hugr/builder.hpp"
#include "hugr/validate.hpp"

namespace hugr {

namespace {

/// Cooper-Harvey-Kennedy over an index graph. Unreachable nodes get -1.
std::vector<int> immediate_dominators(const std::vector<std::vector<int>>& succ, int root) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> postorder;
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  seen[root] = 1;
  while (!stack.empty()) {
    const int v = stack.back().first;
    const std::size_t i = stack.back().second;
    if (i < succ[v].size()) {
      ++stack.back().second;
      const int w = succ[v][i];
      if (!seen[w]) {
        seen[w] = 1;
        stack.emplace_back(w, 0);
      }
    } else {
      postorder.push_back(v);
      stack.pop_back();
    }
  }
  std::vector<int> po(n, -1);
  for (int i = 0; i < static_cast<int>(postorder.size()); ++i) po[postorder[i]] = i;
  std::vector<std::vector<int>> preds(n);
  for (int v = 0; v < n; ++v) {
    for (int w : succ[v]) preds[w].push_back(v);
  }

  std::vector<int> idom(n, -1);
  idom[root] = root;
  auto intersect = [&](int a, int b) {
    while (a != b) {
      while (po[a] < po[b]) a = idom[a];
      while (po[b] < po[a]) b = idom[b];
    }
    return a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
      const int b = *it;
      if (b == root) continue;
      int next = -1;
      for (int p : preds[b]) {
        if (idom[p] == -1) continue;
        next = next == -1 ? p : intersect(p, next);
      }
      if (next != idom[b]) {
        idom[b] = next;
        changed = true;
      }
    }
  }
  return idom;
}

const TypeRow& block_inputs(const Hugr& h, NodeId b) {
  if (const auto* bb = std::get_if<op::BasicBlock>(&h.op(b))) return bb->inputs;
  return std::get<op::ExitBlock>(h.op(b)).outputs;
}

}  // namespace

std::string_view code_name(StructureErrorCode code) {
  switch (code) {
    case StructureErrorCode::IrreducibleCfg: return "IrreducibleCfg";
    case StructureErrorCode::InvalidInput: return "InvalidInput";
    case StructureErrorCode::UnsupportedLoop: return "UnsupportedLoop";
  }
  return "?";
}

StructureError::StructureError(StructureErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(code_name(code)) + ": " + msg), code_(code) {}

std::vector<NodeId> CfgView::preds(NodeId b) const {
  std::vector<NodeId> out;
  for (NodeId x : blocks) {
    auto it = succ.find(x);
    if (it == succ.end()) continue;
    if (std::find(it->second.begin(), it->second.end(), b) != it->second.end()) out.push_back(x);
  }
  return out;
}

CfgView cfg_view(const Hugr& h, NodeId cfg) {
  if (!is_a<op::CFG>(h.op(cfg))) throw std::invalid_argument(to_string(cfg) + " is not a CFG");
  CfgView c;
  std::optional<NodeId> exit;
  for (NodeId b : h.children(cfg)) {
    if (is_a<op::ExitBlock>(h.op(b))) {
      if (exit) throw std::invalid_argument("CFG " + to_string(cfg) + " has more than one exit block");
      exit = b;
    } else if (!is_a<op::BasicBlock>(h.op(b))) {
      throw std::invalid_argument("CFG " + to_string(cfg) + " contains a non-block child");
    }
    c.blocks.push_back(b);
  }
  if (!exit) throw std::invalid_argument("CFG " + to_string(cfg) + " has no exit block");
  if (c.blocks.front() == *exit) throw std::invalid_argument("CFG " + to_string(cfg) + " starts with its exit block");
  c.entry = c.blocks.front();
  c.exit = *exit;
  for (NodeId b : c.blocks) {
    auto& list = c.succ[b];
    for (std::uint32_t i = 0; i < h.num_ports(b, Direction::Outgoing); ++i) {
      auto targets = h.neighbours(out_port(b, i));
      if (targets.size() != 1) {
        throw std::invalid_argument("successor " + std::to_string(i) + " of " + to_string(b) +
                                    " is not wired to exactly one block");
      }
      list.push_back(targets.front().node);
    }
  }
  return c;
}

CfgView prune_unreachable(const CfgView& c, std::vector<NodeId>* pruned) {
  std::set<NodeId> seen{c.entry};
  std::vector<NodeId> work{c.entry};
  while (!work.empty()) {
    NodeId b = work.back();
    work.pop_back();
    auto it = c.succ.find(b);
    if (it == c.succ.end()) continue;
    for (NodeId s : it->second) {
      if (seen.insert(s).second) work.push_back(s);
    }
  }
  CfgView out;
  out.entry = c.entry;
  out.exit = c.exit;
  for (NodeId b : c.blocks) {
    if (seen.count(b) || b == c.exit) {
      out.blocks.push_back(b);
      out.succ[b] = c.succ.count(b) ? c.succ.at(b) : std::vector<NodeId>{};
    } else if (pruned) {
      pruned->push_back(b);
    }
  }
  return out;
}

std::map<NodeId, NodeId> dominators(const CfgView& view) {
  const CfgView c = prune_unreachable(view);
  std::map<NodeId, int> index;
  for (NodeId b : c.blocks) index.emplace(b, static_cast<int>(index.size()));
  std::vector<std::vector<int>> succ(c.blocks.size());
  for (NodeId b : c.blocks) {
    for (NodeId s : c.succ.at(b)) succ[index.at(b)].push_back(index.at(s));
  }
  const std::vector<int> idom = immediate_dominators(succ, index.at(c.entry));
  std::map<NodeId, NodeId> out;
  for (NodeId b : c.blocks) {
    const int d = idom[index.at(b)];
    if (d >= 0) out.emplace(b, c.blocks[d]);
  }
  return out;
}

bool is_reducible(const CfgView& view) {
  const CfgView c = prune_unreachable(view);
  std::map<NodeId, std::set<NodeId>> succ;
  std::map<NodeId, std::set<NodeId>> pred;
  for (NodeId b : c.blocks) {
    succ[b];
    pred[b];
  }
  for (NodeId b : c.blocks) {
    for (NodeId s : c.succ.at(b)) {
      succ[b].insert(s);
      pred[s].insert(b);
    }
  }
  // An unreachable exit is not part of the graph being reduced.
  if (pred[c.exit].empty() && c.exit != c.entry) {
    succ.erase(c.exit);
    pred.erase(c.exit);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [b, s] : succ) {
      if (s.erase(b)) {  // T1
        pred[b].erase(b);
        changed = true;
      }
    }
    for (auto& [b, p] : pred) {
      if (b == c.entry || p.size() != 1) continue;
      const NodeId into = *p.begin();  // T2: fold b into its only predecessor
      succ[into].erase(b);
      for (NodeId s : succ[b]) {
        succ[into].insert(s);
        pred[s].erase(b);
        pred[s].insert(into);
      }
      succ.erase(b);
      pred.erase(b);
      changed = true;
      break;
    }
  }
  return succ.size() == 1;
}

std::vector<LoopCandidate> find_loops(const CfgView& view, const std::map<NodeId, NodeId>& idom) {
  const CfgView c = prune_unreachable(view);
  auto dominates = [&](NodeId a, NodeId b) {
    for (;;) {
      if (a == b) return true;
      auto it = idom.find(b);
      if (it == idom.end() || it->second == b) return false;
      b = it->second;
    }
  };
  std::map<NodeId, LoopCandidate> by_header;
  for (NodeId t : c.blocks) {
    if (!idom.count(t)) continue;
    for (NodeId h : c.succ.at(t)) {
      if (!dominates(h, t)) continue;
      LoopCandidate& l = by_header[h];
      l.header = h;
      l.back_edges.emplace_back(t, h);
      l.body.insert(h);
      std::vector<NodeId> work;
      if (l.body.insert(t).second) work.push_back(t);
      while (!work.empty()) {
        NodeId b = work.back();
        work.pop_back();
        for (NodeId p : c.preds(b)) {
          if (idom.count(p) && l.body.insert(p).second) work.push_back(p);
        }
      }
    }
  }
  std::vector<LoopCandidate> out;
  for (NodeId b : c.blocks) {
    auto it = by_header.find(b);
    if (it != by_header.end()) out.push_back(std::move(it->second));
  }
  return out;
}

namespace {

class Structurer {
 public:
  Structurer(Hugr& h, NodeId cfg, StructureReport& report) : h_(h), cfg_(cfg), report_(report) {}

  void run();

 private:
  struct Loop {
    NodeId header;
    std::set<NodeId> body;
    std::vector<NodeId> exits;
    const Loop* parent = nullptr;
  };

  /// Acyclic view of one nesting level: inner loops collapsed to their
  /// header, edges leaving the level dropped. Used for join points.
  struct Level {
    std::map<NodeId, std::optional<NodeId>> ipdom;
  };

  struct Ctx {
    RegionBuilder rb;
    const Loop* loop;
    TypeRow result_row;
  };

  void analyse();
  NodeId representative(NodeId t, const Loop* level) const;
  std::optional<NodeId> classify(NodeId t, const Loop* level) const;
  std::vector<NodeId> level_successors(NodeId x, const Loop* level) const;
  const Level& level(const Loop* l);

  std::vector<Wire> emit(NodeId target, std::vector<Wire> vals, Ctx& ctx, std::optional<NodeId> stop);
  std::vector<Wire> emit_block(NodeId b, const std::vector<Wire>& vals, Ctx& ctx, std::optional<NodeId> stop);
  std::vector<Wire> emit_loop(const Loop& l, const std::vector<Wire>& vals, Ctx& ctx, std::optional<NodeId> stop);
  std::vector<Wire> branch(NodeId node, const std::vector<NodeId>& targets, std::optional<Wire> disc,
                           const std::vector<Wire>& others, Ctx& ctx, std::optional<NodeId> stop);
  std::vector<Wire> loop_result(const Loop& l, bool done, std::uint32_t selector, const std::vector<Wire>& vals,
                                RegionBuilder& rb);
  std::pair<Wire, std::vector<Wire>> inline_block(NodeId b, const std::vector<Wire>& vals, NodeId into);
  void drop_tag(Wire w);

  Hugr& h_;
  NodeId cfg_;
  StructureReport& report_;
  CfgView view_;
  std::vector<std::unique_ptr<Loop>> loops_;
  std::map<NodeId, const Loop*> header_loop_;
  std::map<NodeId, const Loop*> innermost_;
  std::map<const Loop*, Level> levels_;
};

void Structurer::analyse() {
  std::vector<NodeId> pruned;
  view_ = prune_unreachable(cfg_view(h_, cfg_), &pruned);
  for (NodeId b : pruned) report_.warnings.push_back("pruned unreachable block " + to_string(b));
  if (!is_reducible(view_)) {
    throw StructureError(StructureErrorCode::IrreducibleCfg,
                         "CFG " + to_string(cfg_) + " has a cycle with more than one entry");
  }
  const auto idom = dominators(view_);
  for (LoopCandidate& cand : find_loops(view_, idom)) {
    auto l = std::make_unique<Loop>();
    l->header = cand.header;
    l->body = std::move(cand.body);
    for (NodeId b : view_.blocks) {
      if (!l->body.count(b)) continue;
      for (NodeId s : view_.succ.at(b)) {
        if (!l->body.count(s) && std::find(l->exits.begin(), l->exits.end(), s) == l->exits.end()) {
          l->exits.push_back(s);
        }
      }
    }
    if (l->exits.empty()) {
      throw StructureError(StructureErrorCode::UnsupportedLoop,
                           "loop headed by " + to_string(l->header) + " never exits");
    }
    const TypeRow& row = block_inputs(h_, l->header);
    for (NodeId e : l->exits) {
      if (block_inputs(h_, e) != row) {
        throw StructureError(StructureErrorCode::UnsupportedLoop,
                             "loop headed by " + to_string(l->header) + " exits to " + to_string(e) +
                                 " with inputs " + row_to_string(block_inputs(h_, e)) + ", expected " +
                                 row_to_string(row));
      }
    }
    header_loop_[l->header] = l.get();
    loops_.push_back(std::move(l));
  }
  // Smallest enclosing loop first; in a reducible graph loops nest.
  std::vector<const Loop*> by_size;
  for (const auto& l : loops_) by_size.push_back(l.get());
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Loop* a, const Loop* b) { return a->body.size() < b->body.size(); });
  for (const Loop* l : by_size) {
    for (NodeId b : l->body) innermost_.emplace(b, l);
  }
  for (const auto& l : loops_) {
    for (const Loop* outer : by_size) {
      if (outer != l.get() && outer->body.size() > l->body.size() && outer->body.count(l->header)) {
        l->parent = outer;
        break;
      }
    }
  }
}

NodeId Structurer::representative(NodeId t, const Loop* level) const {
  auto it = innermost_.find(t);
  const Loop* l = it == innermost_.end() ? nullptr : it->second;
  if (l == level) return t;
  while (l && l->parent != level) l = l->parent;
  return l ? l->header : t;
}

std::optional<NodeId> Structurer::classify(NodeId t, const Loop* level) const {
  if (level && (t == level->header || !level->body.count(t))) return std::nullopt;
  if (t == view_.exit) return std::nullopt;
  return representative(t, level);
}

std::vector<NodeId> Structurer::level_successors(NodeId x, const Loop* level) const {
  auto it = header_loop_.find(x);
  if (it != header_loop_.end() && it->second != level) return it->second->exits;
  return view_.succ.at(x);
}

const Structurer::Level& Structurer::level(const Loop* l) {
  auto found = levels_.find(l);
  if (found != levels_.end()) return found->second;

  // Nodes of this level, discovered from its entry.
  const NodeId entry = l ? l->header : view_.entry;
  std::vector<NodeId> nodes{entry};
  std::map<NodeId, int> index{{entry, 1}};  // 0 is the virtual sink
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId t : level_successors(nodes[i], l)) {
      auto g = classify(t, l);
      if (g && !index.count(*g)) {
        index.emplace(*g, static_cast<int>(nodes.size()) + 1);
        nodes.push_back(*g);
      }
    }
  }
  // Reverse graph rooted at the sink gives post-dominators.
  std::vector<std::vector<int>> rsucc(nodes.size() + 1);
  for (NodeId x : nodes) {
    for (NodeId t : level_successors(x, l)) {
      auto g = classify(t, l);
      rsucc[g ? index.at(*g) : 0].push_back(index.at(x));
    }
  }
  const std::vector<int> ipdom = immediate_dominators(rsucc, 0);
  Level out;
  for (NodeId x : nodes) {
    const int d = ipdom[index.at(x)];
    out.ipdom[x] = d > 0 ? std::optional<NodeId>(nodes[d - 1]) : std::nullopt;
  }
  return levels_.emplace(l, std::move(out)).first->second;
}

void Structurer::drop_tag(Wire w) {
  if (!is_a<op::LoadConst>(h_.op(w.node)) || !h_.neighbours(w.port()).empty()) return;
  auto src = h_.neighbours(in_port(w.node, 0));
  h_.remove_node(w.node);
  if (src.size() == 1 && is_a<op::Const>(h_.op(src[0].node)) && h_.neighbours(out_port(src[0].node, 0)).empty()) {
    h_.remove_node(src[0].node);
  }
}

std::pair<Wire, std::vector<Wire>> Structurer::inline_block(NodeId b, const std::vector<Wire>& vals, NodeId into) {
  const std::vector<NodeId> kids(h_.children(b).begin(), h_.children(b).end());
  const NodeId input = kids[0];
  const NodeId output = kids[1];
  std::map<NodeId, NodeId> copy;
  std::vector<NodeId> order;
  auto clone = [&](auto& self, NodeId n, NodeId parent) -> void {
    const NodeId m = h_.add_node(h_.op(n), parent);
    copy.emplace(n, m);
    order.push_back(n);
    const std::vector<NodeId> sub(h_.children(n).begin(), h_.children(n).end());
    for (NodeId c : sub) self(self, c, m);
  };
  for (std::size_t i = 2; i < kids.size(); ++i) clone(clone, kids[i], into);

  auto source = [&](const Port& src) {
    if (src.node == input) return vals.at(src.offset).port();
    auto it = copy.find(src.node);
    return it == copy.end() ? src : out_port(it->second, src.offset);
  };
  for (NodeId n : order) {
    for (std::uint32_t i = 0; i < h_.num_ports(n, Direction::Incoming); ++i) {
      std::vector<Edge> edges;
      for (EdgeRef e : h_.edges_at(in_port(n, i))) edges.push_back(h_.edge(e));
      for (const Edge& e : edges) h_.connect(source(e.src), in_port(copy.at(n), i), e.kind);
    }
  }
  std::vector<Wire> outs;
  for (std::uint32_t i = 0; i < h_.num_ports(output, Direction::Incoming); ++i) {
    const Port src = source(h_.edge(h_.edges_at(in_port(output, i)).front()).src);
    outs.push_back(Wire{src.node, src.offset});
  }
  Wire tag = outs.front();
  outs.erase(outs.begin());
  return {tag, outs};
}

std::vector<Wire> Structurer::loop_result(const Loop& l, bool done, std::uint32_t selector,
                                          const std::vector<Wire>& vals, RegionBuilder& rb) {
  std::vector<Wire> out{rb.tag(done ? 1 : 0, 2)};
  const auto m = static_cast<std::uint32_t>(l.exits.size());
  if (m > 1) out.push_back(rb.tag(selector, m));
  out.insert(out.end(), vals.begin(), vals.end());
  return out;
}

std::vector<Wire> Structurer::emit(NodeId t, std::vector<Wire> vals, Ctx& ctx, std::optional<NodeId> stop) {
  if (stop && t == *stop) return vals;
  if (ctx.loop) {
    if (t == ctx.loop->header) return loop_result(*ctx.loop, false, 0, vals, ctx.rb);
    if (!ctx.loop->body.count(t)) {
      const auto& exits = ctx.loop->exits;
      const auto j = static_cast<std::uint32_t>(std::find(exits.begin(), exits.end(), t) - exits.begin());
      return loop_result(*ctx.loop, true, j, vals, ctx.rb);
    }
  }
  if (t == view_.exit) return vals;
  if (representative(t, ctx.loop) != t) {
    throw StructureError(StructureErrorCode::IrreducibleCfg, "loop entered at " + to_string(t));
  }
  auto it = header_loop_.find(t);
  if (it != header_loop_.end() && it->second != ctx.loop) return emit_loop(*it->second, vals, ctx, stop);
  return emit_block(t, vals, ctx, stop);
}

std::vector<Wire> Structurer::emit_block(NodeId b, const std::vector<Wire>& vals, Ctx& ctx,
                                         std::optional<NodeId> stop) {
  auto [tag, others] = inline_block(b, vals, ctx.rb.container());
  return branch(b, view_.succ.at(b), tag, others, ctx, stop);
}

std::vector<Wire> Structurer::emit_loop(const Loop& l, const std::vector<Wire>& vals, Ctx& ctx,
                                        std::optional<NodeId> stop) {
  const auto m = static_cast<std::uint32_t>(l.exits.size());
  std::vector<Wire> vars;
  if (m > 1) vars.push_back(ctx.rb.tag(0, m));
  vars.insert(vars.end(), vals.begin(), vals.end());
  TailLoopBuilder tl = add_tail_loop(ctx.rb, vars);

  TypeRow row{Type::boolean()};
  if (m > 1) row.push_back(Type::enumeration(m));
  const TypeRow& header_row = block_inputs(h_, l.header);
  row.insert(row.end(), header_row.begin(), header_row.end());
  Ctx inner{tl.body, &l, row};
  std::vector<Wire> header_vals = tl.body.inputs();
  if (m > 1) header_vals.erase(header_vals.begin());
  tl.body.finish(emit_block(l.header, header_vals, inner, std::nullopt));

  std::vector<Wire> outs = tl.outputs();
  std::optional<Wire> disc;
  if (m > 1) {
    disc = outs.front();
    outs.erase(outs.begin());
  }
  return branch(l.header, l.exits, disc, outs, ctx, stop);
}

std::vector<Wire> Structurer::branch(NodeId node, const std::vector<NodeId>& targets, std::optional<Wire> disc,
                                     const std::vector<Wire>& others, Ctx& ctx, std::optional<NodeId> stop) {
  if (targets.size() == 1) {
    if (disc) drop_tag(*disc);
    return emit(targets.front(), others, ctx, stop);
  }
  const std::optional<NodeId> join = level(ctx.loop).ipdom.at(node);
  if (!join && stop) throw std::logic_error("structuring: branch escapes its enclosing join");
  const TypeRow row = join ? block_inputs(h_, *join) : ctx.result_row;
  ConditionalBuilder cond(ctx.rb, *disc, static_cast<std::uint32_t>(targets.size()), others, row);
  for (NodeId t : targets) {
    Ctx inner{cond.add_case(), ctx.loop, ctx.result_row};
    inner.rb.finish(emit(t, inner.rb.inputs(), inner, join ? join : stop));
  }
  if (join) return emit(*join, cond.outputs(), ctx, stop);
  return cond.outputs();
}

void Structurer::run() {
  analyse();
  const NodeId parent = *h_.parent(cfg_);
  const Signature sig = std::get<op::CFG>(h_.op(cfg_)).signature;

  std::vector<Wire> ins;
  for (std::uint32_t i = 0; i < h_.num_ports(cfg_, Direction::Incoming); ++i) {
    const Port src = h_.edge(h_.edges_at(in_port(cfg_, i)).front()).src;
    ins.push_back(Wire{src.node, src.offset});
  }
  std::vector<std::vector<Port>> consumers;
  for (std::uint32_t o = 0; o < h_.num_ports(cfg_, Direction::Outgoing); ++o) {
    consumers.push_back(h_.neighbours(out_port(cfg_, o)));
  }

  Ctx top{RegionBuilder::attach(h_, parent), nullptr, sig.outputs};
  const std::vector<Wire> results = emit(view_.entry, ins, top, std::nullopt);

  h_.remove_node(cfg_);
  for (std::size_t o = 0; o < consumers.size(); ++o) {
    for (const Port& dst : consumers[o]) h_.connect(results.at(o).port(), dst, EdgeKind::value(sig.outputs[o]));
  }
  ++report_.converted;
}

std::vector<Diagnostic> subtree_diagnostics(const Hugr& h, NodeId top, const Registry& r) {
  std::vector<Diagnostic> out;
  for (NodeId n : h.descendants(top)) {
    auto d = validate_region(h, n, r);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

void structure_in_place(Hugr& h, NodeId cfg, const Registry& r, StructureReport& report) {
  if (!h.contains(cfg) || !is_a<op::CFG>(h.op(cfg))) {
    throw StructureError(StructureErrorCode::InvalidInput, "" + to_string(cfg) + " is not a CFG");
  }
  auto parent = h.parent(cfg);
  if (!parent) throw StructureError(StructureErrorCode::InvalidInput, "CFG has no parent region");
  auto diags = subtree_diagnostics(h, cfg, r);
  for (const Diagnostic& d : validate_region(h, *parent, r)) {
    if (d.node == cfg) diags.push_back(d);
  }
  if (!diags.empty()) {
    throw StructureError(StructureErrorCode::InvalidInput, "" + render(diags.front()));
  }
  Structurer(h, cfg, report).run();
  auto after = subtree_diagnostics(h, *parent, r);
  if (!after.empty()) throw std::logic_error("structuring produced an invalid region: " + render(after.front()));
}

}  // namespace

StructureReport structure_cfg(Hugr& h, NodeId cfg, const Registry& r) {
  StructureReport report;
  Hugr work = h;
  structure_in_place(work, cfg, r, report);
  h = std::move(work);
  return report;
}

StructureReport structure_all(Hugr& h, const Registry& r) {
  StructureReport report;
  std::vector<NodeId> cfgs;
  for (NodeId n : h.descendants(h.root())) {
    if (is_a<op::CFG>(h.op(n))) cfgs.push_back(n);
  }
  if (cfgs.empty()) return report;
  Hugr work = h;
  for (auto it = cfgs.rbegin(); it != cfgs.rend(); ++it) structure_in_place(work, *it, r, report);
  h = std::move(work);
  return report;
}

}  // namespace hugr
