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

// Generators and brute-force oracles shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hugr/builder.hpp"
#include "hugr/extension.hpp"
#include "hugr/fixtures.hpp"
#include "hugr/hugr.hpp"
#include "hugr/interp.hpp"
#include "hugr/rewrite.hpp"
#include "hugr/validate.hpp"

namespace hugr::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_angle(Rng& rng) { return std::uniform_real_distribution<double>(-3.2, 3.2)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline NodeId main_of(const Hugr& h) { return *find_function(h, "main"); }

inline std::size_t count_ops(const Hugr& h, const std::function<bool(const OpKind&)>& pred) {
  std::size_t n = 0;
  for (NodeId id : h.nodes()) n += pred(h.op(id)) ? 1 : 0;
  return n;
}

inline std::size_t count_ext(const Hugr& h, std::string_view name) {
  return count_ops(h, [name](const OpKind& op) {
    const auto* e = std::get_if<op::ExtensionOp>(&op);
    return e && e->name == name;
  });
}

// ------------------------------------------------------------------ circuits

/// Random gates on `n` qubits. With probability `repeat` a gate repeats the
/// previous one on the same qubits, which seeds cancellation opportunities.
inline std::vector<fixtures::Gate> random_gates(Rng& rng, unsigned n, std::size_t count, double repeat = 0.3) {
  static const std::vector<std::string> one = {"H", "X", "Z", "T", "Tdg", "TxDg", "Rz", "Rx"};
  std::vector<fixtures::Gate> gates;
  for (std::size_t i = 0; i < count; ++i) {
    if (!gates.empty() && coin(rng, repeat)) {
      fixtures::Gate g = gates.back();
      if (g.angle) g.angle = uniform_angle(rng);
      gates.push_back(g);
      continue;
    }
    if (n > 1 && coin(rng, 0.3)) {
      const auto a = static_cast<unsigned>(uniform(rng, 0, n - 1));
      auto b = static_cast<unsigned>(uniform(rng, 0, n - 2));
      if (b >= a) ++b;
      gates.push_back(fixtures::Gate{"CX", {a, b}, {}});
      continue;
    }
    const std::string& name = one[uniform(rng, 0, one.size() - 1)];
    fixtures::Gate g{name, {static_cast<unsigned>(uniform(rng, 0, n - 1))}, {}};
    if (name == "Rz" || name == "Rx") g.angle = uniform_angle(rng);
    gates.push_back(g);
  }
  return gates;
}

// ---------------------------------------------------------- nested programs

/// Valid programs "main": qubit^n, f64 -> qubit^n with random gates, float
/// arithmetic, Conditionals and TailLoops nested up to `depth`.
class ProgramGen {
 public:
  ProgramGen(const Registry& r, Rng& rng) : r_(r), rng_(rng) {}

  Hugr make(unsigned qubits, std::size_t steps, unsigned depth) {
    Hugr h(op::Module{});
    TypeRow ins(qubits, qubit_type());
    ins.push_back(float_type());
    RegionBuilder b = define_function(h, h.root(), "main", Signature{ins, TypeRow(qubits, qubit_type())});
    std::vector<Wire> qs = b.inputs();
    std::vector<Wire> fs{qs.back()};
    qs.pop_back();
    fill(b, qs, fs, steps, depth);
    b.finish(qs);
    return h;
  }

 private:
  Wire some_float(RegionBuilder& b, std::vector<Wire>& fs) {
    if (fs.empty() || coin(rng_, 0.3)) fs.push_back(b.constant(uniform_angle(rng_)));
    return fs[uniform(rng_, 0, fs.size() - 1)];
  }

  void fill(RegionBuilder& b, std::vector<Wire>& qs, std::vector<Wire>& fs, std::size_t steps, unsigned depth) {
    static const char* one[] = {"H", "X", "Z", "T", "Tdg", "TxDg"};
    for (std::size_t s = 0; s < steps; ++s) {
      const std::size_t i = uniform(rng_, 0, qs.size() - 1);
      switch (uniform(rng_, 0, depth > 0 ? 6 : 4)) {
        case 0:
        case 1:
          qs[i] = b.q(r_, one[uniform(rng_, 0, 5)], {qs[i]})[0];
          break;
        case 2:
          qs[i] = b.q(r_, coin(rng_) ? "Rz" : "Rx", {qs[i], some_float(b, fs)})[0];
          break;
        case 3:
          if (qs.size() > 1) {
            std::size_t j = uniform(rng_, 0, qs.size() - 2);
            if (j >= i) ++j;
            auto out = b.q(r_, "CX", {qs[i], qs[j]});
            qs[i] = out[0];
            qs[j] = out[1];
          }
          break;
        case 4: {
          const char* op = coin(rng_) ? "Add" : "Mul";
          fs.push_back(b.c(r_, op, {some_float(b, fs), some_float(b, fs)})[0]);
          break;
        }
        case 5: {
          auto m = b.q(r_, "Measure", {qs[i]});
          qs[i] = m[0];
          ConditionalBuilder cond(b, m[1], 2, qs, TypeRow(qs.size(), qubit_type()));
          for (int c = 0; c < 2; ++c) {
            RegionBuilder cb = cond.add_case();
            std::vector<Wire> inner = cb.inputs();
            std::vector<Wire> inner_fs;
            fill(cb, inner, inner_fs, uniform(rng_, 0, steps / 2), depth - 1);
            cb.finish(inner);
          }
          qs = cond.outputs();
          break;
        }
        case 6: {
          TailLoopBuilder loop = add_tail_loop(b, qs);
          RegionBuilder& body = loop.body;
          std::vector<Wire> inner = body.inputs();
          std::vector<Wire> inner_fs;
          fill(body, inner, inner_fs, uniform(rng_, 0, steps / 2), depth - 1);
          Wire a = body.q(r_, "H", body.q(r_, "QAlloc", {}))[0];
          auto m = body.q(r_, "Measure", {a});
          body.q(r_, "QFree", {m[0]});
          std::vector<Wire> outs{m[1]};
          outs.insert(outs.end(), inner.begin(), inner.end());
          body.finish(outs);
          qs = loop.outputs();
          break;
        }
        default:
          break;
      }
    }
  }

  const Registry& r_;
  Rng& rng_;
};

// ------------------------------------------------------- fault injection

enum class Fault { DuplicatedQubit, DanglingQubit, TypeMismatch };

/// The diagnostic an injected fault must produce.
struct ExpectedDiag {
  DiagCode code;
  NodeId node;
  Port port;
};

/// Injects one fault into a valid graph. Returns nullopt when the graph
/// offers no place for this kind of fault.
inline std::optional<ExpectedDiag> inject_fault(Hugr& h, Fault fault, Rng& rng) {
  std::vector<EdgeRef> qubit_edges;
  std::vector<EdgeRef> value_edges;
  for (EdgeRef e : h.edges()) {
    const Edge& edge = h.edge(e);
    if (!edge.kind.is_value()) continue;
    value_edges.push_back(e);
    if (*edge.kind.type == qubit_type()) qubit_edges.push_back(e);
  }
  auto pick = [&rng](const std::vector<EdgeRef>& v) { return v[uniform(rng, 0, v.size() - 1)]; };
  switch (fault) {
    case Fault::DanglingQubit: {
      if (qubit_edges.empty()) return std::nullopt;
      const Edge e = h.edge(pick(qubit_edges));
      h.disconnect(h.edges_at(e.src).front());
      return ExpectedDiag{DiagCode::LinearityViolation, e.src.node, e.src};
    }
    case Fault::DuplicatedQubit: {
      if (qubit_edges.size() < 2) return std::nullopt;
      const Edge e = h.edge(pick(qubit_edges));
      std::vector<EdgeRef> others;
      for (EdgeRef o : qubit_edges) {
        const Edge& oe = h.edge(o);
        if (oe.dst != e.dst && oe.src != e.src && h.parent(oe.dst.node) == h.parent(e.src.node)) others.push_back(o);
      }
      if (others.empty()) return std::nullopt;
      const EdgeRef victim = pick(others);
      const Port dst = h.edge(victim).dst;
      h.disconnect(victim);
      h.connect(e.src, dst, e.kind);
      return ExpectedDiag{DiagCode::LinearityViolation, e.src.node, e.src};
    }
    case Fault::TypeMismatch: {
      if (value_edges.empty()) return std::nullopt;
      const Edge e = h.edge(pick(value_edges));
      const NodeId region = *h.parent(e.dst.node);
      std::vector<Port> sources;
      for (NodeId n : h.children(region)) {
        for (std::uint32_t o = 0; o < h.num_ports(n, Direction::Outgoing); ++o) {
          const EdgeKind& k = h.port_kind(out_port(n, o));
          if (k.is_value() && *k.type != *e.kind.type) sources.push_back(out_port(n, o));
        }
      }
      if (sources.empty()) return std::nullopt;
      const Port src = sources[uniform(rng, 0, sources.size() - 1)];
      h.disconnect(h.edges_at(e.dst).front());
      h.connect(src, e.dst, h.port_kind(src));
      return ExpectedDiag{DiagCode::EdgeTypeMismatch, e.dst.node, e.dst};
    }
  }
  return std::nullopt;
}

inline bool reports(const std::vector<Diagnostic>& diags, const ExpectedDiag& want) {
  return std::any_of(diags.begin(), diags.end(), [&](const Diagnostic& d) {
    return d.code == want.code && d.node == want.node && d.port == want.port;
  });
}

// ------------------------------------------------------- reducible CFGs

/// Shape of a generated CFG: successor lists over blocks 0..n-1, block n-1
/// being the exit.
struct CfgShape {
  std::vector<std::vector<std::size_t>> succ;
};

/// Random reducible shape: a forward DAG in which every block reaches the
/// exit, plus back edges that only target dominators.
inline CfgShape random_reducible_shape(Rng& rng, std::size_t blocks) {
  const std::size_t n = std::max<std::size_t>(blocks, 2);
  CfgShape s;
  s.succ.resize(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::set<std::size_t> targets{uniform(rng, i + 1, n - 1)};
    if (i + 2 < n && coin(rng, 0.4)) targets.insert(uniform(rng, i + 1, n - 1));
    s.succ[i].assign(targets.begin(), targets.end());
    std::shuffle(s.succ[i].begin(), s.succ[i].end(), rng);
  }
  // Dominators of the forward DAG by path removal.
  auto reaches_without = [&](std::size_t target, std::size_t removed) {
    if (removed == 0) return target == 0;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> work{0};
    seen[0] = true;
    while (!work.empty()) {
      const std::size_t b = work.back();
      work.pop_back();
      if (b == target) return true;
      for (std::size_t t : s.succ[b]) {
        if (t != removed && !seen[t]) {
          seen[t] = true;
          work.push_back(t);
        }
      }
    }
    return false;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (s.succ[i].size() >= 3 || !coin(rng, 0.35)) continue;
    std::vector<std::size_t> doms;
    for (std::size_t d = 0; d <= i; ++d) {
      if (d == i || !reaches_without(i, d)) doms.push_back(d);
    }
    const std::size_t header = doms[uniform(rng, 0, doms.size() - 1)];
    if (std::find(s.succ[i].begin(), s.succ[i].end(), header) == s.succ[i].end()) {
      s.succ[i].insert(s.succ[i].begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, s.succ[i].size())), header);
    }
  }
  return s;
}

/// Fair coin from a fresh ancilla: never an impossible scripted outcome.
inline Wire fair_bit(RegionBuilder& b, const Registry& r) {
  Wire a = b.q(r, "H", b.q(r, "QAlloc", {}))[0];
  auto m = b.q(r, "Measure", {a});
  b.q(r, "QFree", {m[0]});
  return m[1];
}

/// Enum(k) selector driven by fair coins.
inline Wire random_selector(RegionBuilder& b, const Registry& r, std::uint32_t k) {
  if (k == 1) return b.tag(0, 1);
  if (k == 2) return fair_bit(b, r);
  Wire first = fair_bit(b, r);
  Wire second = fair_bit(b, r);
  ConditionalBuilder outer(b, first, 2, {second}, {Type::enumeration(k)});
  RegionBuilder zero = outer.add_case();
  zero.finish({zero.tag(0, k)});
  RegionBuilder one = outer.add_case();
  ConditionalBuilder inner(one, one.input(0), 2, {}, {Type::enumeration(k)});
  for (std::uint32_t t = 1; t <= 2; ++t) {
    RegionBuilder c = inner.add_case();
    c.finish({c.tag(t, k)});
  }
  one.finish(inner.outputs());
  return outer.outputs()[0];
}

/// "main": qubit -> qubit whose body is a CFG of the given shape. Each block
/// applies a random gate to the data qubit before branching.
inline Hugr cfg_program(const Registry& r, Rng& rng, const CfgShape& shape) {
  static const char* gates[] = {"H", "X", "Z", "T", "Tdg", "TxDg", "Rz", "Rx"};
  const Type q = qubit_type();
  Hugr h(op::Module{});
  RegionBuilder b = define_function(h, h.root(), "main", Signature{{q}, {q}});
  CfgBuilder cfg(b, {b.input(0)}, {q});
  const std::size_t n = shape.succ.size();
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto k = static_cast<std::uint32_t>(shape.succ[i].size());
    RegionBuilder blk = cfg.add_block({q}, {q}, k);
    Wire d = blk.input(0);
    if (coin(rng, 0.8)) {
      const std::string name = gates[uniform(rng, 0, 7)];
      if (name == "Rz" || name == "Rx") {
        d = blk.q(r, name, {d, blk.constant(uniform_angle(rng))})[0];
      } else {
        d = blk.q(r, name, {d})[0];
      }
    }
    blk.finish({random_selector(blk, r, k), d});
    ids[i] = blk.container();
  }
  ids[n - 1] = cfg.add_exit();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t t = 0; t < shape.succ[i].size(); ++t) {
      cfg.branch(ids[i], static_cast<std::uint32_t>(t), ids[shape.succ[i][t]]);
    }
  }
  b.finish(cfg.outputs());
  return h;
}

inline std::vector<bool> random_script(Rng& rng, std::size_t length) {
  std::vector<bool> s(length);
  for (std::size_t i = 0; i < length; ++i) s[i] = coin(rng);
  return s;
}

/// Outcome of one interp run, comparable across two programs.
struct RunResult {
  std::optional<InterpErrorCode> error;
  std::vector<std::string> classical;
  Eigen::VectorXcd state;
  std::size_t consumed = 0;
};

inline RunResult run_once(const Hugr& h, const Registry& r, OutcomeSource outcomes,
                          const std::vector<Value>& args = {}) {
  RunResult res;
  Interpreter in(h, r, std::move(outcomes));
  try {
    const auto& sig = std::get<op::FuncDef>(h.op(main_of(h))).signature.body;
    std::vector<Value> full;
    std::size_t next = 0;
    for (const Type& t : sig.inputs) {
      if (t == qubit_type()) {
        full.push_back(QubitRef{in.state().alloc()});
      } else {
        full.push_back(args.at(next++));
      }
    }
    std::vector<std::uint64_t> order;
    for (const Value& v : in.run("main", full)) {
      if (const auto* qr = std::get_if<QubitRef>(&v)) {
        order.push_back(qr->handle);
      } else {
        res.classical.push_back(to_string(v));
      }
    }
    res.state = in.state().amplitudes(order);
  } catch (const InterpError& e) {
    res.error = e.code();
  }
  res.consumed = in.outcomes().consumed();
  return res;
}

inline bool same_run(const RunResult& a, const RunResult& b, double tol = 1e-9) {
  if (a.error != b.error || a.consumed != b.consumed || a.classical != b.classical) return false;
  if (a.error) return true;
  return a.state.size() == b.state.size() && (a.state - b.state).cwiseAbs().maxCoeff() <= tol;
}

/// 2x2 operator the single-qubit "main" applies given a fixed outcome script,
/// built from the images of |0> and |1>.
inline Eigen::Matrix2cd scripted_operator(const Hugr& h, const Registry& r, const std::vector<bool>& script) {
  Eigen::Matrix2cd m;
  for (int col = 0; col < 2; ++col) {
    Interpreter in(h, r, OutcomeSource::scripted(script));
    const std::uint64_t q = in.state().alloc();
    if (col == 1) {
      Eigen::Matrix2cd x;
      x << 0, 1, 1, 0;
      in.state().apply(q, x);
    }
    auto out = in.run("main", {QubitRef{q}});
    m.col(col) = in.state().amplitudes({std::get<QubitRef>(out.at(0)).handle});
  }
  return m;
}

// ------------------------------------------------------ matching oracle

/// Every convex embedding of `p` in the region, by exhaustive enumeration of
/// injective node maps. Independent of the matcher.
inline std::set<std::vector<std::pair<NodeId, NodeId>>> naive_matches(const Pattern& p, const Hugr& h,
                                                                       NodeId region) {
  const Fragment& f = p.fragment;
  const Hugr& g = f.hugr;
  const std::vector<NodeId> pnodes = f.nodes;  // sorted by construction
  std::vector<NodeId> hosts;
  for (NodeId n : h.children(region)) {
    if (!std::holds_alternative<op::Input>(h.op(n)) && !std::holds_alternative<op::Output>(h.op(n))) {
      hosts.push_back(n);
    }
  }
  // Reachability inside the region.
  std::map<NodeId, std::set<NodeId>> reach;
  std::function<const std::set<NodeId>&(NodeId)> reach_of = [&](NodeId n) -> const std::set<NodeId>& {
    auto it = reach.find(n);
    if (it != reach.end()) return it->second;
    std::set<NodeId> out;
    for (std::uint32_t o = 0; o < h.num_ports(n, Direction::Outgoing); ++o) {
      for (const Port& d : h.neighbours(out_port(n, o))) {
        if (h.parent(d.node) != region) continue;
        out.insert(d.node);
        const auto& more = reach_of(d.node);
        out.insert(more.begin(), more.end());
      }
    }
    return reach[n] = std::move(out);
  };

  auto op_ok = [&](NodeId pn, NodeId hn) {
    const OpKind& pop = g.op(pn);
    if (!is_wildcard(pop)) return pop == h.op(hn);
    if (!is_leaf(h.op(hn)) || std::holds_alternative<op::Const>(h.op(hn))) return false;
    Signature sig;
    for (const EdgeKind& k : h.port_kinds(hn).in) {
      if (!k.is_value()) return false;
      sig.inputs.push_back(*k.type);
    }
    for (const EdgeKind& k : h.port_kinds(hn).out) {
      if (!k.is_value()) return false;
      sig.outputs.push_back(*k.type);
    }
    return sig == std::get<op::ExtensionOp>(pop).signature;
  };

  auto check = [&](const std::map<NodeId, NodeId>& emb) {
    std::set<NodeId> image;
    for (const auto& [pn, hn] : emb) image.insert(hn);
    std::map<std::uint32_t, Port> boundary_src;
    for (NodeId pn : pnodes) {
      const NodeId hn = emb.at(pn);
      if (g.num_ports(pn, Direction::Incoming) != h.num_ports(hn, Direction::Incoming)) return false;
      for (std::uint32_t i = 0; i < g.num_ports(pn, Direction::Incoming); ++i) {
        const Port ps = g.neighbours(in_port(pn, i)).at(0);
        const auto hs = h.neighbours(in_port(hn, i));
        if (hs.size() != 1) return false;
        if (ps.node == f.input) {
          if (image.count(hs[0].node)) return false;
          auto [it, fresh] = boundary_src.emplace(ps.offset, hs[0]);
          if (!fresh && it->second != hs[0]) return false;
        } else if (hs[0] != out_port(emb.at(ps.node), ps.offset)) {
          return false;
        }
      }
      for (std::uint32_t o = 0; o < g.num_ports(pn, Direction::Outgoing); ++o) {
        bool to_boundary = false;
        std::multiset<Port> want;
        for (const Port& d : g.neighbours(out_port(pn, o))) {
          if (d.node == f.output) {
            to_boundary = true;
          } else {
            want.insert(in_port(emb.at(d.node), d.offset));
          }
        }
        std::multiset<Port> got;
        for (const Port& d : h.neighbours(out_port(hn, o))) {
          if (image.count(d.node)) {
            got.insert(d);
          } else if (!to_boundary) {
            return false;
          }
        }
        if (want != got) return false;
      }
    }
    // Convex: no path image -> outside -> image.
    for (NodeId a : image) {
      for (NodeId mid : reach_of(a)) {
        if (image.count(mid)) continue;
        for (NodeId b : image) {
          if (reach_of(mid).count(b)) return false;
        }
      }
    }
    return true;
  };

  std::set<std::vector<std::pair<NodeId, NodeId>>> out;
  std::map<NodeId, NodeId> emb;
  std::set<NodeId> used;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == pnodes.size()) {
      if (check(emb)) out.insert(std::vector<std::pair<NodeId, NodeId>>(emb.begin(), emb.end()));
      return;
    }
    for (NodeId hn : hosts) {
      if (used.count(hn) || !op_ok(pnodes[k], hn)) continue;
      emb[pnodes[k]] = hn;
      used.insert(hn);
      go(k + 1);
      used.erase(hn);
      emb.erase(pnodes[k]);
    }
  };
  go(0);
  return out;
}

/// Pattern over a fresh single-function module. `body` returns the region
/// outputs and sets the anchor.
inline Hugr fragment(const Signature& sig,
                     const std::function<std::vector<Wire>(RegionBuilder&, NodeId&)>& body, NodeId* anchor) {
  Hugr h(op::Module{});
  RegionBuilder b = define_function(h, h.root(), "fragment", sig);
  NodeId a;
  b.finish(body(b, a));
  if (anchor) *anchor = a;
  return h;
}

// -------------------------------------------------- commutation benchmark

/// Extension "bench" with `count` single-qubit ops B0..B{count-1}. Even ones
/// are treated as diagonal, odd ones as X-type.
inline Extension bench_extension(std::size_t count) {
  Extension e;
  e.id = "bench";
  for (std::size_t k = 0; k < count; ++k) {
    e.ops.push_back(OpDef{"B" + std::to_string(k), Signature{{qubit_type()}, {qubit_type()}}, ""});
  }
  return e;
}

/// Rule moving `gate` (on the control if `diagonal`, else on the target)
/// from before a CX to after it.
inline RewriteRule commute_rule(const Registry& r, std::string_view ext, std::string_view gate, bool diagonal,
                                bool angled) {
  const Type q = qubit_type();
  Signature sig{{q, q}, {q, q}};
  if (angled) sig.inputs.push_back(float_type());
  const std::uint32_t side = diagonal ? 0 : 1;
  auto apply_gate = [&r, ext, gate, angled](RegionBuilder& b, Wire w) {
    std::vector<Wire> ins{w};
    if (angled) ins.push_back(b.input(2));
    return b.ext(r, ext, gate, ins)[0];
  };
  NodeId anchor;
  Hugr lhs = fragment(
      sig,
      [&](RegionBuilder& b, NodeId& a) {
        std::vector<Wire> ws{b.input(0), b.input(1)};
        ws[side] = apply_gate(b, ws[side]);
        a = ws[side].node;
        return b.q(r, "CX", ws);
      },
      &anchor);
  Hugr rhs = fragment(
      sig,
      [&](RegionBuilder& b, NodeId&) {
        auto ws = b.q(r, "CX", {b.input(0), b.input(1)});
        ws[side] = apply_gate(b, ws[side]);
        return ws;
      },
      nullptr);
  return RewriteRule::make("commute_" + std::string(gate), Pattern::make(std::move(lhs), anchor),
                           Fragment::from(std::move(rhs)));
}

}  // namespace hugr::testing
