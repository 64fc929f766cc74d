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

#include "hugr/validate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

namespace hugr {

std::string_view code_name(DiagCode code) {
  switch (code) {
    case DiagCode::NonTreeHierarchy:
      return "NonTreeHierarchy";
    case DiagCode::BadChildKind:
      return "BadChildKind";
    case DiagCode::MissingIO:
      return "MissingIO";
    case DiagCode::EdgeTypeMismatch:
      return "EdgeTypeMismatch";
    case DiagCode::LinearityViolation:
      return "LinearityViolation";
    case DiagCode::InputPortUnwired:
      return "InputPortUnwired";
    case DiagCode::DataflowCycle:
      return "DataflowCycle";
    case DiagCode::CaseArityMismatch:
      return "CaseArityMismatch";
    case DiagCode::CaseSignatureMismatch:
      return "CaseSignatureMismatch";
    case DiagCode::LoopSignatureMismatch:
      return "LoopSignatureMismatch";
    case DiagCode::CfgShapeError:
      return "CfgShapeError";
    case DiagCode::StaticScopeError:
      return "StaticScopeError";
    case DiagCode::UnknownOp:
      return "UnknownOp";
  }
  return "?";
}

std::string render(const Diagnostic& d) {
  std::string out(code_name(d.code));
  out += " node=" + std::to_string(d.node.index) + " port=";
  if (d.port) {
    out += (d.port->direction == Direction::Incoming ? "in" : "out") + std::to_string(d.port->offset);
  } else {
    out += "-";
  }
  return out + ": " + d.message;
}

namespace {

class RegionChecker {
 public:
  RegionChecker(const Hugr& h, const Registry& r, std::vector<Diagnostic>& out) : h_(h), r_(r), out_(out) {}

  void check(NodeId parent) {
    const OpKind& op = h_.op(parent);
    if (is_a<op::Module>(op)) {
      check_module(parent);
    } else if (is_dataflow_container(op)) {
      check_dataflow(parent);
    } else if (const auto* c = std::get_if<op::Conditional>(&op)) {
      check_conditional(parent, *c);
    } else if (const auto* c = std::get_if<op::CFG>(&op)) {
      check_cfg(parent, *c);
    } else {
      for (NodeId child : h_.children(parent)) {
        report(DiagCode::BadChildKind, child, std::nullopt, op_tag(op) + " cannot have children");
      }
    }
    for (NodeId child : h_.children(parent)) {
      check_node(child);
      check_incoming(parent, child);
      check_linear_outputs(child);
    }
    check_acyclic(parent);
  }

 private:
  void report(DiagCode code, NodeId n, std::optional<Port> p, std::string msg) {
    out_.push_back(Diagnostic{code, n, p, std::move(msg)});
  }

  std::optional<TypeRow> io_row(NodeId container, std::size_t index) const {
    auto ch = h_.children(container);
    if (ch.size() <= index) return std::nullopt;
    if (index == 0) {
      if (const auto* in = std::get_if<op::Input>(&h_.op(ch[0]))) return in->types;
    } else if (const auto* o = std::get_if<op::Output>(&h_.op(ch[1]))) {
      return o->types;
    }
    return std::nullopt;
  }

  void check_module(NodeId parent) {
    for (NodeId child : h_.children(parent)) {
      const OpKind& op = h_.op(child);
      if (!is_a<op::FuncDef>(op) && !is_a<op::FuncDecl>(op)) {
        report(DiagCode::BadChildKind, child, std::nullopt, op_tag(op) + " is not allowed in a Module");
      }
    }
  }

  void check_dataflow(NodeId parent) {
    auto ch = h_.children(parent);
    const OpKind& op = h_.op(parent);
    const bool has_io = ch.size() >= 2 && is_a<op::Input>(h_.op(ch[0])) && is_a<op::Output>(h_.op(ch[1]));
    if (!has_io) {
      report(DiagCode::MissingIO, parent, std::nullopt,
             op_tag(op) + " region must start with Input and Output nodes");
    }
    for (std::size_t i = has_io ? 2 : 0; i < ch.size(); ++i) {
      const OpKind& cop = h_.op(ch[i]);
      if (!is_dataflow_member(cop)) {
        report(DiagCode::BadChildKind, ch[i], std::nullopt,
               op_tag(cop) + " is not allowed in a dataflow region");
      }
    }
    if (!has_io) return;
    const TypeRow ins = *io_row(parent, 0);
    const TypeRow outs = *io_row(parent, 1);

    if (const auto* f = std::get_if<op::FuncDef>(&op)) {
      if (ins != f->signature.body.inputs || outs != f->signature.body.outputs) {
        report(DiagCode::MissingIO, parent, std::nullopt,
               "Input/Output rows do not match function signature " + f->signature.to_string());
      }
    } else if (const auto* l = std::get_if<op::TailLoop>(&op)) {
      TypeRow expected{Type::boolean()};
      expected.insert(expected.end(), l->loop_vars.begin(), l->loop_vars.end());
      if (ins != l->loop_vars || outs != expected) {
        report(DiagCode::LoopSignatureMismatch, parent, std::nullopt,
               "loop body must map (" + row_to_string(l->loop_vars) + ") to (" + row_to_string(expected) +
                   "), found (" + row_to_string(ins) + ") -> (" + row_to_string(outs) + ")");
      }
    } else if (const auto* b = std::get_if<op::BasicBlock>(&op)) {
      TypeRow expected{Type::enumeration(std::max<std::uint32_t>(b->successors, 1))};
      expected.insert(expected.end(), b->other_outputs.begin(), b->other_outputs.end());
      if (b->successors == 0) {
        report(DiagCode::CfgShapeError, parent, std::nullopt, "basic block needs at least one successor");
      } else if (ins != b->inputs || outs != expected) {
        report(DiagCode::CfgShapeError, parent, std::nullopt,
               "block body must map (" + row_to_string(b->inputs) + ") to (" + row_to_string(expected) + ")");
      }
    }
    // Case rows are checked from the enclosing Conditional.
  }

  void check_conditional(NodeId parent, const op::Conditional& c) {
    auto ch = h_.children(parent);
    std::uint32_t cases = 0;
    for (NodeId child : ch) {
      if (!is_a<op::Case>(h_.op(child))) {
        report(DiagCode::BadChildKind, child, std::nullopt,
               op_tag(h_.op(child)) + " is not allowed in a Conditional");
        continue;
      }
      ++cases;
      auto ins = io_row(child, 0);
      auto outs = io_row(child, 1);
      if (ins && outs && (*ins != c.other_inputs || *outs != c.outputs)) {
        report(DiagCode::CaseSignatureMismatch, child, std::nullopt,
               "case must map (" + row_to_string(c.other_inputs) + ") to (" + row_to_string(c.outputs) + ")");
      }
    }
    if (c.cases == 0 || cases != c.cases) {
      report(DiagCode::CaseArityMismatch, parent, std::nullopt,
             "discriminant has " + std::to_string(c.cases) + " tag(s) but there are " + std::to_string(cases) +
                 " Case node(s)");
    }
  }

  void check_cfg(NodeId parent, const op::CFG& c) {
    auto ch = h_.children(parent);
    std::size_t exits = 0;
    for (NodeId child : ch) {
      const OpKind& op = h_.op(child);
      if (const auto* e = std::get_if<op::ExitBlock>(&op)) {
        ++exits;
        if (e->outputs != c.signature.outputs) {
          report(DiagCode::CfgShapeError, child, std::nullopt, "exit block row differs from CFG outputs");
        }
      } else if (const auto* b = std::get_if<op::BasicBlock>(&op)) {
        for (std::uint32_t s = 0; s < b->successors; ++s) {
          auto succ = h_.edges_at(out_port(child, s));
          if (succ.size() != 1) {
            report(DiagCode::CfgShapeError, child, out_port(child, s),
                   "successor port needs exactly one control-flow edge, found " + std::to_string(succ.size()));
            continue;
          }
          const NodeId target = h_.edge(succ[0]).dst.node;
          const OpKind& top = h_.op(target);
          const TypeRow* target_in = nullptr;
          if (const auto* tb = std::get_if<op::BasicBlock>(&top)) target_in = &tb->inputs;
          if (const auto* te = std::get_if<op::ExitBlock>(&top)) target_in = &te->outputs;
          if (target_in && *target_in != b->other_outputs) {
            report(DiagCode::CfgShapeError, child, out_port(child, s),
                   "successor expects (" + row_to_string(*target_in) + ") but block passes (" +
                       row_to_string(b->other_outputs) + ")");
          }
        }
      } else {
        report(DiagCode::BadChildKind, child, std::nullopt, op_tag(op) + " is not allowed in a CFG");
      }
    }
    if (exits != 1) {
      report(DiagCode::CfgShapeError, parent, std::nullopt,
             "CFG needs exactly one ExitBlock, found " + std::to_string(exits));
    }
    if (ch.empty() || !is_a<op::BasicBlock>(h_.op(ch[0]))) {
      report(DiagCode::CfgShapeError, parent, std::nullopt, "first child of a CFG must be the entry BasicBlock");
    } else if (std::get<op::BasicBlock>(h_.op(ch[0])).inputs != c.signature.inputs) {
      report(DiagCode::CfgShapeError, ch[0], std::nullopt, "entry block inputs differ from CFG inputs");
    }
  }

  void check_types_resolve(NodeId n, const std::vector<EdgeKind>& ports, Direction d) {
    for (std::uint32_t i = 0; i < ports.size(); ++i) {
      if (!ports[i].type) continue;
      try {
        check_type(*ports[i].type, r_);
      } catch (const UnknownOpError& e) {
        report(DiagCode::UnknownOp, n, Port{n, d, i}, e.what());
      }
    }
  }

  void check_node(NodeId n) {
    const OpKind& op = h_.op(n);
    if (const auto* e = std::get_if<op::ExtensionOp>(&op)) {
      try {
        Signature sig = signature_of(op, r_);
        if (sig != e->signature) {
          report(DiagCode::UnknownOp, n, std::nullopt,
                 e->extension + "." + e->name + " carries signature " + e->signature.to_string() +
                     " but the registry defines " + sig.to_string());
        }
      } catch (const std::exception& err) {
        report(DiagCode::UnknownOp, n, std::nullopt, err.what());
      }
    }
    const PortRows& rows = h_.port_kinds(n);
    check_types_resolve(n, rows.in, Direction::Incoming);
    check_types_resolve(n, rows.out, Direction::Outgoing);
  }

  static const PolySignature* static_scheme(const OpKind& op) {
    if (const auto* f = std::get_if<op::FuncDef>(&op)) return &f->signature;
    if (const auto* f = std::get_if<op::FuncDecl>(&op)) return &f->signature;
    if (const auto* c = std::get_if<op::Call>(&op)) return &c->callee;
    if (const auto* c = std::get_if<op::LoadFunction>(&op)) return &c->callee;
    return nullptr;
  }

  void check_incoming(NodeId region, NodeId n) {
    const PortRows& rows = h_.port_kinds(n);
    for (std::uint32_t i = 0; i < rows.in.size(); ++i) {
      const Port p = in_port(n, i);
      const EdgeKind& want = rows.in[i];
      auto links = h_.edges_at(p);
      for (EdgeRef ref : links) {
        const Edge& e = h_.edge(ref);
        const EdgeKind& have = h_.port_kind(e.src);
        if (e.kind != want || have != want) {
          report(DiagCode::EdgeTypeMismatch, n, p,
                 "edge " + e.kind.to_string() + " from " + to_string(e.src) + " (" + have.to_string() +
                     ") into port expecting " + want.to_string());
          continue;
        }
        const NodeId src_parent = h_.parent(e.src.node).value_or(h_.root());
        if (want.is_value() && src_parent != region) {
          report(DiagCode::EdgeTypeMismatch, n, p, "value edge from " + to_string(e.src) + " crosses a region boundary");
        } else if (want.is_control_flow() && src_parent != region) {
          report(DiagCode::CfgShapeError, n, p, "control-flow edge from another CFG");
        } else if (want.is_static()) {
          if (!h_.parent(e.src.node) || !h_.is_ancestor_or_self(src_parent, region)) {
            report(DiagCode::StaticScopeError, n, p,
                   "static source " + to_string(e.src.node) + " is not visible from this region");
          }
          const PolySignature* from = static_scheme(h_.op(e.src.node));
          const PolySignature* to = static_scheme(h_.op(n));
          if (from && to && *from != *to) {
            report(DiagCode::EdgeTypeMismatch, n, p,
                   "callee scheme " + to->to_string() + " differs from source " + from->to_string());
          }
        }
      }
      if (!want.is_control_flow() && links.size() != 1) {
        report(DiagCode::InputPortUnwired, n, p,
               "input port needs exactly one edge, found " + std::to_string(links.size()));
      }
    }
  }

  void check_linear_outputs(NodeId n) {
    const PortRows& rows = h_.port_kinds(n);
    for (std::uint32_t i = 0; i < rows.out.size(); ++i) {
      const EdgeKind& k = rows.out[i];
      if (!k.is_value()) continue;
      bool linear = true;
      try {
        linear = k.type->is_var() || is_linear(*k.type, r_);
      } catch (const std::exception&) {
        continue;  // already reported as UnknownOp
      }
      if (!linear) continue;
      const std::size_t uses = h_.edges_at(out_port(n, i)).size();
      if (uses != 1) {
        report(DiagCode::LinearityViolation, n, out_port(n, i),
               "linear value of type " + k.type->to_string() + " must have exactly one use, found " +
                   std::to_string(uses));
      }
    }
  }

  void check_acyclic(NodeId region) {
    auto ch = h_.children(region);
    if (ch.empty()) return;
    std::map<NodeId, std::size_t> indegree;
    for (NodeId c : ch) indegree[c] = 0;
    std::map<NodeId, std::vector<NodeId>> succ;
    for (NodeId c : ch) {
      const PortRows& rows = h_.port_kinds(c);
      for (std::uint32_t i = 0; i < rows.out.size(); ++i) {
        for (EdgeRef ref : h_.edges_at(out_port(c, i))) {
          const Edge& e = h_.edge(ref);
          if (e.kind.is_control_flow()) continue;
          auto it = indegree.find(e.dst.node);
          if (it == indegree.end()) continue;
          ++it->second;
          succ[c].push_back(e.dst.node);
        }
      }
    }
    std::queue<NodeId> ready;
    for (const auto& [n, d] : indegree) {
      if (d == 0) ready.push(n);
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
      NodeId n = ready.front();
      ready.pop();
      ++visited;
      for (NodeId m : succ[n]) {
        if (--indegree[m] == 0) ready.push(m);
      }
    }
    if (visited == ch.size()) return;
    for (const auto& [n, d] : indegree) {
      if (d > 0) {
        report(DiagCode::DataflowCycle, n, std::nullopt,
               "dataflow cycle among the children of " + to_string(region));
        return;
      }
    }
  }

  const Hugr& h_;
  const Registry& r_;
  std::vector<Diagnostic>& out_;
};

void sort_diagnostics(std::vector<Diagnostic>& d) {
  std::stable_sort(d.begin(), d.end(), [](const Diagnostic& a, const Diagnostic& b) {
    auto key = [](const Diagnostic& x) {
      return std::make_tuple(x.node.index, x.port.has_value(),
                             x.port ? static_cast<int>(x.port->direction) : 0, x.port ? x.port->offset : 0u);
    };
    return key(a) < key(b);
  });
}

}  // namespace

std::vector<Diagnostic> validate_region(const Hugr& h, NodeId parent, const Registry& r) {
  if (!h.contains(parent)) throw HugrError("unknown node " + to_string(parent));
  std::vector<Diagnostic> out;
  RegionChecker(h, r, out).check(parent);
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> validate(const Hugr& h, const Registry& r) {
  std::vector<Diagnostic> out;
  if (!is_a<op::Module>(h.op(h.root()))) {
    out.push_back({DiagCode::NonTreeHierarchy, h.root(), std::nullopt,
                   "root must be a Module, found " + op_tag(h.op(h.root()))});
  }
  try {
    h.check_invariants();
  } catch (const HugrError& e) {
    out.push_back({DiagCode::NonTreeHierarchy, h.root(), std::nullopt, e.what()});
  }
  RegionChecker checker(h, r, out);
  for (NodeId n : h.nodes()) checker.check(n);
  sort_diagnostics(out);
  return out;
}

std::vector<Port> discarded_values(const Hugr& h, const Registry& r) {
  std::vector<Port> out;
  for (NodeId n : h.nodes()) {
    const PortRows& rows = h.port_kinds(n);
    for (std::uint32_t i = 0; i < rows.out.size(); ++i) {
      if (!rows.out[i].is_value() || !h.edges_at(out_port(n, i)).empty()) continue;
      try {
        if (!is_linear(*rows.out[i].type, r)) out.push_back(out_port(n, i));
      } catch (const std::exception&) {
      }
    }
  }
  return out;
}

}  // namespace hugr
