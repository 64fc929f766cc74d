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

#include "hugr/ops.hpp"

#include <sstream>

#include "hugr/extension.hpp"

namespace hugr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<EdgeKind> values(const TypeRow& row) {
  std::vector<EdgeKind> out;
  out.reserve(row.size());
  for (const Type& t : row) out.push_back(EdgeKind::value(t));
  return out;
}

}  // namespace

const char* edge_kind_name(EdgeKind::Tag tag) {
  switch (tag) {
    case EdgeKind::Tag::Value:
      return "Value";
    case EdgeKind::Tag::Static:
      return "Static";
    case EdgeKind::Tag::ControlFlow:
      return "ControlFlow";
  }
  return "?";
}

std::string EdgeKind::to_string() const {
  std::string s = edge_kind_name(tag);
  if (type) s += "(" + type->to_string() + ")";
  return s;
}

PortRows ports_of(const OpKind& op) {
  return std::visit(
      overloaded{
          [](const op::Module&) { return PortRows{}; },
          [](const op::FuncDef& f) {
            return PortRows{{}, {EdgeKind::constant(Type::function(f.signature.body))}};
          },
          [](const op::FuncDecl& f) {
            return PortRows{{}, {EdgeKind::constant(Type::function(f.signature.body))}};
          },
          [](const op::Input& o) { return PortRows{{}, values(o.types)}; },
          [](const op::Output& o) { return PortRows{values(o.types), {}}; },
          [](const op::Call& c) {
            Signature sig = instantiate(c.callee, c.type_args);
            PortRows rows{values(sig.inputs), values(sig.outputs)};
            rows.in.push_back(EdgeKind::constant(Type::function(c.callee.body)));
            return rows;
          },
          [](const op::LoadFunction& c) {
            Signature sig = instantiate(c.callee, c.type_args);
            return PortRows{{EdgeKind::constant(Type::function(c.callee.body))},
                            {EdgeKind::value(Type::function(std::move(sig)))}};
          },
          [](const op::Const& c) { return PortRows{{}, {EdgeKind::constant(c.type)}}; },
          [](const op::LoadConst& c) {
            return PortRows{{EdgeKind::constant(c.type)}, {EdgeKind::value(c.type)}};
          },
          [](const op::Conditional& c) {
            PortRows rows{{EdgeKind::value(Type::enumeration(c.cases == 0 ? 1 : c.cases))},
                          values(c.outputs)};
            for (const Type& t : c.other_inputs) rows.in.push_back(EdgeKind::value(t));
            return rows;
          },
          [](const op::Case&) { return PortRows{}; },
          [](const op::TailLoop& l) { return PortRows{values(l.loop_vars), values(l.loop_vars)}; },
          [](const op::CFG& c) { return PortRows{values(c.signature.inputs), values(c.signature.outputs)}; },
          [](const op::BasicBlock& b) {
            return PortRows{{EdgeKind::control_flow()},
                            std::vector<EdgeKind>(b.successors, EdgeKind::control_flow())};
          },
          [](const op::ExitBlock&) { return PortRows{{EdgeKind::control_flow()}, {}}; },
          [](const op::ExtensionOp& e) {
            return PortRows{values(e.signature.inputs), values(e.signature.outputs)};
          },
      },
      op);
}

std::string op_tag(const OpKind& op) {
  return std::visit(overloaded{
                        [](const op::Module&) { return "Module"; },
                        [](const op::FuncDef&) { return "FuncDef"; },
                        [](const op::FuncDecl&) { return "FuncDecl"; },
                        [](const op::Input&) { return "Input"; },
                        [](const op::Output&) { return "Output"; },
                        [](const op::Call&) { return "Call"; },
                        [](const op::LoadFunction&) { return "LoadFunction"; },
                        [](const op::Const&) { return "Const"; },
                        [](const op::LoadConst&) { return "LoadConst"; },
                        [](const op::Conditional&) { return "Conditional"; },
                        [](const op::Case&) { return "Case"; },
                        [](const op::TailLoop&) { return "TailLoop"; },
                        [](const op::CFG&) { return "CFG"; },
                        [](const op::BasicBlock&) { return "BasicBlock"; },
                        [](const op::ExitBlock&) { return "ExitBlock"; },
                        [](const op::ExtensionOp&) { return "ExtensionOp"; },
                    },
                    op);
}

std::string op_label(const OpKind& op) {
  if (const auto* e = std::get_if<op::ExtensionOp>(&op)) return e->extension + "." + e->name;
  if (const auto* f = std::get_if<op::FuncDef>(&op)) return "FuncDef(" + f->name + ")";
  if (const auto* f = std::get_if<op::FuncDecl>(&op)) return "FuncDecl(" + f->name + ")";
  if (const auto* c = std::get_if<op::Const>(&op)) return "Const(" + const_to_string(c->value) + ")";
  return op_tag(op);
}

bool is_dataflow_container(const OpKind& op) {
  return is_a<op::FuncDef>(op) || is_a<op::Case>(op) || is_a<op::TailLoop>(op) ||
         is_a<op::BasicBlock>(op);
}

bool is_dataflow_member(const OpKind& op) {
  return is_a<op::Call>(op) || is_a<op::LoadFunction>(op) || is_a<op::Const>(op) ||
         is_a<op::LoadConst>(op) || is_a<op::Conditional>(op) || is_a<op::TailLoop>(op) ||
         is_a<op::CFG>(op) || is_a<op::ExtensionOp>(op) || is_a<op::FuncDef>(op) ||
         is_a<op::FuncDecl>(op);
}

bool is_leaf(const OpKind& op) {
  return is_a<op::Input>(op) || is_a<op::Output>(op) || is_a<op::Call>(op) ||
         is_a<op::LoadFunction>(op) || is_a<op::Const>(op) || is_a<op::LoadConst>(op) ||
         is_a<op::ExitBlock>(op) || is_a<op::ExtensionOp>(op) || is_a<op::FuncDecl>(op);
}

Type type_of_const(const ConstValue& v) {
  return std::visit(overloaded{
                        [](double) { return float_type(); },
                        [](std::int64_t) { return int_type(); },
                        [](const EnumTag& t) { return Type::enumeration(t.size); },
                    },
                    v);
}

std::string const_to_string(const ConstValue& v) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](double d) { os << d; },
                 [&](std::int64_t i) { os << i; },
                 [&](const EnumTag& t) {
                   if (t.size == 2) {
                     os << (t.tag ? "true" : "false");
                   } else {
                     os << "tag" << t.tag << "/" << t.size;
                   }
                 },
             },
             v);
  return os.str();
}

}  // namespace hugr
