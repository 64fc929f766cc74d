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

#include "hugr/builder.hpp"

namespace hugr {

TypeRow wire_types(const Hugr& h, const std::vector<Wire>& wires) {
  TypeRow out;
  out.reserve(wires.size());
  for (const Wire& w : wires) out.push_back(*h.port_kind(w.port()).type);
  return out;
}

RegionBuilder::RegionBuilder(Hugr& h, NodeId container, const TypeRow& inputs, const TypeRow& outputs)
    : h_(&h), container_(container) {
  input_ = h.add_node(op::Input{inputs}, container);
  output_ = h.add_node(op::Output{outputs}, container);
}

RegionBuilder RegionBuilder::attach(Hugr& h, NodeId container) {
  auto kids = h.children(container);
  if (kids.size() < 2 || !is_a<op::Input>(h.op(kids[0])) || !is_a<op::Output>(h.op(kids[1]))) {
    throw HugrError(to_string(container) + " is not a dataflow region");
  }
  return RegionBuilder(h, container, kids[0], kids[1]);
}

std::vector<Wire> RegionBuilder::inputs() const {
  std::vector<Wire> out;
  for (std::uint32_t i = 0; i < h_->num_ports(input_, Direction::Outgoing); ++i) out.push_back(input(i));
  return out;
}

NodeId RegionBuilder::add_node(OpKind op, const std::vector<Wire>& ins) {
  NodeId n = h_->add_node(std::move(op), container_);
  for (std::uint32_t i = 0; i < ins.size(); ++i) h_->connect(ins[i].node, ins[i].offset, n, i);
  return n;
}

std::vector<Wire> RegionBuilder::add(OpKind op, const std::vector<Wire>& ins) {
  NodeId n = add_node(std::move(op), ins);
  std::vector<Wire> out;
  const auto& rows = h_->port_kinds(n);
  for (std::uint32_t i = 0; i < rows.out.size(); ++i) {
    if (rows.out[i].is_value()) out.push_back(Wire{n, i});
  }
  return out;
}

std::vector<Wire> RegionBuilder::ext(const Registry& r, std::string_view extension, std::string_view name,
                                     const std::vector<Wire>& ins, TypeRow type_args) {
  return add(r.make_op(extension, name, std::move(type_args)), ins);
}

Wire RegionBuilder::constant(ConstValue v, Type t) {
  NodeId c = h_->add_node(op::Const{v, t}, container_);
  NodeId load = h_->add_node(op::LoadConst{t}, container_);
  h_->connect(c, 0, load, 0);
  return Wire{load, 0};
}

std::vector<Wire> RegionBuilder::call(NodeId func, const std::vector<Wire>& ins, TypeRow type_args) {
  PolySignature scheme;
  if (const auto* d = std::get_if<op::FuncDef>(&h_->op(func))) {
    scheme = d->signature;
  } else if (const auto* d = std::get_if<op::FuncDecl>(&h_->op(func))) {
    scheme = d->signature;
  } else {
    throw HugrError("call target must be a FuncDef or FuncDecl");
  }
  const auto n_inputs = static_cast<std::uint32_t>(scheme.body.inputs.size());
  NodeId n = add_node(op::Call{scheme, std::move(type_args)}, ins);
  h_->connect(func, 0, n, n_inputs);
  std::vector<Wire> out;
  for (std::uint32_t i = 0; i < h_->num_ports(n, Direction::Outgoing); ++i) out.push_back(Wire{n, i});
  return out;
}

Wire RegionBuilder::load_function(NodeId func, TypeRow type_args) {
  PolySignature scheme;
  if (const auto* d = std::get_if<op::FuncDef>(&h_->op(func))) {
    scheme = d->signature;
  } else if (const auto* d = std::get_if<op::FuncDecl>(&h_->op(func))) {
    scheme = d->signature;
  } else {
    throw HugrError("load_function target must be a FuncDef or FuncDecl");
  }
  NodeId n = h_->add_node(op::LoadFunction{scheme, std::move(type_args)}, container_);
  h_->connect(func, 0, n, 0);
  return Wire{n, 0};
}

void RegionBuilder::finish(const std::vector<Wire>& outs) {
  for (std::uint32_t i = 0; i < outs.size(); ++i) h_->connect(outs[i].node, outs[i].offset, output_, i);
}

RegionBuilder define_function(Hugr& h, NodeId parent, std::string name, PolySignature sig) {
  Signature body = sig.body;
  NodeId f = h.add_node(op::FuncDef{std::move(name), std::move(sig)}, parent);
  return RegionBuilder(h, f, body.inputs, body.outputs);
}

NodeId declare_function(Hugr& h, NodeId parent, std::string name, PolySignature sig) {
  return h.add_node(op::FuncDecl{std::move(name), std::move(sig)}, parent);
}

ConditionalBuilder::ConditionalBuilder(RegionBuilder& parent, Wire discriminant, std::uint32_t cases,
                                       const std::vector<Wire>& others, TypeRow outputs)
    : h_(&parent.hugr()), other_inputs_(wire_types(parent.hugr(), others)), outputs_(std::move(outputs)) {
  std::vector<Wire> ins{discriminant};
  ins.insert(ins.end(), others.begin(), others.end());
  node_ = parent.add_node(op::Conditional{cases, other_inputs_, outputs_}, ins);
}

RegionBuilder ConditionalBuilder::add_case() {
  NodeId c = h_->add_node(op::Case{}, node_);
  return RegionBuilder(*h_, c, other_inputs_, outputs_);
}

std::vector<Wire> ConditionalBuilder::outputs() const {
  std::vector<Wire> out;
  for (std::uint32_t i = 0; i < outputs_.size(); ++i) out.push_back(Wire{node_, i});
  return out;
}

TailLoopBuilder add_tail_loop(RegionBuilder& parent, const std::vector<Wire>& vars) {
  TypeRow types = wire_types(parent.hugr(), vars);
  NodeId n = parent.add_node(op::TailLoop{types}, vars);
  TypeRow outs{Type::boolean()};
  outs.insert(outs.end(), types.begin(), types.end());
  return TailLoopBuilder{&parent.hugr(), n, RegionBuilder(parent.hugr(), n, types, outs)};
}

std::vector<Wire> TailLoopBuilder::outputs() const {
  std::vector<Wire> out;
  for (std::uint32_t i = 0; i < h->num_ports(node, Direction::Outgoing); ++i) out.push_back(Wire{node, i});
  return out;
}

CfgBuilder::CfgBuilder(RegionBuilder& parent, const std::vector<Wire>& ins, TypeRow outputs)
    : h_(&parent.hugr()), sig_{wire_types(parent.hugr(), ins), std::move(outputs)} {
  node_ = parent.add_node(op::CFG{sig_}, ins);
}

RegionBuilder CfgBuilder::add_block(const TypeRow& inputs, const TypeRow& other_outputs,
                                    std::uint32_t successors) {
  NodeId b = h_->add_node(op::BasicBlock{inputs, other_outputs, successors}, node_);
  TypeRow outs{Type::enumeration(successors)};
  outs.insert(outs.end(), other_outputs.begin(), other_outputs.end());
  return RegionBuilder(*h_, b, inputs, outs);
}

NodeId CfgBuilder::add_exit() { return h_->add_node(op::ExitBlock{sig_.outputs}, node_); }

void CfgBuilder::branch(NodeId block, std::uint32_t index, NodeId target) {
  h_->connect(out_port(block, index), in_port(target, 0), EdgeKind::control_flow());
}

std::vector<Wire> CfgBuilder::outputs() const {
  std::vector<Wire> out;
  for (std::uint32_t i = 0; i < sig_.outputs.size(); ++i) out.push_back(Wire{node_, i});
  return out;
}

}  // namespace hugr
