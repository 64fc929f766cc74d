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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hugr/types.hpp"

namespace hugr {

struct EnumTag {
  std::uint32_t tag = 0;
  std::uint32_t size = 2;
  bool operator==(const EnumTag&) const = default;
};

/// Literal carried by a Const node.
using ConstValue = std::variant<double, std::int64_t, EnumTag>;

/// What an edge carries. Also used to describe what a port accepts.
struct EdgeKind {
  enum class Tag : std::uint8_t { Value, Static, ControlFlow };

  Tag tag = Tag::Value;
  std::optional<Type> type;

  static EdgeKind value(Type t) { return {Tag::Value, std::move(t)}; }
  static EdgeKind constant(Type t) { return {Tag::Static, std::move(t)}; }
  static EdgeKind control_flow() { return {Tag::ControlFlow, std::nullopt}; }

  bool is_value() const { return tag == Tag::Value; }
  bool is_static() const { return tag == Tag::Static; }
  bool is_control_flow() const { return tag == Tag::ControlFlow; }

  bool operator==(const EdgeKind& other) const { return tag == other.tag && type == other.type; }
  bool operator!=(const EdgeKind& other) const { return !(*this == other); }
  std::string to_string() const;
};

const char* edge_kind_name(EdgeKind::Tag tag);

namespace op {

struct Module {
  bool operator==(const Module&) const = default;
};
struct FuncDef {
  std::string name;
  PolySignature signature;
  bool operator==(const FuncDef&) const = default;
};
struct FuncDecl {
  std::string name;
  PolySignature signature;
  bool operator==(const FuncDecl&) const = default;
};
struct Input {
  TypeRow types;
  bool operator==(const Input&) const = default;
};
struct Output {
  TypeRow types;
  bool operator==(const Output&) const = default;
};
/// Calls the function wired into the trailing static in-port. `callee`
/// repeats the target's scheme so the node's ports are known without
/// following the edge; validation cross-checks the two.
struct Call {
  PolySignature callee;
  TypeRow type_args;
  bool operator==(const Call&) const = default;
};
struct LoadFunction {
  PolySignature callee;
  TypeRow type_args;
  bool operator==(const LoadFunction&) const = default;
};
struct Const {
  ConstValue value;
  Type type;
  bool operator==(const Const&) const = default;
};
/// Turns a static constant into a dataflow value.
struct LoadConst {
  Type type;
  bool operator==(const LoadConst&) const = default;
};
struct Conditional {
  std::uint32_t cases = 2;
  TypeRow other_inputs;
  TypeRow outputs;
  bool operator==(const Conditional&) const = default;
};
struct Case {
  bool operator==(const Case&) const = default;
};
struct TailLoop {
  TypeRow loop_vars;
  bool operator==(const TailLoop&) const = default;
};
struct CFG {
  Signature signature;
  bool operator==(const CFG&) const = default;
};
/// Block body emits Enum(successors) followed by `other_outputs`, which are
/// handed to whichever successor the tag selects.
struct BasicBlock {
  TypeRow inputs;
  TypeRow other_outputs;
  std::uint32_t successors = 1;
  bool operator==(const BasicBlock&) const = default;
};
struct ExitBlock {
  TypeRow outputs;
  bool operator==(const ExitBlock&) const = default;
};
/// An operation from a registered extension. `signature` is the resolved,
/// monomorphic signature, kept on the node so that tooling without the
/// extension can still see the port structure.
struct ExtensionOp {
  std::string extension;
  std::string name;
  TypeRow type_args;
  Signature signature;
  bool operator==(const ExtensionOp&) const = default;
};

}  // namespace op

using OpKind = std::variant<op::Module, op::FuncDef, op::FuncDecl, op::Input, op::Output, op::Call,
                            op::LoadFunction, op::Const, op::LoadConst, op::Conditional, op::Case,
                            op::TailLoop, op::CFG, op::BasicBlock, op::ExitBlock, op::ExtensionOp>;

/// Port layout of a node: kinds of its incoming and outgoing ports, in order.
struct PortRows {
  std::vector<EdgeKind> in;
  std::vector<EdgeKind> out;
};

/// Port layout implied by an op. Needs no registry. Throws TypeError for a
/// Call/LoadFunction whose instantiation is ill-formed.
PortRows ports_of(const OpKind& op);

/// Short tag used in serialization and diagnostics ("FuncDef", "CFG", ...).
std::string op_tag(const OpKind& op);

/// Human-readable label, e.g. "stdlib.quantum.H" or "FuncDef(main)".
std::string op_label(const OpKind& op);

/// Ops whose child list is a dataflow region starting with Input, Output.
bool is_dataflow_container(const OpKind& op);

/// Ops that may appear as ordinary members of a dataflow region.
bool is_dataflow_member(const OpKind& op);

/// Ops that never have children.
bool is_leaf(const OpKind& op);

template <typename T>
bool is_a(const OpKind& op) {
  return std::holds_alternative<T>(op);
}

Type type_of_const(const ConstValue& v);
std::string const_to_string(const ConstValue& v);

}  // namespace hugr
