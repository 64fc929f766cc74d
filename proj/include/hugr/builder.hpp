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
#include <string>
#include <vector>

#include "hugr/extension.hpp"
#include "hugr/hugr.hpp"

namespace hugr {

/// An outgoing port, viewed as the value it produces.
struct Wire {
  NodeId node;
  std::uint32_t offset = 0;
  Port port() const { return out_port(node, offset); }
  bool operator==(const Wire&) const = default;
};

/// Fills the dataflow region of a container node. The constructor adds the
/// Input and Output children; `finish` wires the region's results.
class RegionBuilder {
 public:
  RegionBuilder(Hugr& h, NodeId container, const TypeRow& inputs, const TypeRow& outputs);
  /// Builder over a region that already has its Input and Output children.
  static RegionBuilder attach(Hugr& h, NodeId container);

  Hugr& hugr() { return *h_; }
  NodeId container() const { return container_; }
  NodeId input_node() const { return input_; }
  NodeId output_node() const { return output_; }

  Wire input(std::uint32_t i) const { return Wire{input_, i}; }
  std::vector<Wire> inputs() const;

  /// Adds `op` and wires `ins` to its value in-ports 0..n-1. Returns one wire
  /// per value out-port.
  std::vector<Wire> add(OpKind op, const std::vector<Wire>& ins);
  NodeId add_node(OpKind op, const std::vector<Wire>& ins);

  std::vector<Wire> ext(const Registry& r, std::string_view extension, std::string_view name,
                        const std::vector<Wire>& ins, TypeRow type_args = {});
  /// Shorthand for stdlib.quantum ops.
  std::vector<Wire> q(const Registry& r, std::string_view name, const std::vector<Wire>& ins) {
    return ext(r, kQuantumExt, name, ins);
  }
  std::vector<Wire> c(const Registry& r, std::string_view name, const std::vector<Wire>& ins) {
    return ext(r, kClassicalExt, name, ins);
  }

  /// Const + LoadConst in this region.
  Wire constant(ConstValue v, Type t);
  Wire constant(ConstValue v) { return constant(v, type_of_const(v)); }
  Wire tag(std::uint32_t tag, std::uint32_t size) { return constant(EnumTag{tag, size}); }

  /// Call node statically wired to `func` (a FuncDef or FuncDecl).
  std::vector<Wire> call(NodeId func, const std::vector<Wire>& ins, TypeRow type_args = {});
  Wire load_function(NodeId func, TypeRow type_args = {});

  void finish(const std::vector<Wire>& outs);

 private:
  RegionBuilder(Hugr& h, NodeId container, NodeId input, NodeId output)
      : h_(&h), container_(container), input_(input), output_(output) {}

  Hugr* h_;
  NodeId container_;
  NodeId input_;
  NodeId output_;
};

/// Module-level FuncDef with its region scaffolded.
RegionBuilder define_function(Hugr& h, NodeId parent, std::string name, PolySignature sig);
NodeId declare_function(Hugr& h, NodeId parent, std::string name, PolySignature sig);

/// A Conditional added to a region. Case i's region maps `other_inputs` to
/// the conditional's outputs.
class ConditionalBuilder {
 public:
  ConditionalBuilder(RegionBuilder& parent, Wire discriminant, std::uint32_t cases,
                     const std::vector<Wire>& others, TypeRow outputs);
  NodeId node() const { return node_; }
  RegionBuilder add_case();
  std::vector<Wire> outputs() const;

 private:
  Hugr* h_;
  NodeId node_;
  TypeRow other_inputs_;
  TypeRow outputs_;
};

/// TailLoop over `vars`. The body region maps loop vars to (bool, loop vars);
/// a true flag ends the loop.
struct TailLoopBuilder {
  Hugr* h;
  NodeId node;
  RegionBuilder body;
  std::vector<Wire> outputs() const;
};
TailLoopBuilder add_tail_loop(RegionBuilder& parent, const std::vector<Wire>& vars);

class CfgBuilder {
 public:
  CfgBuilder(RegionBuilder& parent, const std::vector<Wire>& ins, TypeRow outputs);
  NodeId node() const { return node_; }
  /// Adds a basic block; the first one added is the entry.
  RegionBuilder add_block(const TypeRow& inputs, const TypeRow& other_outputs, std::uint32_t successors);
  NodeId add_exit();
  /// Wires successor `index` of `block` to `target`.
  void branch(NodeId block, std::uint32_t index, NodeId target);
  std::vector<Wire> outputs() const;

 private:
  Hugr* h_;
  NodeId node_;
  Signature sig_;
};

TypeRow wire_types(const Hugr& h, const std::vector<Wire>& wires);

}  // namespace hugr
