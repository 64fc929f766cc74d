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
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hugr/ops.hpp"
#include "hugr/types.hpp"

namespace hugr {

inline constexpr std::string_view kQuantumExt = "stdlib.quantum";
inline constexpr std::string_view kClassicalExt = "stdlib.classical";

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TypeBound : std::uint8_t { Linear, Copyable };

struct TypeDef {
  std::string name;
  TypeBound bound = TypeBound::Copyable;
  std::uint32_t arity = 0;
};

struct OpDef {
  std::string name;
  PolySignature scheme;
  std::string doc;
};

struct Extension {
  std::string id;
  std::vector<TypeDef> types;
  std::vector<OpDef> ops;

  const TypeDef* find_type(std::string_view name) const;
  const OpDef* find_op(std::string_view name) const;
};

/// Set of extensions keyed by id. Treated as immutable once built.
class Registry {
 public:
  /// Throws RegistryError on a duplicate id, duplicate names inside `e`, or
  /// a type reference that neither `e` nor the registry can resolve.
  void add(Extension e);

  const Extension* find(std::string_view id) const;
  const TypeDef* find_type(std::string_view ext, std::string_view name) const;
  const OpDef* find_op(std::string_view ext, std::string_view name) const;

  /// Builds a node op with its resolved signature.
  op::ExtensionOp make_op(std::string_view ext, std::string_view name, TypeRow type_args = {}) const;

  std::size_t size() const { return extensions_.size(); }
  const std::map<std::string, Extension, std::less<>>& extensions() const { return extensions_; }

 private:
  std::map<std::string, Extension, std::less<>> extensions_;
};

/// Functional form of Registry::add.
Registry register_extension(Registry r, Extension e);

class UnknownOpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks that every custom type mentioned in `t` resolves with the right
/// arity. Throws UnknownOpError otherwise.
void check_type(const Type& t, const Registry& r);

/// Linear types must be used exactly once. Function and Enum types are
/// copyable. Throws UnknownOpError for unresolvable custom types and
/// TypeError for type variables.
bool is_linear(const Type& t, const Registry& r);

/// The dataflow signature that governs a node's value ports. Extension ops
/// are resolved through the registry (UnknownOpError if missing, TypeError
/// on bad type arguments).
Signature signature_of(const OpKind& op, const Registry& r);

/// The standard library: stdlib.classical and stdlib.quantum.
Registry stdlib();
Extension classical_extension();
Extension quantum_extension();

Type qubit_type();
Type float_type();
Type int_type();
inline Type bool_type() { return Type::boolean(); }

}  // namespace hugr
