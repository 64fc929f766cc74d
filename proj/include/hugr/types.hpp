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
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hugr {

class Type;
using TypeRow = std::vector<Type>;

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered input and output rows of an operation or function.
struct Signature {
  TypeRow inputs;
  TypeRow outputs;

  bool operator==(const Signature& other) const;
  bool operator!=(const Signature& other) const { return !(*this == other); }
  std::string to_string() const;
};

/// A signature quantified over `params` type variables. Variables are
/// referenced by index (`Type::var(i)`, i < params).
struct PolySignature {
  std::uint32_t params = 0;
  Signature body;

  PolySignature() = default;
  PolySignature(Signature sig) : body(std::move(sig)) {}  // NOLINT: monomorphic promotion
  PolySignature(std::uint32_t n, Signature sig) : params(n), body(std::move(sig)) {}

  bool operator==(const PolySignature& other) const {
    return params == other.params && body == other.body;
  }
  bool operator!=(const PolySignature& other) const { return !(*this == other); }
  std::string to_string() const;
};

/// Edge payload type. Linearity is not stored here: it is looked up from the
/// extension that defines a custom type (see `is_linear` in extension.hpp).
class Type {
 public:
  struct Custom {
    std::string extension;
    std::string name;
    TypeRow args;
  };
  struct Function {
    std::shared_ptr<const Signature> signature;
  };
  /// Enum(n): a tag in [0, n). Enum(2) is bool with 0 = false, 1 = true.
  struct Sum {
    std::uint32_t size;
  };
  struct Var {
    std::uint32_t index;
  };
  using Variant = std::variant<Custom, Function, Sum, Var>;

  static Type custom(std::string extension, std::string name, TypeRow args = {});
  static Type function(Signature sig);
  static Type enumeration(std::uint32_t size);
  static Type boolean() { return enumeration(2); }
  static Type var(std::uint32_t index);

  const Variant& variant() const { return v_; }

  bool is_custom() const { return std::holds_alternative<Custom>(v_); }
  bool is_function() const { return std::holds_alternative<Function>(v_); }
  bool is_enum() const { return std::holds_alternative<Sum>(v_); }
  bool is_var() const { return std::holds_alternative<Var>(v_); }

  const Custom& as_custom() const { return std::get<Custom>(v_); }
  const Signature& as_function() const { return *std::get<Function>(v_).signature; }
  std::uint32_t enum_size() const { return std::get<Sum>(v_).size; }
  std::uint32_t var_index() const { return std::get<Var>(v_).index; }

  /// True if any type variable occurs anywhere inside.
  bool contains_var() const;

  /// Structural equality, type variables compared by index.
  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  explicit Type(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

bool row_contains_var(const TypeRow& row);
std::string row_to_string(const TypeRow& row);

/// Substitutes Var(i) with args[i]. Throws TypeError on arity mismatch, on a
/// non-monomorphic argument, or when the body mentions a variable index that
/// the scheme does not bind.
Signature instantiate(const PolySignature& scheme, const TypeRow& args);

/// Substitution over a single type; `args` must be Var-free.
Type substitute(const Type& t, const TypeRow& args);

/// Equality of monomorphic types. Throws TypeError if either side is
/// polymorphic.
bool types_equal(const Type& a, const Type& b);

}  // namespace hugr
