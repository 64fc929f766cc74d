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

#include "hugr/types.hpp"

#include <sstream>

namespace hugr {

namespace {

bool rows_equal(const TypeRow& a, const TypeRow& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

Type substitute_checked(const Type& t, const TypeRow& args) {
  return std::visit(
      [&](const auto& v) -> Type {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Type::Custom>) {
          TypeRow out;
          out.reserve(v.args.size());
          for (const Type& a : v.args) out.push_back(substitute_checked(a, args));
          return Type::custom(v.extension, v.name, std::move(out));
        } else if constexpr (std::is_same_v<V, Type::Function>) {
          Signature sig;
          for (const Type& a : v.signature->inputs) sig.inputs.push_back(substitute_checked(a, args));
          for (const Type& a : v.signature->outputs) sig.outputs.push_back(substitute_checked(a, args));
          return Type::function(std::move(sig));
        } else if constexpr (std::is_same_v<V, Type::Sum>) {
          return t;
        } else {
          if (v.index >= args.size()) {
            throw TypeError("type variable #" + std::to_string(v.index) +
                            " is not bound by a scheme with " + std::to_string(args.size()) +
                            " parameter(s)");
          }
          return args[v.index];
        }
      },
      t.variant());
}

}  // namespace

bool Signature::operator==(const Signature& other) const {
  return rows_equal(inputs, other.inputs) && rows_equal(outputs, other.outputs);
}

std::string row_to_string(const TypeRow& row) {
  std::ostringstream os;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ", ";
    os << row[i].to_string();
  }
  return os.str();
}

bool row_contains_var(const TypeRow& row) {
  for (const Type& t : row) {
    if (t.contains_var()) return true;
  }
  return false;
}

std::string Signature::to_string() const {
  return "(" + row_to_string(inputs) + ") -> (" + row_to_string(outputs) + ")";
}

std::string PolySignature::to_string() const {
  if (params == 0) return body.to_string();
  return "forall " + std::to_string(params) + ". " + body.to_string();
}

Type Type::custom(std::string extension, std::string name, TypeRow args) {
  return Type(Custom{std::move(extension), std::move(name), std::move(args)});
}

Type Type::function(Signature sig) {
  return Type(Function{std::make_shared<const Signature>(std::move(sig))});
}

Type Type::enumeration(std::uint32_t size) {
  if (size == 0) throw TypeError("Enum type needs at least one tag");
  return Type(Sum{size});
}

Type Type::var(std::uint32_t index) { return Type(Var{index}); }

bool Type::contains_var() const {
  return std::visit(
      [](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Custom>) {
          return row_contains_var(v.args);
        } else if constexpr (std::is_same_v<V, Function>) {
          return row_contains_var(v.signature->inputs) || row_contains_var(v.signature->outputs);
        } else if constexpr (std::is_same_v<V, Sum>) {
          return false;
        } else {
          return true;
        }
      },
      v_);
}

bool Type::operator==(const Type& other) const {
  if (v_.index() != other.v_.index()) return false;
  return std::visit(
      [&](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        const V& o = std::get<V>(other.v_);
        if constexpr (std::is_same_v<V, Custom>) {
          return v.extension == o.extension && v.name == o.name && rows_equal(v.args, o.args);
        } else if constexpr (std::is_same_v<V, Function>) {
          return *v.signature == *o.signature;
        } else if constexpr (std::is_same_v<V, Sum>) {
          return v.size == o.size;
        } else {
          return v.index == o.index;
        }
      },
      v_);
}

std::string Type::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Custom>) {
          if (v.args.empty()) return v.name;
          return v.name + "<" + row_to_string(v.args) + ">";
        } else if constexpr (std::is_same_v<V, Function>) {
          return "fn" + v.signature->to_string();
        } else if constexpr (std::is_same_v<V, Sum>) {
          return v.size == 2 ? std::string("bool") : "enum" + std::to_string(v.size);
        } else {
          return "$" + std::to_string(v.index);
        }
      },
      v_);
}

Type substitute(const Type& t, const TypeRow& args) {
  if (row_contains_var(args)) throw TypeError("substitution argument is polymorphic");
  return substitute_checked(t, args);
}

Signature instantiate(const PolySignature& scheme, const TypeRow& args) {
  if (args.size() != scheme.params) {
    throw TypeError("scheme expects " + std::to_string(scheme.params) + " type argument(s), got " +
                    std::to_string(args.size()));
  }
  for (const Type& a : args) {
    if (a.contains_var()) throw TypeError("type argument " + a.to_string() + " contains an unbound variable");
  }
  Signature out;
  out.inputs.reserve(scheme.body.inputs.size());
  out.outputs.reserve(scheme.body.outputs.size());
  for (const Type& t : scheme.body.inputs) out.inputs.push_back(substitute_checked(t, args));
  for (const Type& t : scheme.body.outputs) out.outputs.push_back(substitute_checked(t, args));
  return out;
}

bool types_equal(const Type& a, const Type& b) {
  if (a.contains_var() || b.contains_var()) {
    throw TypeError("types_equal expects monomorphic types");
  }
  return a == b;
}

}  // namespace hugr
