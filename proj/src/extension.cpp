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

#include "hugr/extension.hpp"

#include <set>

namespace hugr {

Type qubit_type() { return Type::custom(std::string(kQuantumExt), "qubit"); }
Type float_type() { return Type::custom(std::string(kClassicalExt), "f64"); }
Type int_type() { return Type::custom(std::string(kClassicalExt), "i64"); }

const TypeDef* Extension::find_type(std::string_view name) const {
  for (const TypeDef& t : types) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const OpDef* Extension::find_op(std::string_view name) const {
  for (const OpDef& o : ops) {
    if (o.name == name) return &o;
  }
  return nullptr;
}

namespace {

// Resolves custom types against `r` plus the extension under construction.
void check_type_with(const Type& t, const Registry& r, const Extension* pending) {
  if (t.is_custom()) {
    const auto& c = t.as_custom();
    const TypeDef* def = nullptr;
    if (pending && c.extension == pending->id) {
      def = pending->find_type(c.name);
    } else {
      def = r.find_type(c.extension, c.name);
    }
    if (!def) throw UnknownOpError("unknown type " + c.extension + "." + c.name);
    if (def->arity != c.args.size()) {
      throw UnknownOpError("type " + c.extension + "." + c.name + " expects " +
                           std::to_string(def->arity) + " argument(s)");
    }
    for (const Type& a : c.args) check_type_with(a, r, pending);
  } else if (t.is_function()) {
    for (const Type& a : t.as_function().inputs) check_type_with(a, r, pending);
    for (const Type& a : t.as_function().outputs) check_type_with(a, r, pending);
  }
}

void check_scheme(const PolySignature& s, const Registry& r, const Extension* pending) {
  auto check_vars = [&](const Type& t, auto&& self) -> void {
    if (t.is_var()) {
      if (t.var_index() >= s.params) throw RegistryError("scheme mentions unbound variable $" +
                                                         std::to_string(t.var_index()));
    } else if (t.is_custom()) {
      for (const Type& a : t.as_custom().args) self(a, self);
    } else if (t.is_function()) {
      for (const Type& a : t.as_function().inputs) self(a, self);
      for (const Type& a : t.as_function().outputs) self(a, self);
    }
  };
  for (const Type& t : s.body.inputs) {
    check_vars(t, check_vars);
    check_type_with(t, r, pending);
  }
  for (const Type& t : s.body.outputs) {
    check_vars(t, check_vars);
    check_type_with(t, r, pending);
  }
}

}  // namespace

void Registry::add(Extension e) {
  if (extensions_.count(e.id)) throw RegistryError("extension '" + e.id + "' is already registered");
  std::set<std::string> names;
  for (const TypeDef& t : e.types) {
    if (!names.insert("type:" + t.name).second) {
      throw RegistryError("duplicate type '" + t.name + "' in extension '" + e.id + "'");
    }
  }
  for (const OpDef& o : e.ops) {
    if (!names.insert("op:" + o.name).second) {
      throw RegistryError("duplicate op '" + o.name + "' in extension '" + e.id + "'");
    }
  }
  for (const OpDef& o : e.ops) {
    try {
      check_scheme(o.scheme, *this, &e);
    } catch (const UnknownOpError& err) {
      throw RegistryError("op '" + o.name + "' in extension '" + e.id + "': " + err.what());
    }
  }
  std::string id = e.id;
  extensions_.emplace(std::move(id), std::move(e));
}

const Extension* Registry::find(std::string_view id) const {
  auto it = extensions_.find(id);
  return it == extensions_.end() ? nullptr : &it->second;
}

const TypeDef* Registry::find_type(std::string_view ext, std::string_view name) const {
  const Extension* e = find(ext);
  return e ? e->find_type(name) : nullptr;
}

const OpDef* Registry::find_op(std::string_view ext, std::string_view name) const {
  const Extension* e = find(ext);
  return e ? e->find_op(name) : nullptr;
}

op::ExtensionOp Registry::make_op(std::string_view ext, std::string_view name, TypeRow type_args) const {
  const OpDef* def = find_op(ext, name);
  if (!def) throw UnknownOpError("unknown op " + std::string(ext) + "." + std::string(name));
  Signature sig = instantiate(def->scheme, type_args);
  return op::ExtensionOp{std::string(ext), std::string(name), std::move(type_args), std::move(sig)};
}

Registry register_extension(Registry r, Extension e) {
  r.add(std::move(e));
  return r;
}

void check_type(const Type& t, const Registry& r) { check_type_with(t, r, nullptr); }

bool is_linear(const Type& t, const Registry& r) {
  if (t.is_var()) throw TypeError("linearity of an unresolved type variable is unknown");
  if (!t.is_custom()) return false;
  const auto& c = t.as_custom();
  const TypeDef* def = r.find_type(c.extension, c.name);
  if (!def) throw UnknownOpError("unknown type " + c.extension + "." + c.name);
  return def->bound == TypeBound::Linear;
}

Signature signature_of(const OpKind& op, const Registry& r) {
  if (const auto* e = std::get_if<op::ExtensionOp>(&op)) {
    const OpDef* def = r.find_op(e->extension, e->name);
    if (!def) throw UnknownOpError("unknown op " + e->extension + "." + e->name);
    return instantiate(def->scheme, e->type_args);
  }
  if (const auto* c = std::get_if<op::Call>(&op)) return instantiate(c->callee, c->type_args);
  if (const auto* c = std::get_if<op::LoadFunction>(&op)) {
    return Signature{{}, {Type::function(instantiate(c->callee, c->type_args))}};
  }
  if (const auto* c = std::get_if<op::Conditional>(&op)) {
    Signature sig;
    sig.inputs.push_back(Type::enumeration(c->cases == 0 ? 1 : c->cases));
    sig.inputs.insert(sig.inputs.end(), c->other_inputs.begin(), c->other_inputs.end());
    sig.outputs = c->outputs;
    return sig;
  }
  // Everything else is fully described by its port rows.
  PortRows rows = ports_of(op);
  Signature sig;
  for (const EdgeKind& k : rows.in) {
    if (k.is_value()) sig.inputs.push_back(*k.type);
  }
  for (const EdgeKind& k : rows.out) {
    if (k.is_value()) sig.outputs.push_back(*k.type);
  }
  return sig;
}

Extension classical_extension() {
  const Type f = float_type();
  const Type b = bool_type();
  Extension e;
  e.id = std::string(kClassicalExt);
  e.types = {{"f64", TypeBound::Copyable, 0}, {"i64", TypeBound::Copyable, 0}};
  e.ops = {
      {"Add", Signature{{f, f}, {f}}, "sum of two floats"},
      {"Sub", Signature{{f, f}, {f}}, "difference of two floats"},
      {"Mul", Signature{{f, f}, {f}}, "product of two floats"},
      {"Neg", Signature{{f}, {f}}, "negation"},
      {"Lt", Signature{{f, f}, {b}}, "a < b"},
      {"Le", Signature{{f, f}, {b}}, "a <= b"},
      {"Gt", Signature{{f, f}, {b}}, "a > b"},
      {"Ge", Signature{{f, f}, {b}}, "a >= b"},
      {"Eq", Signature{{f, f}, {b}}, "a == b"},
      {"Ne", Signature{{f, f}, {b}}, "a != b"},
      {"Not", Signature{{b}, {b}}, "boolean negation"},
      {"And", Signature{{b, b}, {b}}, "boolean conjunction"},
      {"Or", Signature{{b, b}, {b}}, "boolean disjunction"},
  };
  return e;
}

Extension quantum_extension() {
  const Type q = qubit_type();
  const Type f = float_type();
  const Type b = bool_type();
  Extension e;
  e.id = std::string(kQuantumExt);
  e.types = {{"qubit", TypeBound::Linear, 0}};
  e.ops = {
      {"H", Signature{{q}, {q}}, "Hadamard"},
      {"X", Signature{{q}, {q}}, "Pauli X"},
      {"Z", Signature{{q}, {q}}, "Pauli Z"},
      {"CX", Signature{{q, q}, {q, q}}, "controlled X; port 0 is the control"},
      {"Rz", Signature{{q, f}, {q}}, "Z rotation by an angle in radians"},
      {"Rx", Signature{{q, f}, {q}}, "X rotation by an angle in radians"},
      {"T", Signature{{q}, {q}}, "pi/8 phase gate"},
      {"Tdg", Signature{{q}, {q}}, "inverse T"},
      {"TxDg", Signature{{q}, {q}}, "H Tdg H"},
      {"Measure", Signature{{q}, {q, b}}, "Z-basis measurement; the qubit is kept"},
      {"QAlloc", Signature{{}, {q}}, "fresh qubit in |0>"},
      {"QFree", Signature{{q}, {}}, "discard a qubit"},
  };
  return e;
}

Registry stdlib() {
  Registry r;
  r.add(classical_extension());
  r.add(quantum_extension());
  return r;
}

}  // namespace hugr
