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

#include "hugr/serial.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hugr {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---------------------------------------------------------------- encoding

json type_json(const Type& t);

json row_json(const TypeRow& row) {
  json a = json::array();
  for (const Type& t : row) a.push_back(type_json(t));
  return a;
}

json sig_json(const Signature& s) { return json{{"inputs", row_json(s.inputs)}, {"outputs", row_json(s.outputs)}}; }

json poly_json(const PolySignature& s) {
  json j = sig_json(s.body);
  j["params"] = s.params;
  return j;
}

json type_json(const Type& t) {
  return std::visit(overloaded{
                        [](const Type::Custom& c) {
                          json j{{"ext", c.extension}, {"name", c.name}};
                          if (!c.args.empty()) j["args"] = row_json(c.args);
                          return j;
                        },
                        [](const Type::Function& f) { return json{{"fn", sig_json(*f.signature)}}; },
                        [](const Type::Sum& s) { return json{{"enum", s.size}}; },
                        [](const Type::Var& v) { return json{{"var", v.index}}; },
                    },
                    t.variant());
}

json const_json(const ConstValue& v) {
  return std::visit(overloaded{
                        [](double d) { return json{{"f64", d}}; },
                        [](std::int64_t i) { return json{{"i64", i}}; },
                        [](const EnumTag& e) { return json{{"tag", e.tag}, {"size", e.size}}; },
                    },
                    v);
}

json op_params(const OpKind& op) {
  return std::visit(
      overloaded{
          [](const op::Module&) { return json::object(); },
          [](const op::FuncDef& f) { return json{{"name", f.name}, {"signature", poly_json(f.signature)}}; },
          [](const op::FuncDecl& f) { return json{{"name", f.name}, {"signature", poly_json(f.signature)}}; },
          [](const op::Input& o) { return json{{"types", row_json(o.types)}}; },
          [](const op::Output& o) { return json{{"types", row_json(o.types)}}; },
          [](const op::Call& c) { return json{{"callee", poly_json(c.callee)}, {"type_args", row_json(c.type_args)}}; },
          [](const op::LoadFunction& c) {
            return json{{"callee", poly_json(c.callee)}, {"type_args", row_json(c.type_args)}};
          },
          [](const op::Const& c) { return json{{"value", const_json(c.value)}, {"type", type_json(c.type)}}; },
          [](const op::LoadConst& c) { return json{{"type", type_json(c.type)}}; },
          [](const op::Conditional& c) {
            return json{{"cases", c.cases}, {"other_inputs", row_json(c.other_inputs)}, {"outputs", row_json(c.outputs)}};
          },
          [](const op::Case&) { return json::object(); },
          [](const op::TailLoop& l) { return json{{"loop_vars", row_json(l.loop_vars)}}; },
          [](const op::CFG& c) { return sig_json(c.signature); },
          [](const op::BasicBlock& b) {
            return json{{"inputs", row_json(b.inputs)},
                        {"other_outputs", row_json(b.other_outputs)},
                        {"successors", b.successors}};
          },
          [](const op::ExitBlock& e) { return json{{"outputs", row_json(e.outputs)}}; },
          [](const op::ExtensionOp& e) {
            return json{{"extension", e.extension},
                        {"name", e.name},
                        {"type_args", row_json(e.type_args)},
                        {"signature", sig_json(e.signature)}};
          },
      },
      op);
}

void collect_extensions(const Type& t, std::set<std::string>& out) {
  if (t.is_custom()) {
    out.insert(t.as_custom().extension);
    for (const Type& a : t.as_custom().args) collect_extensions(a, out);
  } else if (t.is_function()) {
    for (const Type& a : t.as_function().inputs) collect_extensions(a, out);
    for (const Type& a : t.as_function().outputs) collect_extensions(a, out);
  }
}

// ---------------------------------------------------------------- decoding

[[noreturn]] void fail(const std::string& msg) { throw DecodeError(msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::uint32_t as_u32(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffu) fail(std::string(what) + " is too large");
  return static_cast<std::uint32_t>(v);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Type parse_type(const json& j);

TypeRow parse_row(const json& j) {
  if (!j.is_array()) fail("type row must be an array");
  TypeRow row;
  for (const json& t : j) row.push_back(parse_type(t));
  return row;
}

Signature parse_sig(const json& j) { return Signature{parse_row(field(j, "inputs")), parse_row(field(j, "outputs"))}; }

PolySignature parse_poly(const json& j) {
  std::uint32_t params = j.contains("params") ? as_u32(j["params"], "params") : 0;
  return PolySignature{params, parse_sig(j)};
}

Type parse_type(const json& j) {
  if (!j.is_object()) fail("type must be an object");
  if (j.contains("ext")) {
    TypeRow args = j.contains("args") ? parse_row(j["args"]) : TypeRow{};
    return Type::custom(as_string(j["ext"], "ext"), as_string(field(j, "name"), "name"), std::move(args));
  }
  if (j.contains("enum")) {
    const std::uint32_t n = as_u32(j["enum"], "enum");
    if (n == 0) fail("enum size must be positive");
    return Type::enumeration(n);
  }
  if (j.contains("fn")) return Type::function(parse_sig(j["fn"]));
  if (j.contains("var")) return Type::var(as_u32(j["var"], "var"));
  fail("unrecognised type " + j.dump());
}

ConstValue parse_const(const json& j) {
  if (!j.is_object()) fail("const value must be an object");
  if (j.contains("f64")) {
    if (!j["f64"].is_number()) fail("f64 literal must be a number");
    return j["f64"].get<double>();
  }
  if (j.contains("i64")) {
    if (!j["i64"].is_number_integer()) fail("i64 literal must be an integer");
    return j["i64"].get<std::int64_t>();
  }
  if (j.contains("tag")) return EnumTag{as_u32(j["tag"], "tag"), as_u32(field(j, "size"), "size")};
  fail("unrecognised constant " + j.dump());
}

OpKind parse_op(const std::string& tag, const json& p) {
  if (tag == "Module") return op::Module{};
  if (tag == "FuncDef") return op::FuncDef{as_string(field(p, "name"), "name"), parse_poly(field(p, "signature"))};
  if (tag == "FuncDecl") return op::FuncDecl{as_string(field(p, "name"), "name"), parse_poly(field(p, "signature"))};
  if (tag == "Input") return op::Input{parse_row(field(p, "types"))};
  if (tag == "Output") return op::Output{parse_row(field(p, "types"))};
  if (tag == "Call") return op::Call{parse_poly(field(p, "callee")), parse_row(field(p, "type_args"))};
  if (tag == "LoadFunction") return op::LoadFunction{parse_poly(field(p, "callee")), parse_row(field(p, "type_args"))};
  if (tag == "Const") return op::Const{parse_const(field(p, "value")), parse_type(field(p, "type"))};
  if (tag == "LoadConst") return op::LoadConst{parse_type(field(p, "type"))};
  if (tag == "Conditional") {
    return op::Conditional{as_u32(field(p, "cases"), "cases"), parse_row(field(p, "other_inputs")),
                           parse_row(field(p, "outputs"))};
  }
  if (tag == "Case") return op::Case{};
  if (tag == "TailLoop") return op::TailLoop{parse_row(field(p, "loop_vars"))};
  if (tag == "CFG") return op::CFG{parse_sig(p)};
  if (tag == "BasicBlock") {
    return op::BasicBlock{parse_row(field(p, "inputs")), parse_row(field(p, "other_outputs")),
                          as_u32(field(p, "successors"), "successors")};
  }
  if (tag == "ExitBlock") return op::ExitBlock{parse_row(field(p, "outputs"))};
  if (tag == "ExtensionOp") {
    return op::ExtensionOp{as_string(field(p, "extension"), "extension"), as_string(field(p, "name"), "name"),
                           p.contains("type_args") ? parse_row(p["type_args"]) : TypeRow{},
                           parse_sig(field(p, "signature"))};
  }
  fail("unknown op tag '" + tag + "'");
}

Port parse_endpoint(const json& j, Direction d, const std::map<std::uint64_t, NodeId>& ids) {
  if (!j.is_array() || j.size() != 2) fail("edge endpoint must be [node, offset]");
  const std::uint64_t doc_id = as_u32(j[0], "edge node");
  auto it = ids.find(doc_id);
  if (it == ids.end()) fail("edge references unknown node " + std::to_string(doc_id));
  return Port{it->second, d, as_u32(j[1], "edge offset")};
}

EdgeKind::Tag parse_kind(const std::string& s) {
  if (s == "Value") return EdgeKind::Tag::Value;
  if (s == "Static") return EdgeKind::Tag::Static;
  if (s == "ControlFlow") return EdgeKind::Tag::ControlFlow;
  fail("unknown edge kind '" + s + "'");
}

}  // namespace

std::map<NodeId, std::uint32_t> canonical_ids(const Hugr& h) {
  std::map<NodeId, std::uint32_t> ids;
  for (NodeId n : h.descendants(h.root())) ids.emplace(n, static_cast<std::uint32_t>(ids.size()));
  return ids;
}

std::string encode(const Hugr& h) {
  const std::vector<NodeId> order = h.descendants(h.root());
  const std::map<NodeId, std::uint32_t> ids = canonical_ids(h);

  std::set<std::string> exts;
  json nodes = json::array();
  for (NodeId n : order) {
    const OpKind& op = h.op(n);
    json node{{"id", ids.at(n)}, {"op", op_tag(op)}, {"params", op_params(op)}};
    auto p = h.parent(n);
    node["parent"] = p ? json(ids.at(*p)) : json(nullptr);
    nodes.push_back(std::move(node));
    if (const auto* e = std::get_if<op::ExtensionOp>(&op)) exts.insert(e->extension);
    const PortRows& rows = h.port_kinds(n);
    for (const EdgeKind& k : rows.in) {
      if (k.type) collect_extensions(*k.type, exts);
    }
    for (const EdgeKind& k : rows.out) {
      if (k.type) collect_extensions(*k.type, exts);
    }
  }

  struct Row {
    std::uint32_t sn, so, dn, dof;
    int kind;
    std::string type;
    json j;
  };
  std::vector<Row> rows;
  for (EdgeRef ref : h.edges()) {
    const Edge& e = h.edge(ref);
    Row r{ids.at(e.src.node), e.src.offset, ids.at(e.dst.node), e.dst.offset, static_cast<int>(e.kind.tag),
          e.kind.type ? e.kind.type->to_string() : "", json::object()};
    r.j["src"] = json::array({r.sn, r.so});
    r.j["dst"] = json::array({r.dn, r.dof});
    r.j["kind"] = edge_kind_name(e.kind.tag);
    if (e.kind.type) r.j["type"] = type_json(*e.kind.type);
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.sn, a.so, a.dn, a.dof, a.kind, a.type) < std::tie(b.sn, b.so, b.dn, b.dof, b.kind, b.type);
  });
  json edges = json::array();
  for (Row& r : rows) edges.push_back(std::move(r.j));

  json doc{{"version", kFormatVersion},
           {"extensions_required", std::vector<std::string>(exts.begin(), exts.end())},
           {"nodes", std::move(nodes)},
           {"edges", std::move(edges)}};
  return doc.dump(2) + "\n";
}

Decoded decode_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");

  Decoded out{Hugr(), {}, {}};
  for (const auto& [key, _] : doc.items()) {
    if (key != "version" && key != "extensions_required" && key != "nodes" && key != "edges") {
      out.warnings.push_back("ignoring unknown field '" + key + "'");
    }
  }
  const json& version = field(doc, "version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kFormatVersion) {
    fail("unsupported version " + version.dump() + " (expected " + std::to_string(kFormatVersion) + ")");
  }

  const json& nodes = field(doc, "nodes");
  if (!nodes.is_array() || nodes.empty()) fail("'nodes' must be a non-empty array");

  struct Raw {
    std::uint64_t id;
    std::optional<std::uint64_t> parent;
    OpKind op;
  };
  std::vector<Raw> raw;
  std::map<std::uint64_t, std::size_t> index;
  std::optional<std::size_t> root;
  for (const json& n : nodes) {
    Raw r{as_u32(field(n, "id"), "node id"), std::nullopt, op::Module{}};
    const json& parent = field(n, "parent");
    if (!parent.is_null()) r.parent = as_u32(parent, "parent");
    try {
      r.op = parse_op(as_string(field(n, "op"), "op"), n.contains("params") ? n["params"] : json::object());
    } catch (const TypeError& e) {
      fail(std::string("bad op parameters: ") + e.what());
    }
    if (!index.emplace(r.id, raw.size()).second) fail("duplicate node id " + std::to_string(r.id));
    if (!r.parent) {
      if (root) fail("document has more than one root node");
      root = raw.size();
    }
    raw.push_back(std::move(r));
  }
  if (!root) fail("document has no root node");

  std::map<std::uint64_t, std::vector<std::size_t>> kids;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i].parent) continue;
    if (!index.count(*raw[i].parent)) {
      fail("node " + std::to_string(raw[i].id) + " references unknown parent " + std::to_string(*raw[i].parent));
    }
    kids[*raw[i].parent].push_back(i);
  }

  try {
    out.hugr = Hugr(raw[*root].op);
    out.ids[raw[*root].id] = out.hugr.root();
    // Preorder so that canonical documents keep their ids.
    std::vector<std::size_t> stack;
    auto push_children = [&](std::size_t i) {
      auto it = kids.find(raw[i].id);
      if (it == kids.end()) return;
      for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) stack.push_back(*c);
    };
    push_children(*root);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const NodeId parent = out.ids.at(*raw[i].parent);
      out.ids[raw[i].id] = out.hugr.add_node(raw[i].op, parent);
      push_children(i);
    }
  } catch (const TypeError& e) {
    fail(std::string("bad op parameters: ") + e.what());
  }
  if (out.ids.size() != raw.size()) fail("node hierarchy contains a cycle");

  if (doc.contains("edges")) {
    const json& edges = doc["edges"];
    if (!edges.is_array()) fail("'edges' must be an array");
    for (const json& e : edges) {
      const Port src = parse_endpoint(field(e, "src"), Direction::Outgoing, out.ids);
      const Port dst = parse_endpoint(field(e, "dst"), Direction::Incoming, out.ids);
      EdgeKind kind{parse_kind(as_string(field(e, "kind"), "kind")), std::nullopt};
      if (!kind.is_control_flow()) kind.type = parse_type(field(e, "type"));
      try {
        out.hugr.connect(src, dst, std::move(kind));
      } catch (const HugrError& err) {
        fail(err.what());
      }
    }
  }
  return out;
}

std::string encode_extension(const Extension& e) {
  json types = json::array();
  for (const TypeDef& t : e.types) {
    types.push_back(json{{"name", t.name}, {"linear", t.bound == TypeBound::Linear}, {"arity", t.arity}});
  }
  json ops = json::array();
  for (const OpDef& o : e.ops) {
    json j = poly_json(o.scheme);
    j["name"] = o.name;
    j["doc"] = o.doc;
    ops.push_back(std::move(j));
  }
  return json{{"id", e.id}, {"types", types}, {"ops", ops}}.dump(2) + "\n";
}

Extension decode_extension(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  Extension e;
  e.id = as_string(field(doc, "id"), "id");
  if (doc.contains("types")) {
    for (const json& t : doc["types"]) {
      TypeDef def{as_string(field(t, "name"), "name"), TypeBound::Copyable, 0};
      if (t.contains("linear") && t["linear"].is_boolean() && t["linear"].get<bool>()) def.bound = TypeBound::Linear;
      if (t.contains("arity")) def.arity = as_u32(t["arity"], "arity");
      e.types.push_back(std::move(def));
    }
  }
  if (doc.contains("ops")) {
    for (const json& o : doc["ops"]) {
      e.ops.push_back(OpDef{as_string(field(o, "name"), "name"), parse_poly(o),
                            o.contains("doc") ? as_string(o["doc"], "doc") : ""});
    }
  }
  return e;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace hugr
