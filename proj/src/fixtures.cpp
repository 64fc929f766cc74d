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

#include "hugr/fixtures.hpp"

#include <algorithm>
#include <map>

#include "hugr/rewrite.hpp"
#include "hugr/serial.hpp"
#include "json.hpp"

namespace hugr::fixtures {

namespace {

const Type kQubit = qubit_type();
const Type kF64 = float_type();

Hugr module() { return Hugr(op::Module{}); }

}  // namespace

Hugr rotations(const Registry& r) {
  Hugr h = module();
  auto b = define_function(h, h.root(), "main", Signature{{kQubit, kF64, kF64}, {kQubit}});
  Wire sum = b.c(r, "Add", {b.input(1), b.input(2)})[0];
  Wire q = b.q(r, "Rz", {b.input(0), sum})[0];
  q = b.q(r, "Rx", {q, sum})[0];
  b.finish({q});
  return h;
}

Hugr cloned_qubit(const Registry& r) {
  Hugr h = module();
  auto b = define_function(h, h.root(), "main", Signature{{kQubit}, {kQubit, kQubit}});
  auto out = b.q(r, "CX", {b.input(0), b.input(0)});
  b.finish(out);
  return h;
}

Hugr measure_and_branch(const Registry& r) {
  Hugr h = module();
  auto b = define_function(h, h.root(), "main", Signature{{kQubit, kQubit}, {kQubit}});
  auto m = b.q(r, "Measure", {b.input(0)});
  b.q(r, "QFree", {m[0]});
  ConditionalBuilder cond(b, m[1], 2, {b.input(1)}, {kQubit});
  for (const char* gate : {"H", "X"}) {
    RegionBuilder c = cond.add_case();
    c.finish(c.q(r, gate, {c.input(0)}));
  }
  b.finish(cond.outputs());
  return h;
}

Hugr external_call(const Registry& r) {
  (void)r;
  Hugr h = module();
  NodeId foo = declare_function(h, h.root(), "foo", Signature{{kQubit, kQubit}, {bool_type()}});
  auto b = define_function(h, h.root(), "main", Signature{{kQubit, kQubit}, {bool_type()}});
  b.finish(b.call(foo, {b.input(0), b.input(1)}));
  return h;
}

std::pair<Wire, Wire> rus_step(RegionBuilder& b, const Registry& r, Wire d) {
  Wire a = b.q(r, "QAlloc", {})[0];
  a = b.q(r, "H", {a})[0];
  a = b.q(r, "Z", {a})[0];
  auto cx = b.q(r, "CX", {a, d});
  a = cx[0];
  d = cx[1];
  d = b.q(r, "T", {d})[0];
  d = b.q(r, "H", {d})[0];
  d = b.q(r, "T", {d})[0];
  cx = b.q(r, "CX", {a, d});
  a = b.q(r, "H", {cx[0]})[0];
  d = cx[1];
  auto m = b.q(r, "Measure", {a});
  b.q(r, "QFree", {m[0]});
  return {m[1], d};
}

Hugr rus_loop(const Registry& r) {
  Hugr h = module();
  auto b = define_function(h, h.root(), "main", Signature{{kQubit}, {kQubit}});
  TailLoopBuilder loop = add_tail_loop(b, {b.input(0)});
  RegionBuilder& body = loop.body;
  auto [flag, d] = rus_step(body, r, body.input(0));
  ConditionalBuilder fix(body, flag, 2, {d}, {kQubit});
  RegionBuilder failed = fix.add_case();
  failed.finish(failed.q(r, "Z", {failed.input(0)}));
  RegionBuilder done = fix.add_case();
  done.finish({done.input(0)});
  body.finish({flag, fix.outputs()[0]});
  b.finish(loop.outputs());
  return h;
}

Hugr rus_cfg(const Registry& r) {
  Hugr h = module();
  auto b = define_function(h, h.root(), "main", Signature{{kQubit}, {kQubit}});
  CfgBuilder cfg(b, {b.input(0)}, {kQubit});

  RegionBuilder entry = cfg.add_block({kQubit}, {kQubit}, 1);
  entry.finish({entry.tag(0, 1), entry.input(0)});

  RegionBuilder body = cfg.add_block({kQubit}, {kQubit}, 2);
  auto [flag, d] = rus_step(body, r, body.input(0));
  body.finish({flag, d});

  RegionBuilder fix = cfg.add_block({kQubit}, {kQubit}, 1);
  fix.finish({fix.tag(0, 1), fix.q(r, "Z", {fix.input(0)})[0]});

  NodeId exit = cfg.add_exit();
  cfg.branch(entry.container(), 0, body.container());
  cfg.branch(body.container(), 0, fix.container());
  cfg.branch(body.container(), 1, exit);
  cfg.branch(fix.container(), 0, body.container());
  b.finish(cfg.outputs());
  return h;
}

Hugr irreducible_cfg(const Registry& r) {
  Hugr h = module();
  auto b = define_function(h, h.root(), "main", Signature{{kQubit}, {kQubit}});
  CfgBuilder cfg(b, {b.input(0)}, {kQubit});
  auto measured_block = [&](std::uint32_t successors) {
    RegionBuilder blk = cfg.add_block({kQubit}, {kQubit}, successors);
    Wire q = blk.q(r, "H", {blk.input(0)})[0];
    auto m = blk.q(r, "Measure", {q});
    blk.finish({m[1], m[0]});
    return blk.container();
  };
  NodeId a = measured_block(2);
  NodeId bb = measured_block(2);
  RegionBuilder c = cfg.add_block({kQubit}, {kQubit}, 1);
  c.finish({c.tag(0, 1), c.q(r, "X", {c.input(0)})[0]});
  NodeId exit = cfg.add_exit();
  cfg.branch(a, 0, bb);
  cfg.branch(a, 1, c.container());
  cfg.branch(bb, 0, c.container());
  cfg.branch(bb, 1, exit);
  cfg.branch(c.container(), 0, bb);
  b.finish(cfg.outputs());
  return h;
}

Hugr circuit(const Registry& r, unsigned n, const std::vector<Gate>& gates) {
  Hugr h = module();
  const TypeRow row(n, kQubit);
  auto b = define_function(h, h.root(), "main", Signature{row, row});
  std::vector<Wire> wires = b.inputs();
  for (const Gate& g : gates) {
    std::vector<Wire> ins;
    for (unsigned q : g.qubits) ins.push_back(wires.at(q));
    if (g.angle) ins.push_back(b.constant(*g.angle));
    auto outs = b.ext(r, g.extension, g.name, ins);
    for (std::size_t i = 0; i < g.qubits.size(); ++i) wires[g.qubits[i]] = outs.at(i);
  }
  b.finish(wires);
  return h;
}

std::string scramble_ids(std::string_view canonical) {
  using nlohmann::json;
  json doc = json::parse(canonical);
  json& nodes = doc["nodes"];
  const std::size_t n = nodes.size();
  auto remap = [n](std::uint64_t id) { return 1000 + 7 * (n - 1 - id); };

  std::map<std::uint64_t, std::size_t> depth;
  for (const json& node : nodes) {
    const auto id = node["id"].get<std::uint64_t>();
    depth[id] = node["parent"].is_null() ? 0 : depth.at(node["parent"].get<std::uint64_t>()) + 1;
  }
  std::vector<json> list(nodes.begin(), nodes.end());
  std::stable_sort(list.begin(), list.end(), [&](const json& a, const json& b) {
    return depth.at(a["id"].get<std::uint64_t>()) > depth.at(b["id"].get<std::uint64_t>());
  });
  for (json& node : list) {
    node["id"] = remap(node["id"].get<std::uint64_t>());
    if (!node["parent"].is_null()) node["parent"] = remap(node["parent"].get<std::uint64_t>());
  }
  nodes = list;

  std::vector<json> edges(doc["edges"].begin(), doc["edges"].end());
  std::reverse(edges.begin(), edges.end());
  for (json& e : edges) {
    e["src"][0] = remap(e["src"][0].get<std::uint64_t>());
    e["dst"][0] = remap(e["dst"][0].get<std::uint64_t>());
  }
  doc["edges"] = edges;
  return doc.dump(1) + "\n";
}

Extension demo_extension() {
  const Type q = qubit_type();
  const Type f = float_type();
  Extension e;
  e.id = "demo.ion";
  e.types = {{"trap", TypeBound::Linear, 0}};
  e.ops = {
      {"GPi", Signature{{q, f}, {q}}, "single-qubit pi pulse with a phase"},
      {"MS", Signature{{q, q, f}, {q, q}}, "Molmer-Sorensen entangling gate"},
  };
  return e;
}

Hugr demo_circuit(const Registry& r) {
  return circuit(r, 2,
                 {Gate{"GPi", {0}, 0.5, "demo.ion"}, Gate{"MS", {0, 1}, 0.25, "demo.ion"}, Gate{"H", {1}, {}}});
}

std::map<std::string, std::string> files() {
  const Registry r = stdlib();
  Registry demo = r;
  demo.add(demo_extension());
  std::map<std::string, std::string> out;
  auto graph = [&out](const std::string& name, const Hugr& h) { out[name + ".hugr.json"] = encode(h); };
  graph("rotations", rotations(r));
  graph("cloned_qubit", cloned_qubit(r));
  graph("measure_branch", measure_and_branch(r));
  graph("external_call", external_call(r));
  graph("rus_loop", rus_loop(r));
  graph("rus_cfg", rus_cfg(r));
  graph("irreducible_cfg", irreducible_cfg(r));
  graph("h4", circuit(r, 1, {Gate{"H", {0}, {}}, Gate{"H", {0}, {}}, Gate{"H", {0}, {}}, Gate{"H", {0}, {}}}));
  graph("double_rz", circuit(r, 1, {Gate{"Rz", {0}, 0.3}, Gate{"Rz", {0}, 0.4}}));
  graph("demo_circuit", demo_circuit(demo));
  out["rotations_permuted.hugr.json"] = scramble_ids(out.at("rotations.hugr.json"));
  out["demo.hugrext.json"] = encode_extension(demo_extension());
  for (const RewriteRule& rule : standard_rules(r)) out[rule.name + ".hugrrule.json"] = encode_rule(rule);
  return out;
}

}  // namespace hugr::fixtures
