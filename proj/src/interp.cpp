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

#include "hugr/interp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <queue>

namespace hugr {

namespace {

using cd = std::complex<double>;

[[noreturn]] void raise(InterpErrorCode code, const std::string& msg) { throw InterpError(code, msg); }

Eigen::Matrix2cd mat(cd a, cd b, cd c, cd d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

Eigen::Matrix2cd hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return mat(s, s, s, -s);
}

Eigen::Matrix2cd phase(double angle) { return mat(1, 0, 0, std::polar(1.0, angle)); }

Eigen::Matrix2cd rz(double theta) {
  return mat(std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2));
}

Eigen::Matrix2cd rx(double theta) {
  const cd c = std::cos(theta / 2);
  const cd s = cd(0, -std::sin(theta / 2));
  return mat(c, s, s, c);
}

double as_f64(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  raise(InterpErrorCode::BadArguments, "expected an f64 value, got " + to_string(v));
}

bool as_bool(const Value& v) {
  if (const auto* t = std::get_if<EnumTag>(&v)) return t->tag != 0;
  raise(InterpErrorCode::BadArguments, "expected a bool value, got " + to_string(v));
}

std::uint64_t as_qubit(const Value& v) {
  if (const auto* q = std::get_if<QubitRef>(&v)) return q->handle;
  raise(InterpErrorCode::BadArguments, "expected a qubit value, got " + to_string(v));
}

Value boolean(bool b) { return EnumTag{b ? 1u : 0u, 2}; }

bool value_has_type(const Value& v, const Type& t) {
  if (std::holds_alternative<QubitRef>(v)) return t == qubit_type();
  if (std::holds_alternative<double>(v)) return t == float_type();
  if (std::holds_alternative<std::int64_t>(v)) return t == int_type();
  if (const auto* e = std::get_if<EnumTag>(&v)) return t.is_enum() && t.enum_size() == e->size && e->tag < e->size;
  return t.is_function();
}

}  // namespace

std::string to_string(const Value& v) {
  struct Visitor {
    std::string operator()(double d) const {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, d);
      return std::string(buf, res.ptr);
    }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(const EnumTag& e) const {
      if (e.size == 2) return e.tag ? "true" : "false";
      return "tag(" + std::to_string(e.tag) + "/" + std::to_string(e.size) + ")";
    }
    std::string operator()(const FnRef& f) const { return "fn@" + hugr::to_string(f.node); }
    std::string operator()(const QubitRef& q) const { return "qubit#" + std::to_string(q.handle); }
  };
  return std::visit(Visitor{}, v);
}

std::string_view code_name(InterpErrorCode code) {
  switch (code) {
    case InterpErrorCode::QubitCapExceeded: return "QubitCapExceeded";
    case InterpErrorCode::ScriptExhausted: return "ScriptExhausted";
    case InterpErrorCode::UnboundDecl: return "UnboundDecl";
    case InterpErrorCode::NonTerminating: return "NonTerminating";
    case InterpErrorCode::ImpossibleOutcome: return "ImpossibleOutcome";
    case InterpErrorCode::UnknownEntry: return "UnknownEntry";
    case InterpErrorCode::BadArguments: return "BadArguments";
    case InterpErrorCode::UnsupportedOp: return "UnsupportedOp";
    case InterpErrorCode::HandleReuse: return "HandleReuse";
  }
  return "?";
}

InterpError::InterpError(InterpErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(code_name(code)) + ": " + msg), code_(code) {}

// ------------------------------------------------------------ QuantumState

std::uint64_t QuantumState::alloc() {
  if (slots_.size() >= cap_) {
    raise(InterpErrorCode::QubitCapExceeded, "more than " + std::to_string(cap_) + " live qubits");
  }
  const Eigen::Index old = amp_.size();
  amp_.conservativeResize(old * 2);
  amp_.tail(old).setZero();
  slots_.push_back(next_);
  return next_++;
}

std::size_t QuantumState::position(std::uint64_t h) const {
  auto it = std::find(slots_.begin(), slots_.end(), h);
  if (it == slots_.end()) {
    if (h < next_) raise(InterpErrorCode::HandleReuse, "qubit#" + std::to_string(h) + " was already freed");
    raise(InterpErrorCode::BadArguments, "qubit#" + std::to_string(h) + " was never allocated");
  }
  return static_cast<std::size_t>(it - slots_.begin());
}

bool QuantumState::is_live(std::uint64_t h) const {
  return std::find(slots_.begin(), slots_.end(), h) != slots_.end();
}

void QuantumState::apply(std::uint64_t h, const Eigen::Matrix2cd& m) {
  const Eigen::Index mask = Eigen::Index{1} << position(h);
  for (Eigen::Index i = 0; i < amp_.size(); ++i) {
    if (i & mask) continue;
    const cd a0 = amp_[i];
    const cd a1 = amp_[i | mask];
    amp_[i] = m(0, 0) * a0 + m(0, 1) * a1;
    amp_[i | mask] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void QuantumState::apply_cx(std::uint64_t control, std::uint64_t target) {
  const Eigen::Index cm = Eigen::Index{1} << position(control);
  const Eigen::Index tm = Eigen::Index{1} << position(target);
  if (cm == tm) raise(InterpErrorCode::HandleReuse, "CX on a single qubit");
  for (Eigen::Index i = 0; i < amp_.size(); ++i) {
    if ((i & cm) && !(i & tm)) std::swap(amp_[i], amp_[i | tm]);
  }
}

double QuantumState::prob_one(std::uint64_t h) const {
  const Eigen::Index mask = Eigen::Index{1} << position(h);
  double p = 0;
  for (Eigen::Index i = 0; i < amp_.size(); ++i) {
    if (i & mask) p += std::norm(amp_[i]);
  }
  return p;
}

void QuantumState::project(std::uint64_t h, bool outcome) {
  const Eigen::Index mask = Eigen::Index{1} << position(h);
  for (Eigen::Index i = 0; i < amp_.size(); ++i) {
    if (bool(i & mask) != outcome) amp_[i] = 0;
  }
  const double n = amp_.norm();
  if (n < 1e-300) raise(InterpErrorCode::ImpossibleOutcome, "projection onto a zero-probability outcome");
  amp_ /= n;
}

void QuantumState::drop(std::size_t pos, bool outcome) {
  const Eigen::Index mask = Eigen::Index{1} << pos;
  Eigen::VectorXcd next(amp_.size() / 2);
  for (Eigen::Index k = 0; k < next.size(); ++k) {
    const Eigen::Index low = k & (mask - 1);
    const Eigen::Index high = (k >> pos) << (pos + 1);
    next[k] = amp_[high | low | (outcome ? mask : 0)];
  }
  amp_ = std::move(next);
  slots_.erase(slots_.begin() + static_cast<std::ptrdiff_t>(pos));
}

void QuantumState::free(std::uint64_t h) {
  const bool outcome = prob_one(h) > 0.5;
  project(h, outcome);
  drop(position(h), outcome);
}

Eigen::VectorXcd QuantumState::amplitudes(const std::vector<std::uint64_t>& order) const {
  if (order.size() != slots_.size()) {
    raise(InterpErrorCode::BadArguments, "amplitude order must list every live qubit");
  }
  std::vector<std::size_t> pos;
  for (std::uint64_t h : order) pos.push_back(position(h));
  {
    auto sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      raise(InterpErrorCode::BadArguments, "amplitude order repeats a qubit");
    }
  }
  const std::size_t k = order.size();
  Eigen::VectorXcd out(amp_.size());
  for (Eigen::Index r = 0; r < out.size(); ++r) {
    Eigen::Index i = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((r >> (k - 1 - j)) & 1) i |= Eigen::Index{1} << pos[j];
    }
    out[r] = amp_[i];
  }
  return out;
}

// ----------------------------------------------------------- OutcomeSource

OutcomeSource OutcomeSource::scripted(std::vector<bool> script) {
  OutcomeSource s;
  s.script_ = std::move(script);
  return s;
}

OutcomeSource OutcomeSource::seeded(std::uint64_t seed) {
  OutcomeSource s;
  s.seeded_ = true;
  s.rng_.seed(seed);
  return s;
}

bool OutcomeSource::next(double p_true) {
  if (seeded_) {
    ++pos_;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p_true;
  }
  if (pos_ >= script_.size()) {
    raise(InterpErrorCode::ScriptExhausted, "script of " + std::to_string(script_.size()) + " outcomes exhausted");
  }
  const bool b = script_[pos_++];
  if ((b ? p_true : 1.0 - p_true) < 1e-12) {
    raise(InterpErrorCode::ImpossibleOutcome,
          std::string("scripted outcome ") + (b ? "1" : "0") + " has probability zero");
  }
  return b;
}

// ------------------------------------------------------------- Interpreter

Interpreter::Interpreter(const Hugr& h, const Registry& r, OutcomeSource outcomes, InterpOptions opts)
    : h_(&h), reg_(&r), outcomes_(std::move(outcomes)), opts_(opts), state_(opts.qubit_cap) {}

void Interpreter::bind(std::string name, Native fn) { natives_[std::move(name)] = std::move(fn); }

std::optional<NodeId> find_function(const Hugr& h, std::string_view name) {
  for (NodeId c : h.children(h.root())) {
    if (const auto* f = std::get_if<op::FuncDef>(&h.op(c)); f && f->name == name) return c;
  }
  return std::nullopt;
}

std::vector<Value> Interpreter::run(std::string_view entry, const std::vector<Value>& args) {
  auto f = find_function(*h_, entry);
  if (!f) raise(InterpErrorCode::UnknownEntry, "no function named '" + std::string(entry) + "'");
  const auto& def = std::get<op::FuncDef>(h_->op(*f));
  if (def.signature.params != 0) {
    raise(InterpErrorCode::BadArguments, "entry '" + std::string(entry) + "' is polymorphic");
  }
  const TypeRow& ins = def.signature.body.inputs;
  if (args.size() != ins.size()) {
    raise(InterpErrorCode::BadArguments, "entry expects " + std::to_string(ins.size()) + " arguments, got " +
                                             std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (!value_has_type(args[i], ins[i])) {
      raise(InterpErrorCode::BadArguments,
            "argument " + std::to_string(i) + " (" + to_string(args[i]) + ") is not a " + ins[i].to_string());
    }
  }
  depth_ = 0;
  return exec_region(*f, args);
}

const std::vector<NodeId>& Interpreter::schedule(NodeId container) {
  auto it = schedules_.find(container);
  if (it != schedules_.end()) return it->second;
  const auto kids = h_->children(container);
  std::map<NodeId, std::size_t> indegree;
  for (NodeId c : kids) indegree[c] = 0;
  auto successors = [&](NodeId c) {
    std::vector<NodeId> out;
    for (std::uint32_t o = 0; o < h_->num_ports(c, Direction::Outgoing); ++o) {
      for (const Port& p : h_->neighbours(out_port(c, o))) {
        if (indegree.count(p.node)) out.push_back(p.node);
      }
    }
    return out;
  };
  for (NodeId c : kids) {
    for (NodeId s : successors(c)) ++indegree[s];
  }
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (auto& [n, d] : indegree) {
    if (d == 0) ready.push(n);
  }
  std::vector<NodeId> order;
  while (!ready.empty()) {
    NodeId n = ready.top();
    ready.pop();
    order.push_back(n);
    for (NodeId s : successors(n)) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (order.size() != kids.size()) {
    raise(InterpErrorCode::UnsupportedOp, "dataflow cycle in region of " + to_string(container));
  }
  return schedules_.emplace(container, std::move(order)).first->second;
}

NodeId Interpreter::static_source(NodeId n, std::uint32_t offset) const {
  auto edges = h_->edges_at(in_port(n, offset));
  if (edges.empty()) raise(InterpErrorCode::UnsupportedOp, "static port of " + to_string(n) + " is unwired");
  return h_->edge(edges.front()).src.node;
}

std::vector<Value> Interpreter::exec_region(NodeId container, std::vector<Value> inputs) {
  struct Slot {
    Value value;
    bool taken = false;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, Slot> env;
  std::vector<Value> result;
  for (NodeId n : schedule(container)) {
    const OpKind& op = h_->op(n);
    std::vector<Value> ins;
    const PortRows& rows = h_->port_kinds(n);
    for (std::uint32_t i = 0; i < rows.in.size(); ++i) {
      if (!rows.in[i].is_value()) continue;
      auto edges = h_->edges_at(in_port(n, i));
      if (edges.size() != 1) raise(InterpErrorCode::UnsupportedOp, "input " + to_string(in_port(n, i)) + " is unwired");
      const Port src = h_->edge(edges.front()).src;
      auto it = env.find({src.node.index, src.offset});
      if (it == env.end()) {
        raise(InterpErrorCode::UnsupportedOp, "no value for " + to_string(src) + " in region " + to_string(container));
      }
      if (std::holds_alternative<QubitRef>(it->second.value)) {
        if (it->second.taken) raise(InterpErrorCode::HandleReuse, "qubit wire " + to_string(src) + " consumed twice");
        it->second.taken = true;
      }
      ins.push_back(it->second.value);
    }
    std::vector<Value> outs;
    if (std::holds_alternative<op::Input>(op)) {
      outs = inputs;
    } else if (std::holds_alternative<op::Output>(op)) {
      result = std::move(ins);
      continue;
    } else {
      outs = exec_node(n, std::move(ins));
    }
    std::uint32_t k = 0;
    for (std::uint32_t o = 0; o < rows.out.size(); ++o) {
      if (!rows.out[o].is_value()) continue;
      if (k >= outs.size()) raise(InterpErrorCode::UnsupportedOp, "node " + to_string(n) + " produced too few values");
      env[{n.index, o}] = Slot{outs[k++]};
    }
  }
  return result;
}

std::vector<Value> Interpreter::exec_node(NodeId n, std::vector<Value> ins) {
  const OpKind& op = h_->op(n);
  if (const auto* e = std::get_if<op::ExtensionOp>(&op)) return exec_extension(*e, std::move(ins));
  if (std::holds_alternative<op::Const>(op)) return {};
  if (std::holds_alternative<op::LoadConst>(op)) {
    const NodeId src = static_source(n, 0);
    const auto* c = std::get_if<op::Const>(&h_->op(src));
    if (!c) raise(InterpErrorCode::UnsupportedOp, "LoadConst " + to_string(n) + " is not fed by a Const");
    return {std::visit([](auto v) -> Value { return v; }, c->value)};
  }
  if (std::holds_alternative<op::Call>(op)) {
    const std::uint32_t static_port = h_->num_ports(n, Direction::Incoming) - 1;
    return exec_call(static_source(n, static_port), std::move(ins));
  }
  if (const auto* l = std::get_if<op::LoadFunction>(&op)) return {FnRef{static_source(n, 0), l->type_args}};
  if (const auto* c = std::get_if<op::Conditional>(&op)) {
    const auto* tag = std::get_if<EnumTag>(&ins.front());
    if (!tag) raise(InterpErrorCode::BadArguments, "Conditional discriminant is not an enum tag");
    const auto cases = h_->children(n);
    if (tag->tag >= cases.size() || tag->tag >= c->cases) {
      raise(InterpErrorCode::BadArguments, "Conditional " + to_string(n) + " has no case " + std::to_string(tag->tag));
    }
    const NodeId chosen = cases[tag->tag];
    ins.erase(ins.begin());
    return exec_region(chosen, std::move(ins));
  }
  if (std::holds_alternative<op::TailLoop>(op)) {
    std::vector<Value> vars = std::move(ins);
    for (std::uint64_t iter = 0;; ++iter) {
      if (iter >= opts_.iteration_cap) {
        raise(InterpErrorCode::NonTerminating, "TailLoop " + to_string(n) + " exceeded " +
                                                   std::to_string(opts_.iteration_cap) + " iterations");
      }
      std::vector<Value> outs = exec_region(n, std::move(vars));
      const bool finished = as_bool(outs.front());
      vars.assign(outs.begin() + 1, outs.end());
      if (finished) return vars;
    }
  }
  if (std::holds_alternative<op::CFG>(op)) return exec_cfg(n, std::move(ins));
  raise(InterpErrorCode::UnsupportedOp, "cannot execute " + op_label(op));
}

std::vector<Value> Interpreter::exec_cfg(NodeId cfg, std::vector<Value> vals) {
  const auto blocks = h_->children(cfg);
  if (blocks.empty()) raise(InterpErrorCode::UnsupportedOp, "CFG " + to_string(cfg) + " has no blocks");
  NodeId block = blocks.front();
  for (std::uint64_t iter = 0;; ++iter) {
    if (std::holds_alternative<op::ExitBlock>(h_->op(block))) return vals;
    if (iter >= opts_.iteration_cap) {
      raise(InterpErrorCode::NonTerminating,
            "CFG " + to_string(cfg) + " exceeded " + std::to_string(opts_.iteration_cap) + " block executions");
    }
    std::vector<Value> outs = exec_region(block, std::move(vals));
    const auto* tag = std::get_if<EnumTag>(&outs.front());
    if (!tag) raise(InterpErrorCode::BadArguments, "block " + to_string(block) + " emitted no branch tag");
    auto targets = h_->neighbours(out_port(block, tag->tag));
    if (targets.size() != 1) {
      raise(InterpErrorCode::UnsupportedOp, "successor " + std::to_string(tag->tag) + " of " + to_string(block) +
                                                " is not wired to exactly one block");
    }
    block = targets.front().node;
    vals.assign(outs.begin() + 1, outs.end());
  }
}

std::vector<Value> Interpreter::exec_call(NodeId callee, std::vector<Value> ins) {
  if (const auto* d = std::get_if<op::FuncDecl>(&h_->op(callee))) {
    auto it = natives_.find(d->name);
    if (it == natives_.end()) raise(InterpErrorCode::UnboundDecl, "no implementation bound for '" + d->name + "'");
    return it->second(ins, state_);
  }
  if (!std::holds_alternative<op::FuncDef>(h_->op(callee))) {
    raise(InterpErrorCode::UnsupportedOp, "call target " + to_string(callee) + " is not a function");
  }
  if (depth_ >= opts_.call_depth) {
    raise(InterpErrorCode::NonTerminating, "call depth exceeded " + std::to_string(opts_.call_depth));
  }
  ++depth_;
  std::vector<Value> out = exec_region(callee, std::move(ins));
  --depth_;
  return out;
}

std::vector<Value> Interpreter::exec_extension(const op::ExtensionOp& e, std::vector<Value> ins) {
  const std::string& name = e.name;
  if (e.extension == kQuantumExt) {
    if (name == "QAlloc") return {QubitRef{state_.alloc()}};
    const std::uint64_t q = as_qubit(ins.at(0));
    if (name == "QFree") {
      state_.free(q);
      return {};
    }
    if (name == "Measure") {
      const bool b = outcomes_.next(state_.prob_one(q));
      state_.project(q, b);
      return {ins[0], boolean(b)};
    }
    if (name == "CX") {
      state_.apply_cx(q, as_qubit(ins.at(1)));
      return ins;
    }
    const double pi = std::acos(-1.0);
    Eigen::Matrix2cd m;
    if (name == "H") {
      m = hadamard();
    } else if (name == "X") {
      m = mat(0, 1, 1, 0);
    } else if (name == "Z") {
      m = mat(1, 0, 0, -1);
    } else if (name == "T") {
      m = phase(pi / 4);
    } else if (name == "Tdg") {
      m = phase(-pi / 4);
    } else if (name == "TxDg") {
      m = hadamard() * phase(-pi / 4) * hadamard();
    } else if (name == "Rz") {
      m = rz(as_f64(ins.at(1)));
    } else if (name == "Rx") {
      m = rx(as_f64(ins.at(1)));
    } else {
      raise(InterpErrorCode::UnsupportedOp, "no semantics for " + e.extension + "." + name);
    }
    state_.apply(q, m);
    return {ins[0]};
  }
  if (e.extension == kClassicalExt) {
    if (name == "Not") return {boolean(!as_bool(ins.at(0)))};
    if (name == "And") return {boolean(as_bool(ins.at(0)) && as_bool(ins.at(1)))};
    if (name == "Or") return {boolean(as_bool(ins.at(0)) || as_bool(ins.at(1)))};
    if (name == "Neg") return {-as_f64(ins.at(0))};
    const double a = as_f64(ins.at(0));
    const double b = as_f64(ins.at(1));
    if (name == "Add") return {a + b};
    if (name == "Sub") return {a - b};
    if (name == "Mul") return {a * b};
    if (name == "Lt") return {boolean(a < b)};
    if (name == "Le") return {boolean(a <= b)};
    if (name == "Gt") return {boolean(a > b)};
    if (name == "Ge") return {boolean(a >= b)};
    if (name == "Eq") return {boolean(a == b)};
    if (name == "Ne") return {boolean(a != b)};
  }
  raise(InterpErrorCode::UnsupportedOp, "no semantics for " + e.extension + "." + name);
}

// ----------------------------------------------------------------- helpers

std::vector<Value> run(const Hugr& h, std::string_view entry, const std::vector<Value>& classical_args,
                       OutcomeSource outcomes, const Registry& r, Eigen::VectorXcd* final_state) {
  Interpreter in(h, r, std::move(outcomes));
  auto f = find_function(h, entry);
  if (!f) raise(InterpErrorCode::UnknownEntry, "no function named '" + std::string(entry) + "'");
  const auto& sig = std::get<op::FuncDef>(h.op(*f)).signature.body;
  std::vector<Value> args;
  std::size_t next_classical = 0;
  for (const Type& t : sig.inputs) {
    if (t == qubit_type()) {
      args.push_back(QubitRef{in.state().alloc()});
    } else {
      if (next_classical >= classical_args.size()) {
        raise(InterpErrorCode::BadArguments, "missing classical argument " + std::to_string(next_classical));
      }
      args.push_back(classical_args[next_classical++]);
    }
  }
  if (next_classical != classical_args.size()) {
    raise(InterpErrorCode::BadArguments, "too many classical arguments");
  }
  std::vector<Value> out = in.run(entry, args);
  if (final_state) {
    std::vector<std::uint64_t> order;
    for (const Value& v : out) {
      if (const auto* q = std::get_if<QubitRef>(&v)) order.push_back(q->handle);
    }
    *final_state = in.state().amplitudes(order);
  }
  return out;
}

Eigen::MatrixXcd unitary_of(const Hugr& h, std::string_view entry, unsigned k, const Registry& r) {
  if (k > 5) raise(InterpErrorCode::BadArguments, "unitary_of supports at most 5 qubits");
  auto f = find_function(h, entry);
  if (!f) raise(InterpErrorCode::UnknownEntry, "no function named '" + std::string(entry) + "'");
  const Signature& sig = std::get<op::FuncDef>(h.op(*f)).signature.body;
  const TypeRow qubits(k, qubit_type());
  if (sig.inputs != qubits || sig.outputs != qubits) {
    raise(InterpErrorCode::BadArguments, "entry must map " + std::to_string(k) + " qubits to " + std::to_string(k));
  }
  for (NodeId n : h.descendants(*f)) {
    const OpKind& op = h.op(n);
    const auto* e = std::get_if<op::ExtensionOp>(&op);
    if (std::holds_alternative<op::Conditional>(op) || std::holds_alternative<op::TailLoop>(op) ||
        std::holds_alternative<op::CFG>(op) || (e && e->extension == kQuantumExt && e->name == "Measure")) {
      raise(InterpErrorCode::UnsupportedOp, "unitary_of: entry contains " + op_label(op));
    }
  }
  const Eigen::Index dim = Eigen::Index{1} << k;
  Eigen::MatrixXcd u(dim, dim);
  const Eigen::Matrix2cd x = mat(0, 1, 1, 0);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Interpreter in(h, r, OutcomeSource::scripted({}));
    std::vector<Value> args;
    for (unsigned j = 0; j < k; ++j) {
      const std::uint64_t q = in.state().alloc();
      if ((col >> (k - 1 - j)) & 1) in.state().apply(q, x);
      args.push_back(QubitRef{q});
    }
    std::vector<std::uint64_t> order;
    for (const Value& v : in.run(entry, args)) order.push_back(as_qubit(v));
    u.col(col) = in.state().amplitudes(order);
  }
  return u;
}

double fidelity(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

double state_fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return std::norm(a.dot(b));
}

}  // namespace hugr
