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

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "hugr/extension.hpp"
#include "hugr/hugr.hpp"

namespace hugr {

struct QubitRef {
  std::uint64_t handle = 0;
  bool operator==(const QubitRef&) const = default;
};

/// A function value: the FuncDef/FuncDecl node plus its instantiation.
struct FnRef {
  NodeId node;
  TypeRow type_args;
  bool operator==(const FnRef&) const = default;
};

using Value = std::variant<double, std::int64_t, EnumTag, FnRef, QubitRef>;

std::string to_string(const Value& v);

enum class InterpErrorCode {
  QubitCapExceeded,
  ScriptExhausted,
  UnboundDecl,
  NonTerminating,
  ImpossibleOutcome,
  UnknownEntry,
  BadArguments,
  UnsupportedOp,
  HandleReuse,
};

std::string_view code_name(InterpErrorCode code);

class InterpError : public std::runtime_error {
 public:
  InterpError(InterpErrorCode code, const std::string& msg);
  InterpErrorCode code() const { return code_; }

 private:
  InterpErrorCode code_;
};

/// Dense statevector over the live qubits. Handles are never reused.
class QuantumState {
 public:
  explicit QuantumState(std::size_t cap = 10) : cap_(cap), amp_(Eigen::VectorXcd::Ones(1)) {}

  /// New qubit in |0>.
  std::uint64_t alloc();
  /// Projects onto the more likely outcome and drops the qubit.
  void free(std::uint64_t h);

  void apply(std::uint64_t h, const Eigen::Matrix2cd& m);
  void apply_cx(std::uint64_t control, std::uint64_t target);

  double prob_one(std::uint64_t h) const;
  void project(std::uint64_t h, bool outcome);

  bool is_live(std::uint64_t h) const;
  std::size_t num_live() const { return slots_.size(); }
  std::size_t cap() const { return cap_; }
  double norm() const { return amp_.norm(); }

  /// Amplitudes with `order[0]` as the most significant bit. `order` must
  /// list every live handle exactly once.
  Eigen::VectorXcd amplitudes(const std::vector<std::uint64_t>& order) const;

 private:
  std::size_t position(std::uint64_t h) const;
  void drop(std::size_t pos, bool outcome);

  std::size_t cap_;
  std::vector<std::uint64_t> slots_;  // handle stored at bit position i
  Eigen::VectorXcd amp_;
  std::uint64_t next_ = 0;
};

/// Measurement outcomes: a fixed script or Born-rule sampling from a seed.
class OutcomeSource {
 public:
  static OutcomeSource scripted(std::vector<bool> script);
  static OutcomeSource seeded(std::uint64_t seed);

  /// Next outcome given P(true). Scripted outcomes with probability below
  /// 1e-12 raise ImpossibleOutcome.
  bool next(double p_true);
  std::size_t consumed() const { return pos_; }

 private:
  OutcomeSource() = default;
  bool seeded_ = false;
  std::vector<bool> script_;
  std::size_t pos_ = 0;
  std::mt19937_64 rng_;
};

struct InterpOptions {
  std::size_t qubit_cap = 10;
  std::uint64_t iteration_cap = 100000;
  std::size_t call_depth = 256;
};

class Interpreter {
 public:
  using Native = std::function<std::vector<Value>(const std::vector<Value>&, QuantumState&)>;

  Interpreter(const Hugr& h, const Registry& r, OutcomeSource outcomes, InterpOptions opts = {});

  /// Implementation used when a Call reaches a FuncDecl named `name`.
  void bind(std::string name, Native fn);

  /// Runs the module-level FuncDef `entry`. Qubit arguments must be live
  /// handles of state().
  std::vector<Value> run(std::string_view entry, const std::vector<Value>& args);

  QuantumState& state() { return state_; }
  const OutcomeSource& outcomes() const { return outcomes_; }

 private:
  std::vector<Value> exec_region(NodeId container, std::vector<Value> inputs);
  std::vector<Value> exec_node(NodeId n, std::vector<Value> ins);
  std::vector<Value> exec_extension(const op::ExtensionOp& e, std::vector<Value> ins);
  std::vector<Value> exec_call(NodeId callee, std::vector<Value> ins);
  std::vector<Value> exec_cfg(NodeId cfg, std::vector<Value> ins);
  const std::vector<NodeId>& schedule(NodeId container);
  NodeId static_source(NodeId n, std::uint32_t offset) const;

  const Hugr* h_;
  const Registry* reg_;
  OutcomeSource outcomes_;
  InterpOptions opts_;
  QuantumState state_;
  std::map<std::string, Native, std::less<>> natives_;
  std::map<NodeId, std::vector<NodeId>> schedules_;
  std::size_t depth_ = 0;
};

/// FuncDef named `name` directly under the root, if any.
std::optional<NodeId> find_function(const Hugr& h, std::string_view name);

/// Convenience: one run with fresh |0> qubits for every qubit input.
/// Returns the outputs; `final_state`, when given, receives the amplitudes
/// of the output qubits (first output qubit most significant).
std::vector<Value> run(const Hugr& h, std::string_view entry, const std::vector<Value>& classical_args,
                       OutcomeSource outcomes, const Registry& r, Eigen::VectorXcd* final_state = nullptr);

/// Matrix of a measurement-free entry taking and returning `k` qubits
/// (k <= 5), built column by column from basis-state runs. Qubit 0 is the
/// most significant index bit.
Eigen::MatrixXcd unitary_of(const Hugr& h, std::string_view entry, unsigned k, const Registry& r);

/// |tr(A^dagger B)| / d: 1 iff A and B agree up to global phase (for unitaries).
double fidelity(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// |<a|b>|^2 for normalised vectors.
double state_fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace hugr
