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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hugr/builder.hpp"
#include "hugr/extension.hpp"
#include "hugr/hugr.hpp"

/// Reference programs used by the tests, the CLI examples and the fixture
/// files under tests/fixtures. Every program has a module-level FuncDef
/// named "main".
namespace hugr::fixtures {

/// Rz then Rx on a qubit, both by the sum of two f64 inputs.
Hugr rotations(const Registry& r);

/// One qubit fed into both inputs of a CX. Has exactly one linearity error.
Hugr cloned_qubit(const Registry& r);

/// Measure the first qubit, then H or X on the second depending on the result.
Hugr measure_and_branch(const Registry& r);

/// Call to a declared (external) function `foo : qubit, qubit -> bool`.
Hugr external_call(const Registry& r);

/// Repeat-until-success (I + i sqrt(2) X)/sqrt(3) as a TailLoop.
Hugr rus_loop(const Registry& r);

/// The same protocol as a CFG: entry, body (loop header), fix, exit.
Hugr rus_cfg(const Registry& r);

/// CFG whose loop B <-> C can be entered at both B and C.
Hugr irreducible_cfg(const Registry& r);

/// One step of the RUS protocol on data qubit `d`: allocates an ancilla,
/// entangles, measures and frees it. Returns {outcome, data}. On outcome
/// false the data qubit carries an extra Z.
std::pair<Wire, Wire> rus_step(RegionBuilder& b, const Registry& r, Wire d);

struct Gate {
  std::string name;
  std::vector<unsigned> qubits;
  std::optional<double> angle;
  std::string extension = std::string(kQuantumExt);
};

/// "main": qubit^n -> qubit^n applying `gates` in order. Angles become
/// Const/LoadConst pairs.
Hugr circuit(const Registry& r, unsigned n, const std::vector<Gate>& gates);

/// Extension "demo.ion" with ops GPi (qubit, f64 -> qubit) and MS
/// (qubit, qubit, f64 -> qubit, qubit).
Extension demo_extension();

/// Two-qubit circuit mixing demo.ion and stdlib ops. `r` must include
/// demo_extension().
Hugr demo_circuit(const Registry& r);

/// Same graph as `canonical` (an encoded document) but with shuffled,
/// non-dense ids, nodes listed deepest first and edges reversed.
std::string scramble_ids(std::string_view canonical);

/// Every file under tests/fixtures, keyed by file name.
std::map<std::string, std::string> files();

}  // namespace hugr::fixtures
