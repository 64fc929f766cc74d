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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "hugr/fixtures.hpp"
#include "hugr/interp.hpp"
#include "hugr/rewrite.hpp"
#include "hugr/serial.hpp"
#include "hugr/structure.hpp"
#include "hugr/validate.hpp"
#include "support.hpp"

namespace {

using namespace hugr;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Outcome of one criterion: pass flag plus a short summary.
struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail << "first failure: " << why << "; ";
    pass = pass && ok;
  }
};

Hugr load_fixture(const std::string& name) {
  return decode(read_file((std::filesystem::path(HUGR_FIXTURE_DIR) / (name + ".hugr.json")).string()));
}

NodeId cfg_node(const Hugr& h) {
  for (NodeId n : h.nodes()) {
    if (is_a<op::CFG>(h.op(n))) return n;
  }
  throw std::runtime_error("no CFG node");
}

bool has_cfg(const Hugr& h) {
  return testing::count_ops(h, [](const OpKind& op) { return is_a<op::CFG>(op); }) > 0;
}

void fixture_suite(Verdict& v, const Registry& r) {
  const auto t0 = Clock::now();
  for (const char* name : {"rotations", "measure_branch", "external_call", "rus_loop", "rus_cfg"}) {
    const auto diags = validate(load_fixture(name), r);
    v.require(diags.empty(), std::string(name) + " has diagnostics");
  }
  const auto diags = validate(load_fixture("cloned_qubit"), r);
  v.require(diags.size() == 1 && diags[0].code == DiagCode::LinearityViolation,
            "cloned_qubit does not give exactly one LinearityViolation");
  const double t = seconds_since(t0);
  v.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  v.detail << "6 fixtures in " << t << " s";
}

void linearity_property(Verdict& v, const Registry& r) {
  testing::Rng rng(1001);
  testing::ProgramGen gen(r, rng);
  const testing::Fault faults[] = {testing::Fault::DuplicatedQubit, testing::Fault::DanglingQubit,
                                   testing::Fault::TypeMismatch};
  std::size_t injected = 0;
  std::size_t missed = 0;
  std::size_t attempts = 0;
  while (injected < 1200 && attempts < 5000) {
    ++attempts;
    Hugr h = gen.make(static_cast<unsigned>(testing::uniform(rng, 2, 4)), testing::uniform(rng, 5, 25), 2);
    if (!validate(h, r).empty()) {
      v.require(false, "generator produced an invalid graph");
      return;
    }
    const testing::Fault f = faults[attempts % 3];
    const auto want = testing::inject_fault(h, f, rng);
    if (!want) continue;
    ++injected;
    if (!testing::reports(validate(h, r), *want)) ++missed;
  }
  v.require(injected >= 1000, "only " + std::to_string(injected) + " faults injected");
  v.require(missed == 0, std::to_string(missed) + " faults missed");
  v.detail << injected << " faulted graphs, " << missed << " missed";
}

void rus_semantics(Verdict& v, const Registry& r) {
  const auto t0 = Clock::now();
  const Hugr h = load_fixture("rus_loop");
  using cd = std::complex<double>;
  Eigen::Matrix2cd target;
  target << 1, cd(0, std::sqrt(2.0)), cd(0, std::sqrt(2.0)), 1;
  target /= std::sqrt(3.0);
  double worst = 1.0;
  for (std::size_t k = 0; k <= 5; ++k) {
    std::vector<bool> script(k, false);
    script.push_back(true);
    worst = std::min(worst, fidelity(target, testing::scripted_operator(h, r, script)));
  }
  const double t = seconds_since(t0);
  v.require(worst >= 1 - 1e-9, "fidelity " + std::to_string(worst));
  v.require(t < 5.0, "runtime " + std::to_string(t) + " s");
  v.detail << "6 scripts, min fidelity " << std::setprecision(15) << worst << ", " << std::setprecision(3) << t
           << " s";
}

void structuring_equivalence(Verdict& v, const Registry& r) {
  Hugr structured = load_fixture("rus_cfg");
  const Hugr loop = load_fixture("rus_loop");
  structure_cfg(structured, cfg_node(structured), r);
  v.require(validate(structured, r).empty(), "structured fixture does not validate");
  v.require(!has_cfg(structured), "structured fixture still has a CFG");
  std::size_t scripts = 0;
  for (std::size_t len = 0; len <= 6; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<bool> script;
      for (std::size_t i = 0; i < len; ++i) script.push_back((bits >> i) & 1);
      const auto a = testing::run_once(loop, r, OutcomeSource::scripted(script));
      const auto b = testing::run_once(structured, r, OutcomeSource::scripted(script));
      v.require(testing::same_run(a, b, 1e-9), "fixture disagrees on a script of length " + std::to_string(len));
      ++scripts;
    }
  }
  testing::Rng rng(4004);
  std::size_t runs = 0;
  for (int i = 0; i < 100; ++i) {
    const Hugr original =
        testing::cfg_program(r, rng, testing::random_reducible_shape(rng, testing::uniform(rng, 2, 8)));
    Hugr h = original;
    try {
      structure_cfg(h, cfg_node(h), r);
    } catch (const StructureError& e) {
      v.require(false, std::string("instance rejected: ") + e.what());
      continue;
    }
    v.require(validate(h, r).empty(), "instance " + std::to_string(i) + " does not validate");
    v.require(!has_cfg(h), "instance " + std::to_string(i) + " still has a CFG");
    for (int run = 0; run < 20; ++run) {
      const auto script = testing::random_script(rng, 200);
      v.require(testing::same_run(testing::run_once(original, r, OutcomeSource::scripted(script)),
                                  testing::run_once(h, r, OutcomeSource::scripted(script)), 1e-9),
                "instance " + std::to_string(i) + " disagrees");
      ++runs;
    }
  }
  v.detail << scripts << " fixture scripts, 100 random CFGs x 20 runs (" << runs << ")";
}

void rewrite_soundness(Verdict& v, const Registry& r) {
  const auto rules = standard_rules(r);
  testing::Rng rng(5005);
  std::size_t steps = 0;
  double worst = 1.0;
  for (int i = 0; i < 200; ++i) {
    const Hugr before = fixtures::circuit(r, 4, testing::random_gates(rng, 4, testing::uniform(rng, 1, 50)));
    Hugr after = before;
    saturate(rules, after, 100000, r, [&](const Hugr& g, const AppliedRewrite& a) {
      ++steps;
      v.require(validate(g, r).empty(), "intermediate graph invalid after " + a.rule);
    });
    worst = std::min(worst, fidelity(unitary_of(before, "main", 4, r), unitary_of(after, "main", 4, r)));
  }
  v.require(worst >= 1 - 1e-9, "fidelity " + std::to_string(worst));

  std::vector<Pattern> patterns;
  for (const RewriteRule& rule : rules) patterns.push_back(rule.lhs);
  std::size_t hosts = 0;
  std::size_t agreeing = 0;
  while (hosts < 300) {
    const unsigned n = static_cast<unsigned>(testing::uniform(rng, 1, 3));
    const Hugr h = fixtures::circuit(r, n, testing::random_gates(rng, n, testing::uniform(rng, 1, 8), 0.5));
    const NodeId region = testing::main_of(h);
    if (h.children(region).size() > 12) continue;
    ++hosts;
    for (const Pattern& p : patterns) {
      std::set<std::vector<std::pair<NodeId, NodeId>>> fast;
      for (const Match& m : find_matches(p, h, region)) fast.insert(m.embedding);
      const bool same = fast == testing::naive_matches(p, h, region);
      v.require(same, "matcher disagrees with the exhaustive oracle");
      agreeing += same ? 1 : 0;
    }
  }
  v.detail << "200 circuits, " << steps << " validated steps, min fidelity " << std::setprecision(15) << worst
           << "; " << agreeing << "/" << hosts * patterns.size() << " oracle comparisons agree";
}

void serialization(Verdict& v, const Registry& r) {
  std::size_t checked = 0;
  auto check = [&](const Hugr& h, const std::string& what) {
    const std::string once = encode(h);
    v.require(encode(decode(once)) == once, what + " is not canonical");
    ++checked;
  };
  for (const auto& [name, text] : fixtures::files()) {
    if (name.find(".hugr.json") == std::string::npos) continue;
    check(decode(text), name);
  }
  testing::Rng rng(6006);
  testing::ProgramGen gen(r, rng);
  for (int i = 0; i < 500; ++i) {
    if (i % 3 == 0) {
      check(testing::cfg_program(r, rng, testing::random_reducible_shape(rng, testing::uniform(rng, 2, 8))),
            "generated CFG " + std::to_string(i));
    } else {
      check(gen.make(static_cast<unsigned>(testing::uniform(rng, 1, 4)), testing::uniform(rng, 5, 30), 2),
            "generated graph " + std::to_string(i));
    }
  }
  v.detail << checked << " documents byte-exact";
}

void performance(Verdict& v, const Registry& base) {
  Registry r = base;
  r.add(testing::bench_extension(93));
  std::vector<RewriteRule> rules;
  struct Std {
    const char* name;
    bool diagonal;
    bool angled;
  };
  for (const Std& g : {Std{"Z", true, false}, Std{"T", true, false}, Std{"Tdg", true, false}, Std{"Rz", true, true},
                       Std{"X", false, false}, Std{"Rx", false, true}, Std{"TxDg", false, false}}) {
    rules.push_back(testing::commute_rule(r, kQuantumExt, g.name, g.diagonal, g.angled));
  }
  for (std::size_t k = 0; k < 93; ++k) {
    rules.push_back(testing::commute_rule(r, "bench", "B" + std::to_string(k), k % 2 == 0, false));
  }

  // About 1000 nodes: bench and stdlib gates interleaved with CX on 6 qubits.
  testing::Rng rng(7007);
  std::vector<fixtures::Gate> gates;
  const unsigned n = 6;
  while (gates.size() < 960) {
    const auto a = static_cast<unsigned>(testing::uniform(rng, 0, n - 1));
    if (testing::coin(rng, 0.35)) {
      auto b = static_cast<unsigned>(testing::uniform(rng, 0, n - 2));
      if (b >= a) ++b;
      gates.push_back(fixtures::Gate{"CX", {a, b}, {}});
    } else if (testing::coin(rng, 0.5)) {
      gates.push_back(fixtures::Gate{"B" + std::to_string(testing::uniform(rng, 0, 92)), {a}, {}, "bench"});
    } else {
      static const char* names[] = {"Z", "T", "Tdg", "X", "TxDg", "H"};
      gates.push_back(fixtures::Gate{names[testing::uniform(rng, 0, 5)], {a}, {}});
    }
  }
  Hugr h = fixtures::circuit(r, n, gates);
  const std::size_t nodes = h.node_count();
  v.require(validate(h, r).empty(), "benchmark circuit invalid");
  const auto t0 = Clock::now();
  const auto res = saturate(rules, h, 1000000, r);
  const double t = seconds_since(t0);
  v.require(!res.budget_exhausted, "budget exhausted");
  v.require(validate(h, r).empty(), "result invalid");
  v.require(t < 5.0, "runtime " + std::to_string(t) + " s");
  v.detail << rules.size() << " rules, " << nodes << " nodes, " << res.applied.size() << " applications in "
           << std::setprecision(3) << t << " s";
}

}  // namespace

int main() {
  const Registry r = stdlib();
  const std::vector<std::pair<std::string, std::function<void(Verdict&, const Registry&)>>> criteria = {
      {"1 fixture suite", fixture_suite},
      {"2 linearity property", linearity_property},
      {"3 repeat-until-success semantics", rus_semantics},
      {"4 structuring equivalence", structuring_equivalence},
      {"5 rewrite soundness", rewrite_soundness},
      {"6 serialization roundtrip", serialization},
      {"7 performance smoke", performance},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      check(v, r);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << v.detail.str() << std::endl;
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
