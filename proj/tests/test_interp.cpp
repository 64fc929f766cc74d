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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "hugr/builder.hpp"
#include "hugr/fixtures.hpp"
#include "hugr/interp.hpp"
#include "hugr/validate.hpp"
#include "support.hpp"

namespace hugr {
namespace {

using cd = std::complex<double>;
using fixtures::Gate;

const Registry& reg() {
  static const Registry r = stdlib();
  return r;
}

const Type q = qubit_type();
const double kPi = std::acos(-1.0);

Eigen::Matrix2cd rz(double t) {
  Eigen::Matrix2cd m;
  m << std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2);
  return m;
}

Eigen::Matrix2cd rx(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), cd(0, -std::sin(t / 2)), cd(0, -std::sin(t / 2)), std::cos(t / 2);
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Eigen::Vector2cd ket0() { return Eigen::Vector2cd(1, 0); }

/// "main": qubit -> bool measuring after H.
Hugr coin_program() {
  Hugr h;
  auto b = define_function(h, h.root(), "main", Signature{{q}, {bool_type()}});
  auto m = b.q(reg(), "Measure", b.q(reg(), "H", {b.input(0)}));
  b.q(reg(), "QFree", {m[0]});
  b.finish({m[1]});
  return h;
}

TEST(Interp, RotationsMatchMatrixProduct) {
  const Hugr h = fixtures::rotations(reg());
  Eigen::VectorXcd state;
  auto out = run(h, "main", {0.3, 0.4}, OutcomeSource::scripted({}), reg(), &state);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<QubitRef>(out[0]));
  const Eigen::Vector2cd want = rx(0.7) * rz(0.7) * ket0();
  EXPECT_LT((state - want).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Interp, MeasureSelectsBranch) {
  const Hugr h = fixtures::measure_and_branch(reg());
  {
    Interpreter in(h, reg(), OutcomeSource::scripted({true}));
    const auto a = in.state().alloc();
    const auto d = in.state().alloc();
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    in.state().apply(a, x);
    auto out = in.run("main", {QubitRef{a}, QubitRef{d}});
    const Eigen::VectorXcd s = in.state().amplitudes({std::get<QubitRef>(out[0]).handle});
    EXPECT_LT((s - Eigen::Vector2cd(0, 1)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(in.outcomes().consumed(), 1u);
  }
  {
    Eigen::VectorXcd s;
    run(h, "main", {}, OutcomeSource::scripted({false}), reg(), &s);
    EXPECT_LT((s - hadamard() * ket0()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Interp, RepeatUntilSuccessAppliesTargetOperator) {
  const Hugr h = fixtures::rus_loop(reg());
  Eigen::Matrix2cd v;
  v << 1, cd(0, std::sqrt(2.0)), cd(0, std::sqrt(2.0)), 1;
  v /= std::sqrt(3.0);
  for (std::size_t k = 0; k <= 5; ++k) {
    std::vector<bool> script(k, false);
    script.push_back(true);
    const Eigen::Matrix2cd got = testing::scripted_operator(h, reg(), script);
    EXPECT_GT(fidelity(v, got), 1 - 1e-9) << "failures " << k;
  }
}

TEST(Interp, UnitaryOfSimpleCircuits) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  EXPECT_LT((unitary_of(fixtures::circuit(reg(), 1, {}), "main", 1, reg()) - id).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((unitary_of(fixtures::circuit(reg(), 1, {Gate{"H", {0}, {}}, Gate{"H", {0}, {}}}), "main", 1, reg()) - id)
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
  const auto txdg = unitary_of(fixtures::circuit(reg(), 1, {Gate{"TxDg", {0}, {}}}), "main", 1, reg());
  EXPECT_GT(fidelity(txdg, rx(-kPi / 4)), 1 - 1e-12);
  // First qubit is the most significant bit.
  const auto cx = unitary_of(fixtures::circuit(reg(), 2, {Gate{"CX", {0, 1}, {}}}), "main", 2, reg());
  Eigen::Matrix4cd want;
  want << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  EXPECT_LT((cx - want).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(unitary_of(fixtures::measure_and_branch(reg()), "main", 2, reg()), InterpError);
  EXPECT_THROW(unitary_of(fixtures::circuit(reg(), 1, {}), "main", 2, reg()), InterpError);
}

InterpErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InterpError& e) {
    EXPECT_NE(std::string(e.what()).find(code_name(e.code())), std::string::npos);
    return e.code();
  }
  ADD_FAILURE() << "no InterpError";
  return InterpErrorCode::UnsupportedOp;
}

TEST(Interp, QubitCap) {
  Hugr h;
  auto b = define_function(h, h.root(), "main", Signature{{}, {}});
  std::vector<Wire> qs;
  for (int i = 0; i < 11; ++i) qs.push_back(b.q(reg(), "QAlloc", {})[0]);
  for (Wire w : qs) b.q(reg(), "QFree", {w});
  b.finish({});
  ASSERT_TRUE(validate(h, reg()).empty());
  EXPECT_EQ(error_of([&] { run(h, "main", {}, OutcomeSource::scripted({}), reg()); }),
            InterpErrorCode::QubitCapExceeded);
}

TEST(Interp, ScriptErrors) {
  const Hugr h = fixtures::measure_and_branch(reg());
  EXPECT_EQ(error_of([&] { run(h, "main", {}, OutcomeSource::scripted({}), reg()); }),
            InterpErrorCode::ScriptExhausted);
  EXPECT_EQ(error_of([&] { run(h, "main", {}, OutcomeSource::scripted({true}), reg()); }),
            InterpErrorCode::ImpossibleOutcome);
}

TEST(Interp, DeclarationsNeedNativeBinding) {
  const Hugr h = fixtures::external_call(reg());
  EXPECT_EQ(error_of([&] { run(h, "main", {}, OutcomeSource::scripted({}), reg()); }), InterpErrorCode::UnboundDecl);
  Interpreter in(h, reg(), OutcomeSource::scripted({}));
  in.bind("foo", [](const std::vector<Value>& args, QuantumState& s) -> std::vector<Value> {
    for (const Value& v : args) s.free(std::get<QubitRef>(v).handle);
    return {EnumTag{1, 2}};
  });
  const auto a = in.state().alloc();
  const auto b = in.state().alloc();
  auto out = in.run("main", {QubitRef{a}, QubitRef{b}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(to_string(out[0]), "true");
  EXPECT_EQ(in.state().num_live(), 0u);
}

TEST(Interp, NonTerminatingLoop) {
  Hugr h;
  auto b = define_function(h, h.root(), "main", Signature{{q}, {q}});
  TailLoopBuilder loop = add_tail_loop(b, {b.input(0)});
  loop.body.finish({loop.body.tag(0, 2), loop.body.q(reg(), "X", {loop.body.input(0)})[0]});
  b.finish(loop.outputs());
  ASSERT_TRUE(validate(h, reg()).empty());
  InterpOptions opts;
  opts.iteration_cap = 1000;
  Interpreter in(h, reg(), OutcomeSource::scripted({}), opts);
  const auto qb = in.state().alloc();
  EXPECT_EQ(error_of([&] { in.run("main", {QubitRef{qb}}); }), InterpErrorCode::NonTerminating);
}

TEST(Interp, EntryAndArgumentErrors) {
  const Hugr h = fixtures::rotations(reg());
  EXPECT_EQ(error_of([&] { run(h, "nope", {}, OutcomeSource::scripted({}), reg()); }), InterpErrorCode::UnknownEntry);
  EXPECT_EQ(error_of([&] { run(h, "main", {0.1}, OutcomeSource::scripted({}), reg()); }),
            InterpErrorCode::BadArguments);
  EXPECT_EQ(error_of([&] { run(h, "main", {0.1, 0.2, 0.3}, OutcomeSource::scripted({}), reg()); }),
            InterpErrorCode::BadArguments);
  EXPECT_FALSE(find_function(h, "nope").has_value());
}

TEST(Interp, HandleReuse) {
  QuantumState s;
  const auto a = s.alloc();
  const auto b = s.alloc();
  s.free(a);
  EXPECT_EQ(error_of([&] { s.free(a); }), InterpErrorCode::HandleReuse);
  EXPECT_EQ(error_of([&] { s.apply_cx(b, b); }), InterpErrorCode::HandleReuse);
  EXPECT_NE(s.alloc(), a);
}

TEST(Interp, ValueRendering) {
  EXPECT_EQ(to_string(Value{EnumTag{0, 2}}), "false");
  EXPECT_EQ(to_string(Value{EnumTag{2, 3}}), "tag(2/3)");
  EXPECT_EQ(to_string(Value{QubitRef{4}}), "qubit#4");
  EXPECT_EQ(to_string(Value{std::int64_t{-7}}), "-7");
  EXPECT_EQ(to_string(Value{0.5}), "0.5");
}

TEST(Interp, StatesStayNormalised) {
  testing::Rng rng(41);
  testing::ProgramGen gen(reg(), rng);
  for (int round = 0; round < 60; ++round) {
    const Hugr h = gen.make(3, 15, 2);
    const auto res =
        testing::run_once(h, reg(), OutcomeSource::seeded(round), {Value{testing::uniform_angle(rng)}});
    ASSERT_FALSE(res.error.has_value()) << code_name(*res.error);
    EXPECT_NEAR(res.state.norm(), 1.0, 1e-9);
  }
}

TEST(Interp, ScriptedRunsAreDeterministic) {
  testing::Rng rng(42);
  testing::ProgramGen gen(reg(), rng);
  for (int round = 0; round < 40; ++round) {
    const Hugr h = gen.make(2, 12, 2);
    const double angle = testing::uniform_angle(rng);
    const auto script = testing::random_script(rng, 64);
    const auto a = testing::run_once(h, reg(), OutcomeSource::scripted(script), {Value{angle}});
    const auto b = testing::run_once(h, reg(), OutcomeSource::scripted(script), {Value{angle}});
    EXPECT_TRUE(testing::same_run(a, b, 0.0));
    const auto c = testing::run_once(h, reg(), OutcomeSource::seeded(7), {Value{angle}});
    const auto d = testing::run_once(h, reg(), OutcomeSource::seeded(7), {Value{angle}});
    EXPECT_TRUE(testing::same_run(c, d, 0.0));
  }
}

TEST(Interp, SampledOutcomesFollowBornRule) {
  const Hugr h = coin_program();
  OutcomeSource src = OutcomeSource::seeded(2026);
  std::size_t ones = 0;
  const std::size_t shots = 100000;
  for (std::size_t i = 0; i < shots; ++i) {
    Interpreter in(h, reg(), std::move(src));
    auto out = in.run("main", {QubitRef{in.state().alloc()}});
    ones += std::get<EnumTag>(out[0]).tag;
    src = in.outcomes();
  }
  const double p = static_cast<double>(ones) / static_cast<double>(shots);
  EXPECT_GE(p, 0.49);
  EXPECT_LE(p, 0.51);
}

}  // namespace
}  // namespace hugr
