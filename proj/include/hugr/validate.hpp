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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hugr/extension.hpp"
#include "hugr/hugr.hpp"

namespace hugr {

enum class DiagCode {
  NonTreeHierarchy,
  BadChildKind,
  MissingIO,
  EdgeTypeMismatch,
  LinearityViolation,
  InputPortUnwired,
  DataflowCycle,
  CaseArityMismatch,
  CaseSignatureMismatch,
  LoopSignatureMismatch,
  CfgShapeError,
  StaticScopeError,
  UnknownOp,
};

inline constexpr DiagCode kAllDiagCodes[] = {
    DiagCode::NonTreeHierarchy,      DiagCode::BadChildKind,          DiagCode::MissingIO,
    DiagCode::EdgeTypeMismatch,      DiagCode::LinearityViolation,    DiagCode::InputPortUnwired,
    DiagCode::DataflowCycle,         DiagCode::CaseArityMismatch,     DiagCode::CaseSignatureMismatch,
    DiagCode::LoopSignatureMismatch, DiagCode::CfgShapeError,         DiagCode::StaticScopeError,
    DiagCode::UnknownOp,
};

std::string_view code_name(DiagCode code);

struct Diagnostic {
  DiagCode code;
  NodeId node;
  std::optional<Port> port;
  std::string message;
};

/// `CODE node=<id> port=<dir><offset>: message`, with `port=-` when the
/// diagnostic is not about a port.
std::string render(const Diagnostic& d);

/// All problems in `h`, sorted by node id then port. Empty means valid.
std::vector<Diagnostic> validate(const Hugr& h, const Registry& r);

/// Checks local to the region whose parent is `parent`: the parent's child
/// rules, the children's ops and ports, the edges entering the children and
/// the dataflow order among them. validate() is the union of this over every
/// node plus the root check.
std::vector<Diagnostic> validate_region(const Hugr& h, NodeId parent, const Registry& r);

/// Lint: copyable outputs nothing consumes.
std::vector<Port> discarded_values(const Hugr& h, const Registry& r);

}  // namespace hugr
