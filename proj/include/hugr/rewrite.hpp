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

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hugr/extension.hpp"
#include "hugr/hugr.hpp"

namespace hugr {

/// Pattern nodes with this op match any leaf node with the given value
/// signature.
inline constexpr std::string_view kPatternExt = "rewrite.pattern";
op::ExtensionOp wildcard(Signature sig);
bool is_wildcard(const OpKind& op);

enum class RewriteErrorCode { InvalidPattern, StaleMatch, WouldCreateCycle, ValidationFailed };

class RewriteError : public std::runtime_error {
 public:
  RewriteError(RewriteErrorCode code, const std::string& msg);
  RewriteErrorCode code() const { return code_; }

 private:
  RewriteErrorCode code_;
};

std::string_view code_name(RewriteErrorCode code);

/// A single-region dataflow fragment: a Module holding one monomorphic
/// FuncDef whose signature is the boundary. Input outputs are the boundary
/// inputs, Output inputs the boundary outputs.
struct Fragment {
  Hugr hugr;
  NodeId region;
  NodeId input;
  NodeId output;
  std::vector<NodeId> nodes;  // children other than Input/Output, in order
  Signature boundary;

  /// Throws RewriteError(InvalidPattern) unless `h` has that shape and
  /// every non-IO node is a leaf without static inputs from outside.
  static Fragment from(Hugr h);
};

struct Pattern {
  Fragment fragment;
  NodeId anchor;

  /// Additionally requires: connected, the anchor is not a wildcard, every
  /// boundary input used, no Input->Output wires.
  static Pattern make(Hugr h, NodeId anchor);
};

struct Match {
  NodeId region;
  /// Pattern node -> host node, ordered by pattern node.
  std::vector<std::pair<NodeId, NodeId>> embedding;
  /// Host out-port feeding boundary input i.
  std::vector<Port> inputs;
  /// Host out-port producing boundary output j.
  std::vector<Port> outputs;

  NodeId image(NodeId pattern_node) const;
  bool operator==(const Match&) const = default;
};

struct MatchStats {
  std::size_t anchors_tried = 0;
  std::size_t extensions = 0;
  /// Frontier ports with more than one candidate edge.
  std::size_t branch_points = 0;
};

/// All convex embeddings of `p` in the dataflow region under `region`,
/// ordered by (anchor image, embedding).
std::vector<Match> find_matches(const Pattern& p, const Hugr& h, NodeId region, MatchStats* stats = nullptr);

/// Re-checks `m` against the current host: ops, exact internal edges,
/// boundary consistency and no stray external edges. Does not check
/// convexity.
bool is_current(const Pattern& p, const Match& m, const Hugr& h);

/// No dataflow path leaves the image and re-enters it.
bool is_convex(const Hugr& h, NodeId region, const std::vector<NodeId>& image);

struct RewriteRule {
  std::string name;
  Pattern lhs;
  Fragment rhs;

  /// Throws RewriteError(InvalidPattern) when the boundaries differ.
  static RewriteRule make(std::string name, Pattern lhs, Fragment rhs);
};

/// Enough to undo one application.
struct RewriteDelta {
  NodeId region;
  std::vector<RemovedSubtree> removed;
  std::vector<NodeId> added;
  std::vector<EdgeRef> added_edges;
};

/// Replaces the image of `m` by a copy of the rule's right-hand side. On any
/// error the host is left unchanged.
RewriteDelta apply(const RewriteRule& rule, const Match& m, Hugr& h, const Registry& r);

/// Reverts `apply`. The host must not have been changed in between.
void undo(const RewriteDelta& delta, Hugr& h);

struct AppliedRewrite {
  std::string rule;
  NodeId anchor;
};

struct SaturateResult {
  std::vector<AppliedRewrite> applied;
  bool budget_exhausted = false;
};

/// Sweeps the rules in list order. Each rule is applied at its leftmost
/// (smallest anchor id) match, repeatedly, until it no longer matches;
/// sweeps repeat until one changes nothing or `budget` applications have
/// been made.
SaturateResult saturate(const std::vector<RewriteRule>& rules, Hugr& h, std::size_t budget, const Registry& r,
                        const std::function<void(const Hugr&, const AppliedRewrite&)>& observer = {});

/// HH -> wire, XX -> wire, Rz(a);Rz(b) -> Rz(a+b), CX;CX -> wires.
std::vector<RewriteRule> standard_rules(const Registry& r);

/// `.hugrrule.json` documents.
std::string encode_rule(const RewriteRule& rule);
RewriteRule decode_rule(std::string_view text);

}  // namespace hugr
