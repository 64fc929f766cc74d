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
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hugr/extension.hpp"
#include "hugr/hugr.hpp"

namespace hugr {

/// The control-flow skeleton of a CFG node.
struct CfgView {
  std::vector<NodeId> blocks;  // child order; blocks[0] is the entry
  NodeId entry;
  NodeId exit;
  /// Successors in tag order. The exit block has none.
  std::map<NodeId, std::vector<NodeId>> succ;

  std::vector<NodeId> preds(NodeId b) const;
};

/// Throws std::invalid_argument unless `cfg` is a CFG node with an entry
/// block and exactly one ExitBlock, every successor wired once.
CfgView cfg_view(const Hugr& h, NodeId cfg);

/// Restriction of `c` to blocks reachable from the entry. The exit stays
/// even when unreachable. Removed blocks are appended to `pruned`.
CfgView prune_unreachable(const CfgView& c, std::vector<NodeId>* pruned = nullptr);

/// Immediate dominators of the reachable blocks; the entry maps to itself.
std::map<NodeId, NodeId> dominators(const CfgView& c);

/// True iff repeated T1 (drop self loop) and T2 (merge a block into its
/// unique predecessor) collapse the reachable graph to a single node.
bool is_reducible(const CfgView& c);

struct LoopCandidate {
  NodeId header;
  std::vector<std::pair<NodeId, NodeId>> back_edges;
  std::set<NodeId> body;  // includes the header
};

/// Natural loops, one per header, ordered by header position in the CFG.
std::vector<LoopCandidate> find_loops(const CfgView& c, const std::map<NodeId, NodeId>& idom);

enum class StructureErrorCode { IrreducibleCfg, InvalidInput, UnsupportedLoop };

std::string_view code_name(StructureErrorCode code);

class StructureError : public std::runtime_error {
 public:
  StructureError(StructureErrorCode code, const std::string& msg);
  StructureErrorCode code() const { return code_; }

 private:
  StructureErrorCode code_;
};

struct StructureReport {
  std::size_t converted = 0;
  std::vector<std::string> warnings;
};

/// Replaces `cfg` in its parent region by an equivalent network of
/// Conditional and TailLoop nodes. Loop exits must carry the same row as the
/// loop header's inputs. On error `h` is left unchanged.
StructureReport structure_cfg(Hugr& h, NodeId cfg, const Registry& r);

/// Structures every CFG in `h`, innermost first.
StructureReport structure_all(Hugr& h, const Registry& r);

}  // namespace hugr
