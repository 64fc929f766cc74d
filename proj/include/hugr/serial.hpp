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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hugr/extension.hpp"
#include "hugr/hugr.hpp"

namespace hugr {

inline constexpr int kFormatVersion = 1;

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON text for `h`: nodes in hierarchy preorder with dense ids,
/// edges sorted by (src node, src offset, dst node, dst offset). Structurally
/// equal graphs encode to identical bytes. Invalid graphs encode too.
std::string encode(const Hugr& h);

/// Dense id each live node receives in the canonical encoding.
std::map<NodeId, std::uint32_t> canonical_ids(const Hugr& h);

struct Decoded {
  Hugr hugr;
  /// Document id -> node id in `hugr`.
  std::map<std::uint64_t, NodeId> ids;
  std::vector<std::string> warnings;
};

/// Parses an envelope. Unknown extension ops are kept as-is. Throws
/// DecodeError for malformed documents, version mismatches and dangling ids.
Decoded decode_document(std::string_view text);
inline Hugr decode(std::string_view text) { return decode_document(text).hugr; }

/// Extension declaration (`.hugrext.json`).
std::string encode_extension(const Extension& e);
Extension decode_extension(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace hugr
