// Copyright 2026 The picard-cycles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Plumbing shared by the picard-cycles subcommands: exit codes, run
// metadata and output routing.

#ifndef PICARD_TOOLS_CLI_SUPPORT_HPP_
#define PICARD_TOOLS_CLI_SUPPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "picard/json_io.hpp"

namespace picard::cli {

enum ExitCode : int { kOk = 0, kError = 1, kConfig = 2, kInconclusive = 3, kPropertyFailure = 4 };

std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t v);

// {"version", "subcommand", "seed", "config_hash"}; the hash is FNV-1a over
// the canonical key-value rendering of the subcommand's options.
io::Json run_info(const std::string& subcommand, std::uint64_t seed, const std::string& canonical_config);

// Output path: `out` if given, else $PICARD_OUT_DIR/<subcommand>.json when
// that variable is set, else "" (standard output).
std::string resolve_output(const std::string& out, const std::string& subcommand);
void emit(const io::Json& doc, const std::string& path);

// "k=1,r=2" -> (1, 2). Throws std::invalid_argument on anything else.
std::pair<int, int> parse_specialization(const std::string& text);

// Verification items for `verify` and `levels`.
struct Item {
  std::string id;
  bool pass = false;
  io::Json detail;
};
io::Json items_json(const std::vector<Item>& items);
bool all_pass(const std::vector<Item>& items);

}  // namespace picard::cli

#endif  // PICARD_TOOLS_CLI_SUPPORT_HPP_
