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


#include "cli_support.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <stdexcept>

namespace picard::cli {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

io::Json run_info(const std::string& subcommand, std::uint64_t seed, const std::string& canonical_config) {
  return io::Json{{"version", PICARD_VERSION},
                  {"subcommand", subcommand},
                  {"seed", seed},
                  {"config_hash", hex64(fnv1a64(canonical_config))}};
}

std::string resolve_output(const std::string& out, const std::string& subcommand) {
  if (!out.empty()) return out;
  if (const char* dir = std::getenv("PICARD_OUT_DIR"); dir != nullptr && *dir != '\0')
    return (std::filesystem::path(dir) / (subcommand + ".json")).string();
  return "";
}

void emit(const io::Json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << io::dump(doc);
    return;
  }
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  io::write_file(path, doc);
}

std::pair<int, int> parse_specialization(const std::string& text) {
  int k = -1, r = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("specialization '" + text + "': expected k=<int>,r=<int>");
    const std::string key = part.substr(0, eq);
    const int value = static_cast<int>(parse_integer(part.substr(eq + 1)).get_si());
    if (key == "k") k = value;
    else if (key == "r") r = value;
    else throw std::invalid_argument("specialization '" + text + "': unknown key '" + key + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (k < 0 || r < 1) throw std::invalid_argument("specialization '" + text + "': need k >= 0 and r >= 1");
  return {k, r};
}

io::Json items_json(const std::vector<Item>& items) {
  io::Json arr = io::Json::array();
  for (const auto& it : items) arr.push_back(io::Json{{"id", it.id}, {"pass", it.pass}, {"detail", it.detail}});
  return arr;
}

bool all_pass(const std::vector<Item>& items) {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

}  // namespace picard::cli
