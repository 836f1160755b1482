// Copyright 2026 The evkb Authors.
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

#ifndef EVKB_CLI_CLI_HPP_
#define EVKB_CLI_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "evkb/learning/forest.hpp"

namespace evkb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Settings shared by the stages; a --config file overrides flags.
struct PipelineConfig {
  bool noun_predicates = false;
  bool enforce_roles = false;
  bool require_description = false;
  double gamma = 0.3;
  learning::ForestParams forest;
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> ontology;
  std::optional<std::filesystem::path> entities;
  std::optional<std::filesystem::path> model;
};

// Applies a JSON config object on top of `config`. Relative paths are
// resolved against the config file's directory. Throws UsageError on
// unknown keys or bad values.
void apply_config_file(const std::filesystem::path& path, PipelineConfig& config);

// Runs `evkb <args...>` (args[0] is the program name). Returns the exit
// code: 0 ok, 1 usage error, 2 data error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evkb::cli

#endif  // EVKB_CLI_CLI_HPP_
