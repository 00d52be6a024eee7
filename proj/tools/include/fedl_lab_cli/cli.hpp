// Copyright 2026 The fedl-lab Authors
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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fedl_lab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitNumericalFailure = 3,
};

// Runs one subcommand. `args` excludes the program name, e.g.
// {"allocate", "--config", "inst.json", "--out", "run1"}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// SHA-1 of "blob <size>\0" followed by the bytes, as lowercase hex.
std::string git_blob_hash(std::string_view bytes);

// "MIN:MAX:COUNT:log" or "MIN:MAX:COUNT:lin". COUNT may be zero; the caller
// decides whether an empty grid is acceptable.
std::vector<double> parse_kappa_grid(std::string_view text);

}  // namespace fedl_lab::cli
