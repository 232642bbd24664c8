// Copyright 2026 The ontodesc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace ontodesc::testing {

struct CliRun {
  int status = -1;  // exit code, or -1 if the process did not exit normally
  std::string out;  // stdout
  double seconds = 0;
};

/// Runs the command-line tool with `args` (shell-quoted here) and captures
/// its standard output; stderr is discarded.
CliRun run_cli(const std::vector<std::string>& args);

/// Non-empty lines of `text`.
std::vector<std::string> lines(const std::string& text);

}  // namespace ontodesc::testing
