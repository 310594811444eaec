// Copyright 2026 The flowlab Authors
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

#ifndef FLOWLAB_TOOLS_CLI_HPP_
#define FLOWLAB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace flowlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs the flowlab command line with argv-style arguments (args[0] is the
// program name). Results go to `out` unless --output names a file;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Range {
  double start = 0.0;
  double step = 0.0;
  double stop = 0.0;
};

// "start:step:stop". Throws CLI::ValidationError on malformed input.
Range parse_range(const std::string& text);

// "lo:hi" with lo < hi.
std::pair<double, double> parse_window(const std::string& text);

}  // namespace flowlab::cli

#endif  // FLOWLAB_TOOLS_CLI_HPP_
