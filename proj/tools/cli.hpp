/* Copyright 2026 The compoz Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef COMPOZ_TOOLS_CLI_HPP
#define COMPOZ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace compoz::cli {

inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsageError = 2;

/// Runs one command; args excludes the program name. Reports go to out,
/// one-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compoz::cli

#endif  // COMPOZ_TOOLS_CLI_HPP
