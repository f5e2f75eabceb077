/*
Copyright (c) 2026 The rcmbfs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcmbfs::cli {

enum ExitCode : int
{
  kSuccess = 0,
  kUsage = 1,
  kValidationFailed = 2,
  kIoError = 3,
};

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Subcommands: generate, stats, reorder, run, sweep, validate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splices "key = value" lines from any --config file into the argument
/// list as --key=value, skipping keys given explicitly on the command line.
[[nodiscard]] std::vector<std::string> expand_config(const std::vector<std::string>& args);

} // namespace rcmbfs::cli
