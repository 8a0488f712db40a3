/*
   Copyright 2026 The omegapi Authors

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

#ifndef OMEGAPI_TOOLS_CLI_HPP
#define OMEGAPI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace omegapi::cli {

// Exit codes: 0 pass, 1 semantic failure, 2 usage, parse or IO error.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegapi::cli

#endif
