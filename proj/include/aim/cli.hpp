/*
   Copyright 2026 The aim Authors

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

#ifndef AIM_CLI_HPP
#define AIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace aim::cli {

/// Process exit status; a stable contract for scripts.
enum ExitCode : int {
    kVerified = 0,
    kUsage = 1,
    kPipeline = 2,
    kNoTermination = 3,
};

struct Preset {
    std::string name;
    std::string summary;
    bool q_difference;
    std::string lambda0;
    std::string s0;
    std::vector<std::pair<std::string, std::string>> bindings;  // defaults, applied in order
};

const std::vector<Preset>& presets();
const Preset& find_preset(const std::string& name);

/// Runs `aim <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aim::cli

#endif
