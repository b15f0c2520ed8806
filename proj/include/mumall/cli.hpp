/* Copyright 2026 The mumall Authors. All Rights Reserved.

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

#ifndef MUMALL_CLI_HPP
#define MUMALL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mumall {

// Exit codes: 0 provable / valid, 1 unprovable / invalid, 2 resource or
// unsupported, 64 usage, 70 internal error.
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

int run(int argc, char** argv);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mumall

#endif  // MUMALL_CLI_HPP
