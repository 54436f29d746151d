/*
   Copyright 2026 The posflag authors

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


#ifndef POSFLAG_CLI_HPP
#define POSFLAG_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace posflag::cli {

enum Exit : int { ok = 0, verification_failed = 1, input_error = 2, precondition_error = 3 };

// args excludes the program name. JSON goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in = std::cin, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

int run(int argc, char** argv);

}  // namespace posflag::cli

#endif
