/*
 * Copyright (c) 2026, the reqcheck authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef REQCHECK_CLI_CLI_HPP_
#define REQCHECK_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "reqcheck/engine/engine.hpp"

namespace reqcheck::cli {

// Command dispatch: list | verify | render | report-schema. Reports go to
// `out`, diagnostics to `err`. Exit status: 0 all requirements hold,
// 1 something violated, 2 a bound was exhausted, 3 usage/config error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

// Parses the declarative suite format (see the README for the grammar):
//   requirement NAME / template ID / model ID / bind SLOT=ID... / bound N
//   drivers {stack|queue|tree|mutants|flawed-containers}
engine::SuiteConfig parse_suite_text(const std::string& text,
                                     const std::string& suite_name);

// builtin:<name> or a path to a suite file.
engine::SuiteConfig resolve_suite(const std::string& spec);

}  // namespace reqcheck::cli

#endif  // REQCHECK_CLI_CLI_HPP_
