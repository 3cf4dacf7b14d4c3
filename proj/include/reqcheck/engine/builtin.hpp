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

#ifndef REQCHECK_ENGINE_BUILTIN_HPP_
#define REQCHECK_ENGINE_BUILTIN_HPP_

#include <string>
#include <vector>

#include "reqcheck/engine/engine.hpp"

namespace reqcheck::engine {

// Built-in suites addressable from the CLI as builtin:<name>.
//   calendar           the two calendar requirements on the compliant model
//   calendar-defects   the same requirements on the 3-equinox variant
//   stimulus           the stack-draining loop requirement
//   turnstile          a safety requirement over the scripted turnstile
//   adt                stack, queue-with-append and binary-tree suites
//   mutants            every mutant binding under its reference suite
//   flawed-containers  the 17 copy variants under both probes
//   all                everything above
std::vector<std::string> builtin_suite_names();
bool is_builtin_suite(const std::string& name);
SuiteConfig builtin_suite(const std::string& name);

}  // namespace reqcheck::engine

#endif  // REQCHECK_ENGINE_BUILTIN_HPP_
