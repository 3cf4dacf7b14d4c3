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

#ifndef REQCHECK_ERRORS_HPP_
#define REQCHECK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace reqcheck {

// An identifier (condition, action, measure, model, atom) failed to resolve.
class resolution_error : public std::runtime_error {
 public:
  explicit resolution_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A guard or driver precondition was false where the caller promised it true.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Template instantiation rejected (missing/extra slots, unresolvable ids).
class instantiation_error : public std::runtime_error {
 public:
  explicit instantiation_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A (pattern, scope) combination the compiler refuses to guess a formula for.
class unsupported_pattern_error : public std::runtime_error {
 public:
  explicit unsupported_pattern_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Suite/CLI configuration problems; maps to exit status 3.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace reqcheck

#endif  // REQCHECK_ERRORS_HPP_
