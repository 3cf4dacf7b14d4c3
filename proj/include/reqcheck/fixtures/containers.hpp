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

#ifndef REQCHECK_FIXTURES_CONTAINERS_HPP_
#define REQCHECK_FIXTURES_CONTAINERS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "reqcheck/adt/driver.hpp"

namespace reqcheck::fixtures {

// One container kind with a `copy` operation (target, source) plus the
// equality and generators the aliasing/well-definedness probes need.
struct ContainerVariant {
  std::string name;
  bool seeded_fault = false;
  adt::SuiteOps ops;
};

// Seventeen copy-operation variants; exactly six carry a seeded fault —
// four aliasing bugs (self-copy corrupts the object) and two contract
// well-definedness bugs (behavior depends on state the declared equality
// cannot see). The clean eleven withstand both probes by construction.
std::vector<ContainerVariant> flawed_container_library(std::uint64_t seed);

}  // namespace reqcheck::fixtures

#endif  // REQCHECK_FIXTURES_CONTAINERS_HPP_
