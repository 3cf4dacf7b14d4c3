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

#ifndef REQCHECK_ADT_SUITES_HPP_
#define REQCHECK_ADT_SUITES_HPP_

#include "reqcheck/adt/driver.hpp"

namespace reqcheck::adt {

// Stack axioms over a binding that supplies: function `new`, actions `push`
// (one value) and `pop` (guarded), condition `is_empty`, measures `count` and
// `top`. Core axioms plus well-definedness and frame drivers per mutator.
DriverSuite build_stack_suite(const SuiteOps& binding);

// Queue-with-append axioms: `new`, `enqueue`, `dequeue`, `push_front`,
// `append` (binary), `front`, `count`, `is_empty`. FIFO order plus append
// identity/associativity/length axioms, well-definedness and frames.
DriverSuite build_queue_with_append_suite(const SuiteOps& binding);

// Binary tree with in-order traversal: `leaf`, `node`, `left`, `right`,
// `item`, `is_leaf`, `in_ord`. The in_ord results are certified by the given
// queue suite, whose binding supplies the queue-side operations the in-order
// equations are stated with. Throws config_error when the queue suite is
// missing or lacks them.
DriverSuite build_tree_inord_suite(const SuiteOps& binding,
                                   const DriverSuite& queue_suite);

}  // namespace reqcheck::adt

#endif  // REQCHECK_ADT_SUITES_HPP_
