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

#ifndef REQCHECK_FIXTURES_FIXTURES_HPP_
#define REQCHECK_FIXTURES_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "reqcheck/adt/driver.hpp"
#include "reqcheck/model.hpp"

namespace reqcheck::fixtures {

// Named system models: "stack", "turnstile", "calendar", "calendar_3eq",
// "array2_correct", "array2_wipe_on_alias", "linked_queue_alias_bug", plus
// the mutant stacks/queues. Deterministic for a fixed seed; unknown names
// throw resolution_error.
ModelRef build_fixture(const std::string& name, std::uint64_t seed = 0);
std::vector<std::string> fixture_names();
// Fixtures whose actions are frame-sound by construction (mutants excluded).
std::vector<std::string> reference_fixture_names();

// Typed helpers for tests and state preparation.
State make_stack_state(std::vector<std::int64_t> items);
std::vector<std::int64_t> stack_items(const State& s);
State make_queue_state(std::vector<std::int64_t> items);
std::vector<std::int64_t> queue_items(const State& s);

// The scripted turnstile input: true = a coin is inserted at that step,
// false = the arm is pushed (when unlocked). Same seed, same script.
std::vector<bool> turnstile_script(std::uint64_t seed, std::size_t steps);

// Day-of-year table the calendar conditions read from.
const std::vector<int>& calendar_equinox_days(bool three_equinox);

// Reference ADT bindings for the prebuilt suites.
adt::SuiteOps stack_ops();
adt::SuiteOps queue_ops();
adt::SuiteOps tree_ops();
// Bag with a remove-one-occurrence-of-the-maximum operation whose occurrence
// choice varies per call; equality "sequence" or "multiset".
adt::SuiteOps bag_ops(const std::string& equality);

// One seeded fault each; every mutant is violated by at least one driver of
// its reference suite.
std::vector<std::pair<std::string, adt::SuiteOps>> stack_mutants();
std::vector<std::pair<std::string, adt::SuiteOps>> queue_mutants();
std::vector<std::pair<std::string, adt::SuiteOps>> tree_mutants();

// Two implementations sharing one (weak) contract, for the divergence probe.
struct DivergencePair {
  ActionDef impl_a;
  ActionDef impl_b;
  std::function<bool(const State&)> contract;
  EquivalenceDef eq;
  std::function<State(Rng&)> make_input;
};

// square as x*x vs constantly zero, contract: result >= 0.
DivergencePair square_divergence();
// stable vs equal-key-reversing sort, contract: keys nondecreasing.
DivergencePair sort_divergence();

}  // namespace reqcheck::fixtures

#endif  // REQCHECK_FIXTURES_FIXTURES_HPP_
