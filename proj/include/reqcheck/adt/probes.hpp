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

#ifndef REQCHECK_ADT_PROBES_HPP_
#define REQCHECK_ADT_PROBES_HPP_

#include <functional>

#include "reqcheck/adt/driver.hpp"

namespace reqcheck::adt {

// Well-definedness of an operation's contract: two instances equal under `eq`
// stay equal after identical calls. Inputs come from ops.make_equal_pair when
// present (equal-but-not-identical pairs expose hidden-state dependence),
// clone pairs otherwise.
AxiomDriver well_definedness_driver(const ActionDef& op,
                                    const EquivalenceDef& eq,
                                    const SuiteOps& ops);

// Searches for an input where two implementations both satisfy the claimed
// postcondition yet produce results that differ under `eq` — the contract is
// too weak to pin the behavior down. Holds-at-budget when no witness appears
// within `budget` samples.
Verdict contract_divergence_probe(const ActionDef& impl_a,
                                  const ActionDef& impl_b,
                                  const std::function<bool(const State&)>& contract,
                                  const InputGenerator& gen,
                                  const std::function<State(Rng&)>& make_input,
                                  const EquivalenceDef& eq,
                                  std::size_t budget = 100);

// copy(x, x) must leave x equivalent to its prior snapshot. The copy action
// receives the mutated state itself as its source, a genuine alias.
AxiomDriver aliasing_self_copy_driver(const ActionDef& copy_op,
                                      const EquivalenceDef& eq,
                                      const SuiteOps& ops);

// Applies `op` to inputs.instance(target_slot) and verifies that (a) every
// other tracked slot serializes identically before and after, and (b) the
// target's regions outside op.modifies are untouched.
Verdict frame_check(const ActionDef& op,
                    const std::vector<std::string>& tracked,
                    ParamBinding inputs,
                    const std::string& target_slot = "target");

}  // namespace reqcheck::adt

#endif  // REQCHECK_ADT_PROBES_HPP_
