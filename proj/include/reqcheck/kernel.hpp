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

#ifndef REQCHECK_KERNEL_HPP_
#define REQCHECK_KERNEL_HPP_

#include <cstdint>
#include <vector>

#include "reqcheck/model.hpp"
#include "reqcheck/state.hpp"
#include "reqcheck/trace.hpp"

namespace reqcheck {

// Pure predicate evaluation; the state is observationally unchanged.
bool eval_condition(const ConditionDef& cond, const State& s);

std::int64_t eval_measure(const MeasureDef& m, const State& s);

// Applies the action in place. Throws precondition_error when a guard is
// present and false — a refused application is never a silent no-op.
void apply_action(const ActionDef& act, State& s, const ActionInput& in = {});

// Observationally independent copy.
State clone_state(const State& s);

// Throws resolution_error when the states belong to different models.
bool check_equivalence(const EquivalenceDef& e, const State& a, const State& b);

// Records the valuation of `conds` on s0 (step 0) and after each of `bound`
// applications of the model's main step. Result has at most bound + 1 steps.
Trace generate_trace(const SystemModel& m, const State& s0, std::size_t bound,
                     const std::vector<ConditionDef>& conds);

// Convenience: trace over every condition the model registers.
Trace generate_trace(const SystemModel& m, const State& s0, std::size_t bound);

}  // namespace reqcheck

#endif  // REQCHECK_KERNEL_HPP_
