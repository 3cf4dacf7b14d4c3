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

#ifndef REQCHECK_CHECKER_HPP_
#define REQCHECK_CHECKER_HPP_

#include "reqcheck/state.hpp"
#include "reqcheck/templates.hpp"
#include "reqcheck/trace.hpp"
#include "reqcheck/verdict.hpp"

namespace reqcheck {

// Checks a trace-pattern requirement against a recorded trace.
//   Holds           the compiled formula is true at step 0
//   BoundExhausted  false only because an Eventually/Until obligation is
//                   still pending at the trace end
//   Violated        false in every extension; carries the earliest step at
//                   which the prefix became unsalvageable
Verdict check_pattern(const TemporalRequirement& r, const Trace& t);

// Runs the stimulus/response loop driver from s0: while the response
// condition is false, apply the bound action. The timer measure evaluated on
// s0 is the iteration budget (the loop variant); the requirement's time
// boundary caps it. False stimulus on s0 reports PreconditionUnmet; budget
// exhaustion with the response still false reports Violated (variant spent)
// or BoundExhausted (time boundary cut the variant short).
Verdict verify_stimulus_response(const TemporalRequirement& r, const State& s0);

}  // namespace reqcheck

#endif  // REQCHECK_CHECKER_HPP_
