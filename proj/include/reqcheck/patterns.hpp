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

#ifndef REQCHECK_PATTERNS_HPP_
#define REQCHECK_PATTERNS_HPP_

#include <map>
#include <string>
#include <vector>

#include "reqcheck/ltl.hpp"

namespace reqcheck {

enum class Pattern {
  absence,
  existence,
  bounded_existence,
  universality,
  precedence,
  response,
  precedence_chain_21,
  precedence_chain_12,
  response_chain_21,
  response_chain_12,
};

enum class Scope {
  global,
  before_r,
  after_q,
  between_q_and_r,
  after_q_until_r,
};

// bounded_existence carries the episode bound k >= 1; other patterns ignore it.
struct PatternId {
  Pattern pattern;
  int k = 2;
};

const char* pattern_name(Pattern p);
const char* scope_name(Scope s);

// Base condition slots of the pattern itself: {P}, {P,S} or {P,S,T}.
std::vector<std::string> pattern_slots(Pattern p);
// Scope delimiter slots: {}, {R}, {Q} or {Q,R}.
std::vector<std::string> scope_slots(Scope s);
// Base + scope, in declaration order.
std::vector<std::string> required_slots(Pattern p, Scope s);

// Whether a validated formula exists for the combination. Unsupported
// combinations make pattern_to_ltl throw instead of guessing.
bool pattern_supported(Pattern p, Scope s);
std::vector<std::pair<Pattern, Scope>> supported_pairs();

// Compiles the (pattern, scope) combination over the given slot bindings
// (slot name -> trace condition id) to a finite-trace formula. Scope windows:
// an obligation window opens at every step where Q holds and closes at the
// next step where R holds, Q-step inclusive, R-step exclusive; Between-scope
// windows left unclosed impose no obligation, After-until windows do.
// Throws instantiation_error on missing slots and unsupported_pattern_error
// on combinations without a validated formula.
ltl::FormulaPtr pattern_to_ltl(const PatternId& p, Scope sc,
                               const std::map<std::string, std::string>& slots);

}  // namespace reqcheck

#endif  // REQCHECK_PATTERNS_HPP_
