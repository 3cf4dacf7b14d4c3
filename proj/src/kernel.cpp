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

#include "reqcheck/kernel.hpp"

namespace reqcheck {

bool eval_condition(const ConditionDef& cond, const State& s) {
  return cond.eval(s);
}

std::int64_t eval_measure(const MeasureDef& m, const State& s) {
  return m.eval(s);
}

void apply_action(const ActionDef& act, State& s, const ActionInput& in) {
  if (act.guard && !act.guard->eval(s)) {
    throw precondition_error("action '" + act.id + "': guard '" +
                             act.guard->id + "' is false");
  }
  act.apply(s, in);
}

State clone_state(const State& s) { return s; }

bool check_equivalence(const EquivalenceDef& e, const State& a,
                       const State& b) {
  if (a.model_tag() != b.model_tag()) {
    throw resolution_error("equivalence '" + e.id +
                           "': states belong to different models ('" +
                           a.model_tag() + "' vs '" + b.model_tag() + "')");
  }
  return e.eq(a, b);
}

Trace generate_trace(const SystemModel& m, const State& s0, std::size_t bound,
                     const std::vector<ConditionDef>& conds) {
  std::vector<std::string> ids;
  ids.reserve(conds.size());
  for (const auto& c : conds) ids.push_back(c.id);
  Trace trace(std::move(ids));

  State current = s0;
  auto record = [&](const State& s) {
    std::vector<bool> row;
    row.reserve(conds.size());
    for (const auto& c : conds) row.push_back(c.eval(s));
    trace.append(std::move(row));
  };

  record(current);
  for (std::size_t i = 0; i < bound; ++i) {
    m.main_step(current);
    record(current);
  }
  return trace;
}

Trace generate_trace(const SystemModel& m, const State& s0,
                     std::size_t bound) {
  std::vector<ConditionDef> conds;
  conds.reserve(m.conditions().size());
  for (const auto& [id, c] : m.conditions()) conds.push_back(c);
  return generate_trace(m, s0, bound, conds);
}

}  // namespace reqcheck
