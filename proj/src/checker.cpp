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

#include "reqcheck/checker.hpp"

#include <algorithm>

#include "reqcheck/kernel.hpp"

namespace reqcheck {

namespace {

// Earliest prefix length at which no extension can satisfy the formula any
// more. Definitive falsity is sticky, so a linear scan finds the first step.
std::size_t earliest_violation_step(const ltl::FormulaPtr& f, const Trace& t) {
  for (std::size_t end = 1; end <= t.size(); ++end) {
    Trace p = t.prefix(end);
    ltl::TraceEvaluator ev(f, p);
    if (!ev.optimistic(0)) return end - 1;
  }
  return t.size() - 1;
}

}  // namespace

Verdict check_pattern(const TemporalRequirement& r, const Trace& t) {
  if (r.tmpl->kind != TemplateKind::trace_pattern || !r.formula) {
    throw resolution_error("requirement '" + r.name +
                           "' is not a trace-pattern requirement");
  }
  if (t.empty()) {
    throw resolution_error("requirement '" + r.name + "': empty trace");
  }
  for (const auto& [slot, id] : r.bindings) {
    if (slot == "k") continue;
    if (r.tmpl->slots.end() ==
        std::find_if(r.tmpl->slots.begin(), r.tmpl->slots.end(),
                     [&](const SlotDecl& d) {
                       return d.name == slot && d.kind == SlotKind::condition;
                     })) {
      continue;
    }
    if (!t.index_of(id)) {
      throw resolution_error("requirement '" + r.name + "': condition '" + id +
                             "' missing from trace");
    }
  }

  ltl::TraceEvaluator ev(r.formula, t);
  if (ev.plain(0)) {
    return Verdict::holds("formula satisfied over " +
                          std::to_string(t.size()) + " steps");
  }
  if (ev.optimistic(0)) {
    Witness w{t, t.size() - 1, {}};
    return Verdict::bound_exhausted(
        "obligation still pending at the trace end", std::move(w));
  }
  const std::size_t step = earliest_violation_step(r.formula, t);
  Witness w{t, step, {}};
  return Verdict::violated("violated at step " + std::to_string(step),
                           std::move(w));
}

Verdict verify_stimulus_response(const TemporalRequirement& r,
                                 const State& s0) {
  if (r.tmpl->kind != TemplateKind::loop_driver) {
    throw resolution_error("requirement '" + r.name +
                           "' is not a stimulus/response requirement");
  }
  const SystemModel& m = *r.model;
  const ConditionDef& stimulus = m.condition(r.binding("stimulus"));
  const ConditionDef& response = m.condition(r.binding("response"));
  const ActionDef& action = m.action(r.binding("action"));
  const MeasureDef& timer = m.measure(r.binding("timer"));

  State s = s0;
  if (!eval_condition(stimulus, s)) {
    return Verdict::precondition_unmet("stimulus '" + stimulus.id +
                                       "' does not hold on the initial state");
  }

  const std::int64_t variant = eval_measure(timer, s);
  if (variant < 0) {
    Trace t({stimulus.id, response.id});
    t.append({true, eval_condition(response, s)});
    return Verdict::violated("timer '" + timer.id + "' is negative (" +
                                 std::to_string(variant) + ") before any step",
                             Witness{std::move(t), 0, {}});
  }
  const bool capped = r.time_boundary < variant;
  const std::int64_t budget = capped ? r.time_boundary : variant;

  Trace trace({stimulus.id, response.id});
  auto record = [&](const State& cur) {
    trace.append(
        {eval_condition(stimulus, cur), eval_condition(response, cur)});
  };
  record(s);

  std::size_t iterations = 0;
  while (!eval_condition(response, s)) {
    if (static_cast<std::int64_t>(iterations) >= budget) {
      const std::size_t at = trace.size() - 1;
      if (capped) {
        return Verdict::bound_exhausted(
            "time boundary " + std::to_string(r.time_boundary) +
                " reached before the response",
            Witness{std::move(trace), at, {}});
      }
      return Verdict::violated(
          "variant " + std::to_string(variant) +
              " exhausted with response '" + response.id + "' still false",
          Witness{std::move(trace), at, {}});
    }
    try {
      apply_action(action, s);
    } catch (const precondition_error& e) {
      const std::size_t at = trace.size() - 1;
      return Verdict::violated(std::string("action failed mid-loop: ") +
                                   e.what(),
                               Witness{std::move(trace), at, {}});
    }
    ++iterations;
    record(s);
    const std::int64_t now = eval_measure(timer, s);
    if (now < 0) {
      const std::size_t at = trace.size() - 1;
      return Verdict::violated("timer '" + timer.id + "' went below zero",
                               Witness{std::move(trace), at, {}});
    }
  }
  return Verdict::holds("response observed after " +
                            std::to_string(iterations) + " iterations",
                        iterations);
}

}  // namespace reqcheck
