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

#include "reqcheck/adt/driver.hpp"

#include <algorithm>

namespace reqcheck::adt {

State& ParamBinding::instance(const std::string& slot) {
  auto it = instances_.find(slot);
  if (it == instances_.end()) {
    throw resolution_error("no instance bound to slot '" + slot + "'");
  }
  return it->second;
}

const State& ParamBinding::instance(const std::string& slot) const {
  auto it = instances_.find(slot);
  if (it == instances_.end()) {
    throw resolution_error("no instance bound to slot '" + slot + "'");
  }
  return it->second;
}

std::int64_t ParamBinding::value(const std::string& slot) const {
  auto it = values_.find(slot);
  if (it == values_.end()) {
    throw resolution_error("no value bound to slot '" + slot + "'");
  }
  return it->second;
}

std::vector<std::pair<std::string, std::string>> ParamBinding::describe()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [slot, state] : instances_) {
    out.emplace_back(slot, state.serialize());
  }
  for (const auto& [slot, v] : values_) {
    out.emplace_back(slot, std::to_string(v));
  }
  return out;
}

const ActionDef& SuiteOps::action(const std::string& id) const {
  auto it = actions.find(id);
  if (it == actions.end()) {
    throw resolution_error("suite '" + adt_name + "': unbound action '" + id +
                           "'");
  }
  return it->second;
}

const ConditionDef& SuiteOps::condition(const std::string& id) const {
  auto it = conditions.find(id);
  if (it == conditions.end()) {
    throw resolution_error("suite '" + adt_name + "': unbound condition '" +
                           id + "'");
  }
  return it->second;
}

const MeasureDef& SuiteOps::measure(const std::string& id) const {
  auto it = measures.find(id);
  if (it == measures.end()) {
    throw resolution_error("suite '" + adt_name + "': unbound measure '" + id +
                           "'");
  }
  return it->second;
}

State SuiteOps::call(const std::string& fn,
                     const std::vector<const State*>& args,
                     const std::vector<std::int64_t>& values) const {
  auto it = functions.find(fn);
  if (it == functions.end()) {
    throw resolution_error("suite '" + adt_name + "': unbound function '" +
                           fn + "'");
  }
  return it->second(args, values);
}

bool SuiteOps::has(const std::string& id) const {
  return actions.count(id) || conditions.count(id) || measures.count(id) ||
         functions.count(id);
}

ParamBinding InputGenerator::produce(const AxiomDriver& d, const SuiteOps& ops,
                                     Rng& rng) const {
  if (d.generate) return d.generate(rng);
  ParamBinding binding;
  for (const ParamDecl& p : d.params) {
    if (p.kind == ParamKind::instance) {
      binding.set_instance(p.slot, ops.make_instance(rng));
    } else {
      binding.set_value(p.slot, rng.int_in(ops.value_min, ops.value_max));
    }
  }
  return binding;
}

namespace {

Witness input_witness(const ParamBinding& before, const ParamBinding& after,
                      std::size_t step) {
  Witness w;
  Trace t(std::vector<std::string>{});
  t.append({});
  w.trace = std::move(t);
  w.step = step;
  for (const auto& [slot, content] : before.describe()) {
    w.bindings.emplace_back(slot + ".before", content);
  }
  for (const auto& [slot, content] : after.describe()) {
    w.bindings.emplace_back(slot + ".after", content);
  }
  return w;
}

}  // namespace

Verdict run_driver(const AxiomDriver& d, const DriverSuite& suite,
                   ParamBinding inputs) {
  for (const ParamDecl& p : d.params) {
    const bool bound = p.kind == ParamKind::instance
                           ? inputs.has_instance(p.slot)
                           : inputs.has_value(p.slot);
    if (!bound) {
      throw config_error("driver '" + d.name + "': input tuple is missing '" +
                         p.slot + "'");
    }
  }
  (void)suite;

  if (d.pre && !d.pre(inputs)) {
    return Verdict::precondition_unmet("driver '" + d.name +
                                       "': precondition false on input");
  }

  const ParamBinding initial = inputs;

  std::map<std::string, std::string> frame_snapshots;
  for (const ParamDecl& p : d.params) {
    if (p.kind != ParamKind::instance) continue;
    if (std::find(d.modifies.begin(), d.modifies.end(), p.slot) ==
        d.modifies.end()) {
      frame_snapshots[p.slot] = inputs.instance(p.slot).serialize();
    }
  }

  for (std::size_t i = 0; i < d.body.size(); ++i) {
    try {
      d.body[i].run(inputs);
    } catch (const precondition_error& e) {
      Witness w = input_witness(initial, inputs, i);
      return Verdict::violated("driver '" + d.name + "', step '" +
                                   d.body[i].label + "': " + e.what(),
                               std::move(w));
    }
    for (const auto& [slot, snapshot] : frame_snapshots) {
      if (inputs.instance(slot).serialize() != snapshot) {
        Witness w = input_witness(initial, inputs, i);
        return Verdict::violated(
            "frame: driver '" + d.name + "', step '" + d.body[i].label +
                "' modified '" + slot + "' outside its modifies clause",
            std::move(w));
      }
    }
  }

  if (d.post && !d.post(inputs)) {
    Witness w = input_witness(initial, inputs,
                              d.body.empty() ? 0 : d.body.size() - 1);
    return Verdict::violated(
        "driver '" + d.name + "': postcondition false" +
            (d.text.empty() ? "" : " (" + d.text + ")"),
        std::move(w));
  }
  return Verdict::holds();
}

namespace {

// Halve instance sizes and values while the violation persists.
Verdict shrink_violation(const AxiomDriver& d, const DriverSuite& suite,
                         ParamBinding failing, Verdict verdict) {
  if (!suite.ops.shrink_instance) return verdict;
  bool progressed = true;
  int rounds = 0;
  while (progressed && rounds++ < 64) {
    progressed = false;
    for (const ParamDecl& p : d.params) {
      if (p.kind != ParamKind::instance) continue;
      auto smaller = suite.ops.shrink_instance(failing.instance(p.slot));
      if (!smaller) continue;
      ParamBinding candidate = failing;
      candidate.set_instance(p.slot, std::move(*smaller));
      Verdict v = run_driver(d, suite, candidate);
      if (v.outcome == Outcome::violated) {
        failing = std::move(candidate);
        verdict = std::move(v);
        progressed = true;
      }
    }
  }
  return verdict;
}

}  // namespace

DriverRun run_driver_samples(const AxiomDriver& d, const DriverSuite& suite,
                             const InputGenerator& gen, std::size_t samples,
                             std::size_t retry_budget) {
  DriverRun run;
  run.stats.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = gen.substream(d.name, i);
    Verdict v = Verdict::precondition_unmet("unsampled");
    bool executed = false;
    for (std::size_t attempt = 0; attempt <= retry_budget; ++attempt) {
      ParamBinding binding = gen.produce(d, suite.ops, rng);
      v = run_driver(d, suite, binding);
      if (v.outcome != Outcome::precondition_unmet) {
        executed = true;
        if (v.outcome == Outcome::violated) {
          v = shrink_violation(d, suite, std::move(binding), std::move(v));
          v.message += " [sample " + std::to_string(i) + "]";
          run.verdict = std::move(v);
          ++run.stats.executed;
          return run;
        }
        break;
      }
      ++run.stats.resamples;
    }
    if (executed) {
      ++run.stats.executed;
    } else {
      ++run.stats.discarded;
    }
  }
  if (run.stats.executed == 0 && run.stats.discarded > 0) {
    run.verdict = Verdict::precondition_unmet(
        "driver '" + d.name + "': all " + std::to_string(samples) +
        " samples discarded by the precondition");
  } else {
    run.verdict = Verdict::holds(
        "driver '" + d.name + "': " + std::to_string(run.stats.executed) +
        " samples passed (" + std::to_string(run.stats.resamples) +
        " resamples)");
  }
  return run;
}

}  // namespace reqcheck::adt
