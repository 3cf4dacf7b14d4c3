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

#ifndef REQCHECK_ADT_DRIVER_HPP_
#define REQCHECK_ADT_DRIVER_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reqcheck/model.hpp"
#include "reqcheck/rng.hpp"
#include "reqcheck/state.hpp"
#include "reqcheck/verdict.hpp"

namespace reqcheck::adt {

enum class ParamKind { instance, value };

struct ParamDecl {
  std::string slot;
  ParamKind kind = ParamKind::instance;
};

// One driver invocation's bound parameters.
class ParamBinding {
 public:
  void set_instance(const std::string& slot, State s) {
    instances_[slot] = std::move(s);
  }
  void set_value(const std::string& slot, std::int64_t v) {
    values_[slot] = v;
  }

  State& instance(const std::string& slot);
  const State& instance(const std::string& slot) const;
  std::int64_t value(const std::string& slot) const;
  bool has_instance(const std::string& slot) const {
    return instances_.count(slot) != 0;
  }
  bool has_value(const std::string& slot) const {
    return values_.count(slot) != 0;
  }

  // Slot -> serialized content, for witness reporting.
  std::vector<std::pair<std::string, std::string>> describe() const;

 private:
  std::map<std::string, State> instances_;
  std::map<std::string, std::int64_t> values_;
};

struct DriverStep {
  std::string label;
  std::function<void(ParamBinding&)> run;
};

// A contracted procedure over bound parameters: pre, an ordered body of
// action applications, a frame (the param slots the body may change), post.
struct AxiomDriver {
  std::string name;
  std::string text;  // the axiom in words, carried into reports
  std::vector<ParamDecl> params;
  std::function<bool(const ParamBinding&)> pre;  // null means true
  std::vector<DriverStep> body;
  std::vector<std::string> modifies;
  std::function<bool(const ParamBinding&)> post;
  // Input strategy; null falls back to per-slot generation.
  std::function<ParamBinding(Rng&)> generate;
};

// Concrete operations an abstract driver suite is bound to.
struct SuiteOps {
  std::string adt_name;
  std::map<std::string, ActionDef> actions;
  std::map<std::string, ConditionDef> conditions;
  std::map<std::string, MeasureDef> measures;
  std::map<std::string,
           std::function<State(const std::vector<const State*>&,
                               const std::vector<std::int64_t>&)>>
      functions;
  EquivalenceDef equivalence;
  std::function<State(Rng&)> make_instance;
  // Produces two instances equal under `equivalence` but not necessarily
  // identical (hidden fields may differ). Null falls back to clone pairs.
  std::function<std::pair<State, State>(Rng&)> make_equal_pair;
  // Returns a strictly smaller equivalent-kind instance, or nullopt.
  std::function<std::optional<State>(const State&)> shrink_instance;
  std::int64_t value_min = -16;
  std::int64_t value_max = 16;

  const ActionDef& action(const std::string& id) const;
  const ConditionDef& condition(const std::string& id) const;
  const MeasureDef& measure(const std::string& id) const;
  State call(const std::string& fn, const std::vector<const State*>& args,
             const std::vector<std::int64_t>& values = {}) const;
  bool has(const std::string& id) const;
};

struct DriverSuite {
  SuiteOps ops;
  std::vector<AxiomDriver> drivers;

  std::size_t operation_count() const {
    return ops.actions.size() + ops.conditions.size() + ops.measures.size() +
           ops.functions.size();
  }
};

// Deterministic sampled inputs: same seed, same tuples.
struct SizeBounds {
  std::size_t max_container = 8;
};

class InputGenerator {
 public:
  explicit InputGenerator(std::uint64_t seed, SizeBounds bounds = {})
      : seed_(seed), bounds_(bounds) {}

  std::uint64_t seed() const { return seed_; }
  const SizeBounds& bounds() const { return bounds_; }

  Rng substream(std::string_view label, std::uint64_t n = 0) const {
    return Rng(mix_seed(seed_, label, n));
  }

  // Bound tuple for one sample; uses the driver's strategy when present.
  ParamBinding produce(const AxiomDriver& d, const SuiteOps& ops,
                       Rng& rng) const;

 private:
  std::uint64_t seed_;
  SizeBounds bounds_;
};

// Runs one driver on given inputs.
//   pre false      -> PreconditionUnmet (a discarded input, not a failure)
//   frame breach   -> Violated tagged "frame", at the offending body step
//   post false     -> Violated with the serialized inputs as witness
Verdict run_driver(const AxiomDriver& d, const DriverSuite& suite,
                   ParamBinding inputs);

struct DriverStats {
  std::size_t samples = 0;
  std::size_t executed = 0;
  std::size_t discarded = 0;  // precondition-unmet inputs
  std::size_t resamples = 0;
};

struct DriverRun {
  Verdict verdict;
  DriverStats stats;
};

// Samples the driver `samples` times. Inputs failing the precondition are
// resampled up to `retry_budget` times each and reported in the stats, never
// in pass/fail. The first violation is shrunk (halving instance sizes and
// values while the verdict persists) and returned.
DriverRun run_driver_samples(const AxiomDriver& d, const DriverSuite& suite,
                             const InputGenerator& gen, std::size_t samples,
                             std::size_t retry_budget = 100);

}  // namespace reqcheck::adt

#endif  // REQCHECK_ADT_DRIVER_HPP_
