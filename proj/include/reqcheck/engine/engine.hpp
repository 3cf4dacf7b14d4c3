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

#ifndef REQCHECK_ENGINE_ENGINE_HPP_
#define REQCHECK_ENGINE_ENGINE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reqcheck/adt/driver.hpp"
#include "reqcheck/engine/report.hpp"
#include "reqcheck/templates.hpp"

namespace reqcheck::engine {

struct RequirementItem {
  TemporalRequirement requirement;
  // Overrides model->init(seed) as the verification start state.
  std::function<State(std::uint64_t)> initial_state;
};

struct DriverSuiteItem {
  adt::DriverSuite suite;
  // One report item per driver by default; collapsed suites aggregate all
  // their drivers into a single item carrying the worst verdict.
  bool collapse = false;
};

using SuiteEntry = std::variant<RequirementItem, DriverSuiteItem>;

struct SuiteConfig {
  std::string suite_name = "suite";
  std::vector<SuiteEntry> items;
  std::uint64_t seed = 0;
  // Default trace bound for requirements that did not set an explicit one.
  std::optional<std::int64_t> time_boundary;
  std::size_t jobs = 1;
  std::size_t samples_per_driver = 200;
  std::size_t retry_budget = 100;
  // Hard cap on materialized traces; the platform-maximum default boundary
  // cannot be simulated literally.
  std::int64_t max_trace_steps = 10000;
  // Glob over item names (* and ?); empty selects everything.
  std::string filter;
  ReportFormat output_format = ReportFormat::plain;
};

// Executes every selected item exactly once. The per-item seed derives from
// (config seed, item name), so verdicts are independent of execution order
// and of the worker count; report items appear in declaration order.
// Resolution problems abort before any execution, listing all of them.
Report run_suite(const SuiteConfig& cfg);

// Requirement name + specified model, the template skeleton with every slot
// replaced by its bound identifier (conditions carry their phrase), suffixed
// with the time boundary. Deterministic.
std::string render_requirement(const TemporalRequirement& r);

}  // namespace reqcheck::engine

#endif  // REQCHECK_ENGINE_ENGINE_HPP_
