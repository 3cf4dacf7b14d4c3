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

#include "reqcheck/engine/builtin.hpp"

#include <algorithm>

#include "reqcheck/adt/probes.hpp"
#include "reqcheck/adt/suites.hpp"
#include "reqcheck/fixtures/containers.hpp"
#include "reqcheck/fixtures/fixtures.hpp"

namespace reqcheck::engine {

namespace {

RequirementItem equinox_frequency(const ModelRef& calendar) {
  RequirementItem item;
  item.requirement = instantiate_template(
      find_template("BOUNDED_EXISTENCE_BETWEEN"), calendar,
      {{"P", "equinox"}, {"Q", "year_beginning"}, {"R", "year_end"},
       {"k", "2"}},
      "EQUINOX_FREQUENCY", 366);
  return item;
}

RequirementItem year_end_responds(const ModelRef& calendar) {
  RequirementItem item;
  // A 364-step trace covers exactly one year: the wrapped-around second
  // year_beginning would otherwise leave the response pending.
  item.requirement = instantiate_template(
      find_template("RESPONSE_GLOBAL"), calendar,
      {{"P", "year_beginning"}, {"S", "year_end"}},
      "YEAR_END_RESPONDS_TO_YEAR_BEGINNING", 364);
  return item;
}

void add_calendar(SuiteConfig& cfg, bool defects) {
  const ModelRef calendar =
      fixtures::build_fixture(defects ? "calendar_3eq" : "calendar");
  RequirementItem eq = equinox_frequency(calendar);
  RequirementItem yr = year_end_responds(calendar);
  if (defects) {
    eq.requirement.name += "_ON_3EQ";
    yr.requirement.name += "_ON_3EQ";
  }
  cfg.items.emplace_back(std::move(eq));
  cfg.items.emplace_back(std::move(yr));
}

void add_stimulus(SuiteConfig& cfg) {
  const ModelRef stack = fixtures::build_fixture("stack");
  RequirementItem item;
  item.requirement = instantiate_template(
      find_template("STIMULUS_RESPONSE"), stack,
      {{"stimulus", "not_is_empty"}, {"response", "is_empty"},
       {"action", "pop"}, {"timer", "count"}},
      "POPPING_EMPTIES_STACK");
  item.initial_state = [](std::uint64_t seed) {
    Rng rng(mix_seed(seed, "stimulus-stack"));
    std::vector<std::int64_t> items(1 + rng.index(8));
    for (auto& v : items) v = rng.int_in(-99, 99);
    return fixtures::make_stack_state(std::move(items));
  };
  cfg.items.emplace_back(std::move(item));
}

void add_turnstile(SuiteConfig& cfg) {
  const ModelRef turnstile = fixtures::build_fixture("turnstile");
  RequirementItem item;
  item.requirement = instantiate_template(
      find_template("ABSENCE_GLOBAL"), turnstile, {{"P", "coins_negative"}},
      "COINS_NEVER_NEGATIVE", 64);
  cfg.items.emplace_back(std::move(item));
}

void add_adt(SuiteConfig& cfg) {
  auto queue_suite = adt::build_queue_with_append_suite(fixtures::queue_ops());
  auto tree_suite =
      adt::build_tree_inord_suite(fixtures::tree_ops(), queue_suite);
  cfg.items.emplace_back(
      DriverSuiteItem{adt::build_stack_suite(fixtures::stack_ops()), false});
  cfg.items.emplace_back(DriverSuiteItem{std::move(queue_suite), false});
  cfg.items.emplace_back(DriverSuiteItem{std::move(tree_suite), false});
}

void add_mutants(SuiteConfig& cfg) {
  for (const auto& [name, ops] : fixtures::stack_mutants()) {
    auto suite = adt::build_stack_suite(ops);
    cfg.items.emplace_back(DriverSuiteItem{std::move(suite), true});
  }
  for (const auto& [name, ops] : fixtures::queue_mutants()) {
    auto suite = adt::build_queue_with_append_suite(ops);
    cfg.items.emplace_back(DriverSuiteItem{std::move(suite), true});
  }
  auto queue_suite = adt::build_queue_with_append_suite(fixtures::queue_ops());
  for (const auto& [name, ops] : fixtures::tree_mutants()) {
    auto suite = adt::build_tree_inord_suite(ops, queue_suite);
    cfg.items.emplace_back(DriverSuiteItem{std::move(suite), true});
  }
}

void add_flawed_containers(SuiteConfig& cfg) {
  for (auto& variant : fixtures::flawed_container_library(0)) {
    adt::DriverSuite suite;
    suite.ops = variant.ops;
    suite.drivers.push_back(adt::aliasing_self_copy_driver(
        suite.ops.action("copy"), suite.ops.equivalence, suite.ops));
    suite.drivers.push_back(adt::well_definedness_driver(
        suite.ops.action("copy"), suite.ops.equivalence, suite.ops));
    cfg.items.emplace_back(DriverSuiteItem{std::move(suite), true});
  }
}

}  // namespace

std::vector<std::string> builtin_suite_names() {
  return {"calendar", "calendar-defects", "stimulus", "turnstile",
          "adt",      "mutants",          "flawed-containers", "all"};
}

bool is_builtin_suite(const std::string& name) {
  const auto names = builtin_suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteConfig builtin_suite(const std::string& name) {
  SuiteConfig cfg;
  cfg.suite_name = "builtin:" + name;
  if (name == "calendar") {
    add_calendar(cfg, false);
  } else if (name == "calendar-defects") {
    add_calendar(cfg, true);
  } else if (name == "stimulus") {
    add_stimulus(cfg);
  } else if (name == "turnstile") {
    add_turnstile(cfg);
  } else if (name == "adt") {
    add_adt(cfg);
  } else if (name == "mutants") {
    add_mutants(cfg);
  } else if (name == "flawed-containers") {
    add_flawed_containers(cfg);
  } else if (name == "all") {
    add_calendar(cfg, false);
    add_calendar(cfg, true);
    add_stimulus(cfg);
    add_turnstile(cfg);
    add_adt(cfg);
    add_mutants(cfg);
    add_flawed_containers(cfg);
  } else {
    throw config_error("unknown builtin suite: " + name);
  }
  return cfg;
}

}  // namespace reqcheck::engine
