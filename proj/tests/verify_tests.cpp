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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reqcheck/checker.hpp"
#include "reqcheck/fixtures/fixtures.hpp"
#include "reqcheck/kernel.hpp"

using namespace reqcheck;

namespace {

TemporalRequirement popping_empties_stack() {
  return instantiate_template(find_template("STIMULUS_RESPONSE"),
                              fixtures::build_fixture("stack"),
                              {{"stimulus", "not_is_empty"},
                               {"response", "is_empty"},
                               {"action", "pop"},
                               {"timer", "count"}},
                              "POPPING_EMPTIES_STACK");
}

// A model whose action never reaches the response: a no-op step with a
// constant timer of five.
ModelRef stalling_model() {
  auto m = std::make_shared<SystemModel>("staller");
  const auto base = fixtures::build_fixture("stack");
  m->set_init([base](std::uint64_t seed) { return base->init(seed); });
  m->set_main_step([](State&) {});
  m->add_condition({"started", [](const State&) { return true; }, ""});
  m->add_condition({"finished", [](const State&) { return false; }, ""});
  ActionDef noop;
  noop.id = "noop";
  noop.apply = [](State&, const ActionInput&) {};
  m->add_action(noop);
  m->add_measure({"five", [](const State&) { return std::int64_t{5}; }});
  return m;
}

Trace trace_of(const std::vector<std::string>& ids,
               const std::vector<std::vector<bool>>& rows) {
  Trace t(ids);
  for (auto row : rows) t.append(std::move(row));
  return t;
}

}  // namespace

TEST_CASE("a three-element stack drains in exactly three iterations") {
  const auto req = popping_empties_stack();
  const Verdict v =
      verify_stimulus_response(req, fixtures::make_stack_state({1, 2, 3}));
  CHECK(v.outcome == Outcome::holds);
  CHECK(v.iterations == 3);
}

TEST_CASE("a false stimulus reports precondition-unmet, not failure") {
  const auto req = popping_empties_stack();
  const Verdict v =
      verify_stimulus_response(req, fixtures::make_stack_state({}));
  CHECK(v.outcome == Outcome::precondition_unmet);
}

TEST_CASE("a stalling action exhausts the variant with a full witness") {
  const auto model = stalling_model();
  const auto req = instantiate_template(find_template("STIMULUS_RESPONSE"),
                                        model,
                                        {{"stimulus", "started"},
                                         {"response", "finished"},
                                         {"action", "noop"},
                                         {"timer", "five"}},
                                        "STALLING");
  const Verdict v = verify_stimulus_response(req, model->init(0));
  REQUIRE(v.outcome == Outcome::violated);
  REQUIRE(v.witness.has_value());
  // Five iterations recorded on top of the initial step.
  CHECK(v.witness->trace.size() == 6);
  CHECK(v.witness->step == 5);
}

TEST_CASE("a guard failure mid-loop is a violation at that step") {
  // Timer deliberately over-reports, so the loop output runs the stack dry
  // and then trips pop's guard.
  auto m = std::make_shared<SystemModel>("overdriver");
  const auto base = fixtures::build_fixture("stack");
  m->set_init([base](std::uint64_t seed) { return base->init(seed); });
  m->set_main_step([](State&) {});
  m->add_condition(base->condition("not_is_empty"));
  m->add_condition({"never", [](const State&) { return false; }, ""});
  m->add_action(base->action("pop"));
  m->add_measure({"padded_count", [](const State& s) {
                    return static_cast<std::int64_t>(
                               fixtures::stack_items(s).size()) +
                           3;
                  }});
  const auto req = instantiate_template(find_template("STIMULUS_RESPONSE"), m,
                                        {{"stimulus", "not_is_empty"},
                                         {"response", "never"},
                                         {"action", "pop"},
                                         {"timer", "padded_count"}},
                                        "OVERDRIVEN");
  const Verdict v =
      verify_stimulus_response(req, fixtures::make_stack_state({4, 5}));
  REQUIRE(v.outcome == Outcome::violated);
  CHECK(v.message.find("guard") != std::string::npos);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->step == 2);  // both pops succeeded, the third refused
}

TEST_CASE("the time boundary caps the variant and reports bound-exhausted") {
  const auto model = stalling_model();
  const auto req = instantiate_template(find_template("STIMULUS_RESPONSE"),
                                        model,
                                        {{"stimulus", "started"},
                                         {"response", "finished"},
                                         {"action", "noop"},
                                         {"timer", "five"}},
                                        "CAPPED", 2);
  const Verdict v = verify_stimulus_response(req, model->init(0));
  CHECK(v.outcome == Outcome::bound_exhausted);
}

TEST_CASE("property: the timer variant strictly decreases under the action") {
  const auto stack = fixtures::build_fixture("stack");
  const auto& pop = stack->action("pop");
  const auto& count = stack->measure("count");
  const auto& is_empty = stack->condition("is_empty");
  Rng rng(20260116);
  for (int round = 0; round < 100; ++round) {
    State s = stack->init(1 + rng.next() % 500);
    std::int64_t previous = eval_measure(count, s);
    while (!eval_condition(is_empty, s)) {
      apply_action(pop, s);
      const std::int64_t now = eval_measure(count, s);
      CHECK(now < previous);
      CHECK(now >= 0);
      previous = now;
    }
  }
}

TEST_CASE("property: draining holds in exactly n iterations for n in 0..60") {
  const auto req = popping_empties_stack();
  for (std::int64_t n = 0; n <= 60; ++n) {
    std::vector<std::int64_t> items(static_cast<std::size_t>(n), 7);
    const Verdict v =
        verify_stimulus_response(req, fixtures::make_stack_state(items));
    if (n == 0) {
      CHECK(v.outcome == Outcome::precondition_unmet);
    } else {
      CHECK(v.outcome == Outcome::holds);
      CHECK(v.iterations == static_cast<std::size_t>(n));
    }
  }
}

// ---------------------------------------------------------------------------
// check_pattern verdicts

TEST_CASE("response/global holds on an answered trace") {
  const auto req = instantiate_template(
      find_template("RESPONSE_GLOBAL"), fixtures::build_fixture("calendar"),
      {{"P", "year_beginning"}, {"S", "year_end"}}, "R");
  // Reuse the requirement against a hand-built trace.
  const auto t = trace_of({"year_beginning", "year_end"},
                          {{false, false},
                           {true, false},
                           {false, false},
                           {false, true}});
  const Verdict v = check_pattern(req, t);
  CHECK(v.outcome == Outcome::holds);
}

TEST_CASE("a stimulus at the final step is bound-exhausted, not violated") {
  const auto req = instantiate_template(
      find_template("RESPONSE_GLOBAL"), fixtures::build_fixture("calendar"),
      {{"P", "year_beginning"}, {"S", "year_end"}}, "R");
  const auto t = trace_of({"year_beginning", "year_end"},
                          {{false, false}, {false, false}, {true, false}});
  const Verdict v = check_pattern(req, t);
  CHECK(v.outcome == Outcome::bound_exhausted);
  REQUIRE(v.witness.has_value());
}

TEST_CASE("absence is vacuously safe and violations carry the earliest step") {
  const auto turnstile = fixtures::build_fixture("turnstile");
  const auto req =
      instantiate_template(find_template("ABSENCE_GLOBAL"), turnstile,
                           {{"P", "coins_negative"}}, "NO_DEBT");

  const auto clean = trace_of({"coins_negative"}, {{false}, {false}});
  CHECK(check_pattern(req, clean).outcome == Outcome::holds);

  const auto broken =
      trace_of({"coins_negative"}, {{false}, {false}, {true}, {true}});
  const Verdict v = check_pattern(req, broken);
  REQUIRE(v.outcome == Outcome::violated);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->step == 2);
}

TEST_CASE("check_pattern requires the trace to cover the bound conditions") {
  const auto req = instantiate_template(
      find_template("RESPONSE_GLOBAL"), fixtures::build_fixture("calendar"),
      {{"P", "year_beginning"}, {"S", "year_end"}}, "R");
  const auto t = trace_of({"year_beginning"}, {{true}});
  CHECK_THROWS_AS(check_pattern(req, t), resolution_error);
}

// ---------------------------------------------------------------------------
// instantiate_template

TEST_CASE("instantiation reports every missing slot by name") {
  try {
    instantiate_template(find_template("STIMULUS_RESPONSE"),
                         fixtures::build_fixture("stack"),
                         {{"stimulus", "not_is_empty"},
                          {"action", "pop"},
                          {"timer", "count"}},
                         "INCOMPLETE");
    FAIL("expected instantiation_error");
  } catch (const instantiation_error& e) {
    CHECK(std::string(e.what()).find("response") != std::string::npos);
  }
}

TEST_CASE("instantiation rejects extra slots and unresolvable identifiers") {
  const auto stack = fixtures::build_fixture("stack");
  CHECK_THROWS_AS(
      instantiate_template(find_template("ABSENCE_GLOBAL"), stack,
                           {{"P", "is_empty"}, {"Z", "is_empty"}}, "EXTRA"),
      instantiation_error);
  CHECK_THROWS_AS(
      instantiate_template(find_template("ABSENCE_GLOBAL"), stack,
                           {{"P", "no_such_condition"}}, "UNRESOLVED"),
      instantiation_error);
  CHECK_THROWS_AS(
      instantiate_template(find_template("ABSENCE_GLOBAL"), stack,
                           {{"P", "is_empty"}}, "BAD_BOUND", 0),
      instantiation_error);
}

TEST_CASE("templates are reusable: instantiation leaves them untouched") {
  const auto tmpl = find_template("RESPONSE_GLOBAL");
  const auto slots_before = tmpl->slots.size();
  const auto calendar = fixtures::build_fixture("calendar");
  const auto turnstile = fixtures::build_fixture("turnstile");

  const auto a = instantiate_template(
      tmpl, calendar, {{"P", "year_beginning"}, {"S", "year_end"}}, "A");
  const auto b = instantiate_template(
      tmpl, turnstile, {{"P", "coins_positive"}, {"S", "is_locked"}}, "B");

  CHECK(tmpl->slots.size() == slots_before);
  CHECK(a.bindings.at("P") == "year_beginning");
  CHECK(b.bindings.at("P") == "coins_positive");

  // Verdicts of independent instantiations do not interfere.
  const auto t = trace_of({"year_beginning", "year_end"},
                          {{true, false}, {false, true}});
  CHECK(check_pattern(a, t).outcome == Outcome::holds);
  const auto t2 = trace_of({"coins_positive", "is_locked"},
                           {{true, false}, {false, false}});
  CHECK(check_pattern(b, t2).outcome == Outcome::bound_exhausted);
  CHECK(check_pattern(a, t).outcome == Outcome::holds);
}

TEST_CASE("the default time boundary is the platform maximum") {
  const auto req = popping_empties_stack();
  CHECK(req.time_boundary == kDefaultTimeBoundary);
  CHECK(req.time_boundary == std::numeric_limits<std::int64_t>::max());
}
