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

#include "reqcheck/fixtures/fixtures.hpp"
#include "reqcheck/kernel.hpp"
#include "reqcheck/rng.hpp"

using namespace reqcheck;

TEST_CASE("condition evaluation on stacks is definitional") {
  const auto stack = fixtures::build_fixture("stack");
  const State full = fixtures::make_stack_state({1, 2, 3});
  const State fresh = stack->init(0);
  CHECK(eval_condition(stack->condition("not_is_empty"), full));
  CHECK(eval_condition(stack->condition("is_empty"), fresh));
  CHECK(!eval_condition(stack->condition("is_empty"), full));
}

TEST_CASE("the calendar's equinox condition agrees with the day table") {
  const auto calendar = fixtures::build_fixture("calendar");
  State day = calendar->init(0);
  const auto& table = fixtures::calendar_equinox_days(false);
  for (int step = 0; step < 365; ++step) {
    const bool expected =
        std::find(table.begin(), table.end(), step) != table.end();
    CHECK(eval_condition(calendar->condition("equinox"), day) == expected);
    calendar->main_step(day);
  }
}

TEST_CASE("unknown identifiers resolve to errors") {
  const auto stack = fixtures::build_fixture("stack");
  CHECK_THROWS_AS(stack->condition("no_such"), resolution_error);
  CHECK_THROWS_AS(stack->action("no_such"), resolution_error);
  CHECK_THROWS_AS(stack->measure("no_such"), resolution_error);
  CHECK_THROWS_AS(fixtures::build_fixture("no_such_fixture"),
                  resolution_error);
}

TEST_CASE("actions transform state; guards make refusal loud") {
  const auto stack = fixtures::build_fixture("stack");
  State s = fixtures::make_stack_state({1, 2, 3});
  apply_action(stack->action("pop"), s);
  CHECK(fixtures::stack_items(s) == std::vector<std::int64_t>{1, 2});
  CHECK(eval_measure(stack->measure("count"), s) == 2);

  const auto turnstile = fixtures::build_fixture("turnstile");
  State t = turnstile->init(0);
  CHECK(eval_measure(turnstile->measure("coins"), t) == 0);
  apply_action(turnstile->action("insert_coin"), t);
  CHECK(eval_measure(turnstile->measure("coins"), t) == 1);

  State empty = stack->init(0);
  CHECK_THROWS_AS(apply_action(stack->action("pop"), empty),
                  precondition_error);
}

TEST_CASE("clones are observationally independent") {
  const auto stack = fixtures::build_fixture("stack");
  State original = fixtures::make_stack_state({1, 2});
  State copy = clone_state(original);
  const auto eq = stack->equivalence("element_equality");
  CHECK(check_equivalence(eq, original, copy));

  apply_action(stack->action("pop"), original);
  CHECK(fixtures::stack_items(copy) == std::vector<std::int64_t>{1, 2});

  State copy_of_copy = clone_state(copy);
  CHECK(check_equivalence(eq, copy, copy_of_copy));
}

TEST_CASE("property: mutating a clone never disturbs the original") {
  const auto stack = fixtures::build_fixture("stack");
  Rng rng(20260109);
  for (int round = 0; round < 200; ++round) {
    State original = stack->init(rng.next() % 1000);
    const std::string before = original.serialize();
    State clone = clone_state(original);
    const std::size_t steps = rng.index(21);
    for (std::size_t i = 0; i < steps; ++i) {
      if (rng.chance(50)) {
        ActionInput in;
        in.values.push_back(rng.int_in(-9, 9));
        apply_action(stack->action("push"), clone, in);
      } else if (!fixtures::stack_items(clone).empty()) {
        apply_action(stack->action("pop"), clone);
      }
    }
    CHECK(original.serialize() == before);
  }
}

TEST_CASE("equivalence checking is pure and rejects mismatched models") {
  const auto stack = fixtures::build_fixture("stack");
  const auto eq = stack->equivalence("element_equality");
  const State a = fixtures::make_stack_state({1, 2});
  const State b = fixtures::make_stack_state({1, 2});
  const State c = fixtures::make_stack_state({1});
  CHECK(check_equivalence(eq, a, a));
  CHECK(check_equivalence(eq, a, b));
  CHECK(!check_equivalence(eq, a, c));

  const auto turnstile = fixtures::build_fixture("turnstile");
  const State t = turnstile->init(0);
  CHECK_THROWS_AS(check_equivalence(eq, a, t), resolution_error);
}

TEST_CASE("property: registered equivalences are reflexive and symmetric") {
  Rng rng(20260110);
  const auto stack = fixtures::build_fixture("stack");
  const auto eq = stack->equivalence("element_equality");
  for (int round = 0; round < 100; ++round) {
    const State a = stack->init(rng.next() % 500);
    const State b = stack->init(rng.next() % 500);
    CHECK(check_equivalence(eq, a, a));
    CHECK(check_equivalence(eq, a, b) == check_equivalence(eq, b, a));
  }
}

TEST_CASE("trace generation records the initial step and honors the bound") {
  const auto turnstile = fixtures::build_fixture("turnstile");
  const State s0 = turnstile->init(0);

  SUBCASE("bound zero yields exactly the initial valuation") {
    const Trace t = generate_trace(*turnstile, s0, 0);
    CHECK(t.size() == 1);
  }

  SUBCASE("length never exceeds bound + 1") {
    Rng rng(20260111);
    for (int round = 0; round < 50; ++round) {
      const std::size_t bound = rng.index(40);
      const Trace t = generate_trace(*turnstile, s0, bound);
      CHECK(t.size() <= bound + 1);
      CHECK(t.size() >= 1);
    }
  }

  SUBCASE("five scripted steps match hand-stepping the script") {
    const auto script = fixtures::turnstile_script(0, 5);
    const Trace t = generate_trace(
        *turnstile, s0, 5, {turnstile->condition("coins_positive")});
    // The oracle: replay the published stepping rule by hand.
    std::int64_t coins = 0;
    std::vector<bool> expected = {coins > 0};
    for (int i = 0; i < 5; ++i) {
      if (script[static_cast<std::size_t>(i)]) {
        coins += 1;
      } else if (coins > 0) {
        coins -= 1;
      }
      expected.push_back(coins > 0);
    }
    REQUIRE(t.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(t.value(i, "coins_positive") == expected[i]);
    }
  }
}

TEST_CASE("property: trace generation is deterministic in the seed") {
  for (const auto& name : fixtures::reference_fixture_names()) {
    const auto model = fixtures::build_fixture(name);
    const Trace a = generate_trace(*model, model->init(7), 20);
    const Trace b = generate_trace(*model, model->init(7), 20);
    CHECK(a == b);
  }
}

TEST_CASE("property: evaluating conditions twice yields identical valuations") {
  Rng rng(20260112);
  for (const auto& name : fixtures::reference_fixture_names()) {
    const auto model = fixtures::build_fixture(name);
    State s = model->init(rng.next() % 100);
    for (int step = 0; step < 10; ++step) {
      for (const auto& [id, cond] : model->conditions()) {
        CHECK(eval_condition(cond, s) == eval_condition(cond, s));
      }
      model->main_step(s);
    }
  }
}

TEST_CASE("property: reference fixture actions respect their frames") {
  Rng rng(20260113);
  for (const auto& name : fixtures::reference_fixture_names()) {
    const auto model = fixtures::build_fixture(name);
    for (int round = 0; round < 40; ++round) {
      State s = model->init(rng.next() % 100);
      for (const auto& [id, action] : model->actions()) {
        if (action.takes_other) continue;
        if (action.guard && !eval_condition(*action.guard, s)) continue;
        const auto before = s.regions();
        State target = s;
        ActionInput in;
        for (std::size_t v = 0; v < action.value_args; ++v) {
          in.values.push_back(rng.int_in(-9, 9));
        }
        apply_action(action, target, in);
        for (const Region& region : before) {
          const bool may_change =
              std::find(action.modifies.begin(), action.modifies.end(),
                        region.name) != action.modifies.end();
          if (!may_change) {
            CHECK(target.region_content(region.name) == region.content);
          }
        }
      }
    }
  }
}
