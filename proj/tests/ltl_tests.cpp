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

#include "reqcheck/errors.hpp"
#include "reqcheck/ltl.hpp"
#include "reqcheck/rng.hpp"

#include "support/trace_tools.hpp"

using namespace reqcheck;
using namespace reqcheck::ltl;

namespace {

Trace trace_of(const std::vector<std::string>& ids,
               const std::vector<std::vector<bool>>& rows) {
  Trace t(ids);
  for (auto row : rows) t.append(std::move(row));
  return t;
}

// Random formula over the given atoms, depth-bounded.
FormulaPtr random_formula(Rng& rng, const std::vector<std::string>& atoms,
                          int depth) {
  if (depth == 0 || rng.chance(25)) {
    if (rng.chance(10)) return tru();
    return atom(atoms[rng.index(atoms.size())]);
  }
  switch (rng.index(8)) {
    case 0: return not_(random_formula(rng, atoms, depth - 1));
    case 1:
      return and_(random_formula(rng, atoms, depth - 1),
                  random_formula(rng, atoms, depth - 1));
    case 2:
      return or_(random_formula(rng, atoms, depth - 1),
                 random_formula(rng, atoms, depth - 1));
    case 3:
      return implies(random_formula(rng, atoms, depth - 1),
                     random_formula(rng, atoms, depth - 1));
    case 4: return next(random_formula(rng, atoms, depth - 1));
    case 5: return always(random_formula(rng, atoms, depth - 1));
    case 6: return eventually(random_formula(rng, atoms, depth - 1));
    default:
      return until(random_formula(rng, atoms, depth - 1),
                   random_formula(rng, atoms, depth - 1));
  }
}

}  // namespace

TEST_CASE("always(true) holds on any trace") {
  const auto f = always(tru());
  const auto t = trace_of({"P"}, {{false}, {true}, {false}});
  CHECK(ltl_eval(*f, t, 0));
  CHECK(ltl_eval(*f, t, 2));
}

TEST_CASE("eventually P is false when P never holds") {
  const auto f = eventually(atom("P"));
  const auto t = trace_of({"P"}, {{false}, {false}, {false}, {false}});
  CHECK(!ltl_eval(*f, t, 0));
}

TEST_CASE("not-P until R fails when P holds before the first R") {
  // P true at step 0, R first true at step 2.
  const auto f = until(not_(atom("P")), atom("R"));
  const auto t = trace_of({"P", "R"},
                          {{true, false}, {false, false}, {false, true}});
  CHECK(!ltl_eval(*f, t, 0));
  CHECK(ltl_eval(*f, t, 1));
}

TEST_CASE("until is strong: an unwitnessed obligation is false") {
  const auto f = until(atom("P"), atom("R"));
  const auto t = trace_of({"P", "R"}, {{true, false}, {true, false}});
  CHECK(!ltl_eval(*f, t, 0));
}

TEST_CASE("next reads the following step and fails at the trace end") {
  const auto f = next(atom("P"));
  const auto t = trace_of({"P"}, {{false}, {true}});
  CHECK(ltl_eval(*f, t, 0));
  CHECK(!ltl_eval(*f, t, 1));
}

TEST_CASE("evaluation rejects unknown atoms and out-of-range positions") {
  const auto t = trace_of({"P"}, {{true}});
  CHECK_THROWS_AS(ltl_eval(*atom("Z"), t, 0), resolution_error);
  CHECK_THROWS_AS(ltl_eval(*atom("P"), t, 1), resolution_error);
}

TEST_CASE("the printer emits the box/diamond/until notation") {
  const auto f = always(implies(atom("P"), eventually(atom("S"))));
  const std::string text = to_string(*f);
  CHECK(text.find("□") != std::string::npos);
  CHECK(text.find("◇") != std::string::npos);
  CHECK(text.find("⟹") != std::string::npos);
  const auto u = until(atom("P"), atom("R"));
  CHECK(to_string(*u).find("\U0001d4b0") != std::string::npos);
}

TEST_CASE("structural equality distinguishes atoms and shapes") {
  CHECK(structurally_equal(*atom("P"), *atom("P")));
  CHECK(!structurally_equal(*atom("P"), *atom("Q")));
  CHECK(!structurally_equal(*always(atom("P")), *eventually(atom("P"))));
  CHECK(structurally_equal(*until(atom("P"), atom("R")),
                           *until(atom("P"), atom("R"))));
}

TEST_CASE("property: the table evaluator agrees with the recursive one") {
  const std::vector<std::string> atoms = {"P", "S", "R"};
  Rng rng(20260107);
  for (int round = 0; round < 500; ++round) {
    const auto f = random_formula(rng, atoms, 4);
    const std::size_t len = 1 + rng.index(7);
    Trace t(atoms);
    for (std::size_t i = 0; i < len; ++i) {
      t.append({rng.chance(50), rng.chance(50), rng.chance(50)});
    }
    TraceEvaluator ev(f, t);
    for (std::size_t pos = 0; pos < len; ++pos) {
      CHECK(ev.plain(pos) == ltl_eval(*f, t, pos));
    }
  }
}

TEST_CASE("property: definitive implies plain implies optimistic") {
  const std::vector<std::string> atoms = {"P", "S"};
  Rng rng(20260108);
  for (int round = 0; round < 800; ++round) {
    const auto f = random_formula(rng, atoms, 4);
    const std::size_t len = 1 + rng.index(6);
    Trace t(atoms);
    for (std::size_t i = 0; i < len; ++i) {
      t.append({rng.chance(50), rng.chance(50)});
    }
    TraceEvaluator ev(f, t);
    for (std::size_t pos = 0; pos < len; ++pos) {
      if (ev.definitive(pos)) CHECK(ev.plain(pos));
      if (ev.plain(pos)) CHECK(ev.optimistic(pos));
    }
  }
}

TEST_CASE("a pending response is plain-false but optimistic-true") {
  const auto f = always(implies(atom("P"), eventually(atom("S"))));
  // P at the final step, never answered.
  const auto t = trace_of({"P", "S"},
                          {{false, false}, {false, false}, {true, false}});
  TraceEvaluator ev(f, t);
  CHECK(!ev.plain(0));
  CHECK(ev.optimistic(0));
}

TEST_CASE("a safety breach is optimistic-false: no extension can cure it") {
  const auto f = always(not_(atom("P")));
  const auto t = trace_of({"P"}, {{false}, {true}, {false}});
  TraceEvaluator ev(f, t);
  CHECK(!ev.plain(0));
  CHECK(!ev.optimistic(0));
}
