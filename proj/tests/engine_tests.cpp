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

#include <json.hpp>

#include "reqcheck/adt/probes.hpp"
#include "reqcheck/adt/suites.hpp"
#include "reqcheck/engine/builtin.hpp"
#include "reqcheck/engine/engine.hpp"
#include "reqcheck/fixtures/containers.hpp"
#include "reqcheck/fixtures/fixtures.hpp"

using namespace reqcheck;
using namespace reqcheck::engine;

namespace {

SuiteConfig three_compliant_requirements() {
  SuiteConfig cfg = builtin_suite("calendar");
  SuiteConfig turnstile = builtin_suite("turnstile");
  for (auto& item : turnstile.items) cfg.items.push_back(std::move(item));
  cfg.suite_name = "three";
  return cfg;
}

DriverSuiteItem wipe_on_alias_item() {
  for (auto& variant : fixtures::flawed_container_library(0)) {
    if (variant.name != "grid2d_alias_wipe") continue;
    adt::DriverSuite suite;
    suite.ops = variant.ops;
    suite.drivers.push_back(adt::aliasing_self_copy_driver(
        suite.ops.action("copy"), suite.ops.equivalence, suite.ops));
    suite.drivers.push_back(adt::well_definedness_driver(
        suite.ops.action("copy"), suite.ops.equivalence, suite.ops));
    return DriverSuiteItem{std::move(suite), true};
  }
  throw std::runtime_error("variant not found");
}

}  // namespace

TEST_CASE("a suite of three compliant requirements holds completely") {
  SuiteConfig cfg = three_compliant_requirements();
  cfg.seed = 7;
  const Report rep = run_suite(cfg);
  const Totals t = rep.totals();
  CHECK(rep.items.size() == 3);
  CHECK(t.holds == 3);
  CHECK(t.violated == 0);
  CHECK(rep.exit_status() == 0);
}

TEST_CASE("a suite containing the wipe-on-alias fixture has one violation") {
  SuiteConfig cfg = three_compliant_requirements();
  cfg.items.emplace_back(wipe_on_alias_item());
  cfg.seed = 7;
  const Report rep = run_suite(cfg);
  const Totals t = rep.totals();
  CHECK(rep.items.size() == 4);
  CHECK(t.violated == 1);
  CHECK(t.holds == 3);
  const auto& violated = rep.items.back();
  CHECK(violated.verdict.outcome == Outcome::violated);
  CHECK(violated.verdict.witness.has_value());
  CHECK(rep.exit_status() == 1);
}

TEST_CASE("an empty suite reports success") {
  SuiteConfig cfg;
  cfg.suite_name = "empty";
  const Report rep = run_suite(cfg);
  CHECK(rep.items.empty());
  CHECK(rep.exit_status() == 0);
  const Totals t = rep.totals();
  CHECK(t.holds + t.violated + t.bound_exhausted + t.precondition_unmet == 0);
}

TEST_CASE("totals always equal the per-item verdict multiset") {
  SuiteConfig cfg = builtin_suite("all");
  cfg.seed = 3;
  const Report rep = run_suite(cfg);
  Totals counted;
  for (const auto& item : rep.items) {
    switch (item.verdict.outcome) {
      case Outcome::holds: ++counted.holds; break;
      case Outcome::violated: ++counted.violated; break;
      case Outcome::bound_exhausted: ++counted.bound_exhausted; break;
      case Outcome::precondition_unmet: ++counted.precondition_unmet; break;
    }
  }
  CHECK(counted == rep.totals());
  CHECK(counted.holds + counted.violated + counted.bound_exhausted +
            counted.precondition_unmet ==
        rep.items.size());
}

TEST_CASE("rendering joins the name, model, slot texts and boundary") {
  SuiteConfig cfg = builtin_suite("calendar");
  const auto& year_end = std::get<RequirementItem>(cfg.items[1]).requirement;
  const std::string text = render_requirement(year_end);
  CHECK(text.find("YEAR_END_RESPONDS_TO_YEAR_BEGINNING") != std::string::npos);
  CHECK(text.find("[calendar]") != std::string::npos);
  CHECK(text.find("year_beginning") != std::string::npos);
  CHECK(text.find("year_end") != std::string::npos);
  CHECK(text.find("364") != std::string::npos);

  const auto& equinox = std::get<RequirementItem>(cfg.items[0]).requirement;
  const std::string etext = render_requirement(equinox);
  CHECK(etext.find("not more than") != std::string::npos);
  CHECK(etext.find("2") != std::string::npos);
  CHECK(etext.find("equinox") != std::string::npos);

  CHECK(render_requirement(year_end) == render_requirement(year_end));
}

TEST_CASE("json reports carry a totals object and round-trip losslessly") {
  SuiteConfig cfg = three_compliant_requirements();
  cfg.items.emplace_back(wipe_on_alias_item());
  cfg.seed = 5;
  const Report rep = run_suite(cfg);

  const std::string json_text =
      serialize_report(rep, ReportFormat::json, {.include_timings = true});
  const auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed.contains("totals"));
  CHECK(parsed.at("totals").at("holds").get<std::size_t>() == 3);

  const Report back = deserialize_report(json_text);
  CHECK(back == rep);
}

TEST_CASE("human formats truncate long witness traces; json keeps them") {
  SuiteConfig cfg = builtin_suite("calendar-defects");
  cfg.seed = 7;
  const Report rep = run_suite(cfg);
  REQUIRE(rep.items[0].verdict.outcome == Outcome::violated);
  REQUIRE(rep.items[0].verdict.witness.has_value());
  REQUIRE(rep.items[0].verdict.witness->trace.size() > 50);

  const std::string md = serialize_report(rep, ReportFormat::markdown);
  CHECK(md.find("more steps in the json report") != std::string::npos);

  const std::string json_text = serialize_report(rep, ReportFormat::json);
  const Report back = deserialize_report(json_text);
  CHECK(back.items[0].verdict.witness->trace.size() ==
        rep.items[0].verdict.witness->trace.size());
}

TEST_CASE("markdown reports devote one section to each item") {
  SuiteConfig cfg = three_compliant_requirements();
  cfg.seed = 5;
  const Report rep = run_suite(cfg);
  const std::string md = serialize_report(rep, ReportFormat::markdown);
  std::size_t sections = 0;
  for (std::size_t at = 0; (at = md.find("\n## ", at)) != std::string::npos;
       ++at) {
    ++sections;
  }
  CHECK(sections == rep.items.size() + 1);  // one per item plus totals
}

TEST_CASE("fixed seeds serialize byte-identically; timings are zeroed") {
  SuiteConfig cfg = builtin_suite("flawed-containers");
  cfg.seed = 7;
  const std::string a = serialize_report(run_suite(cfg), ReportFormat::json);
  const std::string b = serialize_report(run_suite(cfg), ReportFormat::json);
  CHECK(a == b);
  CHECK(a.find("\"millis\": 0") != std::string::npos);
}

TEST_CASE("verdicts under parallel execution match the sequential run") {
  SuiteConfig cfg = builtin_suite("all");
  cfg.seed = 13;
  cfg.samples_per_driver = 60;
  SuiteConfig parallel = cfg;
  parallel.jobs = 4;
  const Report sequential_rep = run_suite(cfg);
  const Report parallel_rep = run_suite(parallel);
  REQUIRE(sequential_rep.items.size() == parallel_rep.items.size());
  for (std::size_t i = 0; i < sequential_rep.items.size(); ++i) {
    CHECK(sequential_rep.items[i].name == parallel_rep.items[i].name);
    CHECK(sequential_rep.items[i].verdict.outcome ==
          parallel_rep.items[i].verdict.outcome);
  }
}

TEST_CASE("a filter selects items without changing their verdicts") {
  SuiteConfig cfg = builtin_suite("adt");
  cfg.seed = 9;
  cfg.samples_per_driver = 60;
  const Report full = run_suite(cfg);

  SuiteConfig filtered = cfg;
  filtered.filter = "stack.*";
  const Report subset = run_suite(filtered);
  REQUIRE(!subset.items.empty());
  CHECK(subset.items.size() < full.items.size());
  for (const auto& item : subset.items) {
    CHECK(item.name.rfind("stack.", 0) == 0);
    bool found = false;
    for (const auto& original : full.items) {
      if (original.name == item.name) {
        CHECK(original.verdict.outcome == item.verdict.outcome);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("a pending response maps to exit status 2") {
  // A 365-step calendar trace re-arms year_beginning at the wrap and leaves
  // the response pending at the bound.
  SuiteConfig cfg;
  cfg.suite_name = "pending";
  RequirementItem item;
  item.requirement = instantiate_template(
      find_template("RESPONSE_GLOBAL"), fixtures::build_fixture("calendar"),
      {{"P", "year_beginning"}, {"S", "year_end"}}, "PENDING_RESPONSE", 365);
  cfg.items.emplace_back(std::move(item));
  const Report rep = run_suite(cfg);
  REQUIRE(rep.items.size() == 1);
  CHECK(rep.items[0].verdict.outcome == Outcome::bound_exhausted);
  CHECK(rep.exit_status() == 2);
}

TEST_CASE("the global boundary applies only to requirements without one") {
  SuiteConfig cfg;
  cfg.suite_name = "override";
  RequirementItem unbounded;
  unbounded.requirement = instantiate_template(
      find_template("RESPONSE_GLOBAL"), fixtures::build_fixture("calendar"),
      {{"P", "year_beginning"}, {"S", "year_end"}}, "UNBOUNDED");
  RequirementItem pinned;
  pinned.requirement = instantiate_template(
      find_template("RESPONSE_GLOBAL"), fixtures::build_fixture("calendar"),
      {{"P", "year_beginning"}, {"S", "year_end"}}, "PINNED", 364);
  cfg.items.emplace_back(std::move(unbounded));
  cfg.items.emplace_back(std::move(pinned));
  cfg.time_boundary = 365;  // would leave the response pending

  const Report rep = run_suite(cfg);
  CHECK(rep.items[0].verdict.outcome == Outcome::bound_exhausted);
  CHECK(rep.items[1].verdict.outcome == Outcome::holds);
}

TEST_CASE("resolution failures abort before any execution") {
  SuiteConfig cfg;
  cfg.items.emplace_back(DriverSuiteItem{adt::DriverSuite{}, false});
  CHECK_THROWS_AS(run_suite(cfg), config_error);
}
