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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reqcheck/cli/cli.hpp"

using reqcheck::cli::dispatch;

namespace {

struct RunResult {
  int status = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.status = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = std::string("/tmp/reqcheck_suite_") +
           std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt";
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("list prints the template, model and builtin catalogs") {
  const auto r = run({"list"});
  CHECK(r.status == 0);
  CHECK(r.out.find("STIMULUS_RESPONSE") != std::string::npos);
  CHECK(r.out.find("RESPONSE_GLOBAL") != std::string::npos);
  CHECK(r.out.find("BOUNDED_EXISTENCE_BETWEEN") != std::string::npos);
  CHECK(r.out.find("calendar") != std::string::npos);
  CHECK(r.out.find("builtin:flawed-containers") != std::string::npos);
}

TEST_CASE("the compliant calendar verifies cleanly as json") {
  const auto r = run({"verify", "--suite", "builtin:calendar",
                      "--time-boundary", "366", "--seed", "7", "--format",
                      "json"});
  CHECK(r.status == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.at("totals").at("holds").get<int>() == 2);
  CHECK(parsed.at("totals").at("violated").get<int>() == 0);
}

TEST_CASE("the flawed-container suite exits 1 with exactly six violations") {
  const auto r = run({"verify", "--suite", "builtin:flawed-containers",
                      "--seed", "7", "--format", "json"});
  CHECK(r.status == 1);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.at("totals").at("violated").get<int>() == 6);
  CHECK(parsed.at("items").size() == 17);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::vector<std::string> argv = {"verify", "--suite",
                                         "builtin:calendar", "--seed", "7",
                                         "--format", "json"};
  const auto a = run(argv);
  const auto b = run(argv);
  CHECK(a.status == b.status);
  CHECK(a.out == b.out);

  // Worker count must not bleed into the report either.
  auto parallel = argv;
  parallel.push_back("--jobs");
  parallel.push_back("4");
  const auto c = run(parallel);
  CHECK(c.out == a.out);
}

TEST_CASE("usage errors exit with status 3 and an explanation") {
  CHECK(run({"verify"}).status == 3);               // missing --suite
  CHECK(run({"frobnicate"}).status == 3);           // unknown command
  CHECK(run({"verify", "--suite", "builtin:calendar", "--no-such-flag"})
            .status == 3);
  CHECK(run({"verify", "--suite", "builtin:nonsense"}).status == 3);
  CHECK(run({"verify", "--suite", "/no/such/file.txt"}).status == 3);
  const auto r = run({"verify", "--suite", "builtin:calendar", "--format",
                      "yaml"});
  CHECK(r.status == 3);
  CHECK(r.err.find("format") != std::string::npos);
}

TEST_CASE("the filter selects items without changing verdicts") {
  const auto full = run({"verify", "--suite", "builtin:flawed-containers",
                         "--seed", "7", "--format", "json"});
  const auto subset = run({"verify", "--suite", "builtin:flawed-containers",
                           "--seed", "7", "--format", "json", "--filter",
                           "grid2d*"});
  const auto full_json = nlohmann::json::parse(full.out);
  const auto subset_json = nlohmann::json::parse(subset.out);
  REQUIRE(subset_json.at("items").size() == 2);
  for (const auto& item : subset_json.at("items")) {
    for (const auto& original : full_json.at("items")) {
      if (original.at("name") == item.at("name")) {
        CHECK(original.at("verdict") == item.at("verdict"));
      }
    }
  }
}

TEST_CASE("a declarative suite file instantiates and verifies") {
  const TempFile file(
      "# calendar requirements, declaratively\n"
      "suite demo\n"
      "requirement EQUINOX_FREQUENCY\n"
      "  template BOUNDED_EXISTENCE_BETWEEN\n"
      "  model calendar\n"
      "  bind P=equinox Q=year_beginning R=year_end k=2\n"
      "  bound 366\n"
      "requirement YEAR_END_RESPONDS_TO_YEAR_BEGINNING\n"
      "  template RESPONSE_GLOBAL\n"
      "  model calendar\n"
      "  bind P=year_beginning S=year_end\n"
      "  bound 364\n"
      "drivers stack\n");
  const auto r = run({"verify", "--suite", file.path, "--seed", "3",
                      "--format", "json"});
  CHECK(r.status == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.at("suite") == "demo");
  CHECK(parsed.at("totals").at("violated").get<int>() == 0);
  bool saw_equinox = false;
  for (const auto& item : parsed.at("items")) {
    if (item.at("name") == "EQUINOX_FREQUENCY") {
      saw_equinox = true;
      CHECK(item.at("verdict") == "holds");
    }
  }
  CHECK(saw_equinox);
}

TEST_CASE("suite file mistakes are reported with line numbers") {
  const TempFile bad_keyword("requirement X\n  templaet Y\n");
  const auto r1 = run({"verify", "--suite", bad_keyword.path});
  CHECK(r1.status == 3);
  CHECK(r1.err.find("line 2") != std::string::npos);

  const TempFile bad_bind(
      "requirement X\n  template RESPONSE_GLOBAL\n  model calendar\n"
      "  bind P\n");
  CHECK(run({"verify", "--suite", bad_bind.path}).status == 3);

  const TempFile bad_template(
      "requirement X\n  template NO_SUCH\n  model calendar\n"
      "  bind P=equinox\n");
  CHECK(run({"verify", "--suite", bad_template.path}).status == 3);
}

TEST_CASE("render prints deterministic requirement text") {
  const auto a = run({"render", "--suite", "builtin:calendar"});
  const auto b = run({"render", "--suite", "builtin:calendar"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("EQUINOX_FREQUENCY") != std::string::npos);
  CHECK(a.out.find("YEAR_END_RESPONDS_TO_YEAR_BEGINNING")
        != std::string::npos);
}

TEST_CASE("report-schema documents the stable keys") {
  const auto r = run({"report-schema"});
  CHECK(r.status == 0);
  for (const char* key :
       {"name", "template", "verdict", "witness", "rendering", "millis",
        "totals"}) {
    CAPTURE(key);
    CHECK(r.out.find(key) != std::string::npos);
  }
}
