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

#ifndef REQCHECK_ENGINE_REPORT_HPP_
#define REQCHECK_ENGINE_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "reqcheck/verdict.hpp"

namespace reqcheck::engine {

struct ReportItem {
  std::string name;
  std::string kind;  // template id, driver name, or "probe"
  std::string rendering;
  Verdict verdict;
  std::int64_t millis = 0;

  bool operator==(const ReportItem& other) const;
};

struct Totals {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t bound_exhausted = 0;
  std::size_t precondition_unmet = 0;

  bool operator==(const Totals&) const = default;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ReportItem> items;

  Totals totals() const;
  // 0 all holding, 1 any violated, 2 any bound-exhausted. Discarded
  // (precondition-unmet) items never fail a run.
  int exit_status() const;

  bool operator==(const Report& other) const;
};

enum class ReportFormat { json, markdown, plain };

ReportFormat parse_format(const std::string& name);

struct SerializeOptions {
  // Wall-clock values vary run to run; they are zeroed by default so that a
  // fixed (suite, seed) serializes byte-identically.
  bool include_timings = false;
};

// json round-trips through deserialize_report; markdown/plain are for people
// and truncate witness traces to 50 steps.
std::string serialize_report(const Report& rep, ReportFormat fmt,
                             SerializeOptions opts = {});
Report deserialize_report(const std::string& json_text);

}  // namespace reqcheck::engine

#endif  // REQCHECK_ENGINE_REPORT_HPP_
