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

#include "reqcheck/engine/engine.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "reqcheck/checker.hpp"
#include "reqcheck/kernel.hpp"

namespace reqcheck::engine {

namespace {

bool glob_match(std::string_view pattern, std::string_view text) {
  if (pattern.empty()) return text.empty();
  if (pattern[0] == '*') {
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (glob_match(pattern.substr(1), text.substr(i))) return true;
    }
    return false;
  }
  if (text.empty()) return false;
  if (pattern[0] != '?' && pattern[0] != text[0]) return false;
  return glob_match(pattern.substr(1), text.substr(1));
}

struct Runnable {
  std::string name;
  std::string kind;
  std::string rendering;
  std::function<Verdict(std::uint64_t)> run;
};

Verdict run_requirement(const RequirementItem& item, const SuiteConfig& cfg,
                        std::uint64_t item_seed) {
  const TemporalRequirement& r = item.requirement;
  State s0 = item.initial_state ? item.initial_state(item_seed)
                                : r.model->init(item_seed);
  if (r.tmpl->kind == TemplateKind::loop_driver) {
    return verify_stimulus_response(r, s0);
  }
  std::int64_t bound = r.time_boundary;
  if (bound == kDefaultTimeBoundary && cfg.time_boundary) {
    bound = *cfg.time_boundary;
  }
  bound = std::min(bound, cfg.max_trace_steps);
  const Trace trace =
      generate_trace(*r.model, s0, static_cast<std::size_t>(bound));
  return check_pattern(r, trace);
}

Verdict worse(Verdict a, Verdict b) {
  auto rank = [](Outcome o) {
    switch (o) {
      case Outcome::violated: return 3;
      case Outcome::bound_exhausted: return 2;
      case Outcome::precondition_unmet: return 1;
      case Outcome::holds: return 0;
    }
    return 0;
  };
  return rank(b.outcome) > rank(a.outcome) ? b : a;
}

}  // namespace

std::string render_requirement(const TemporalRequirement& r) {
  std::string text = r.tmpl->text_skeleton;
  for (const SlotDecl& slot : r.tmpl->slots) {
    const std::string placeholder = "{" + slot.name + "}";
    std::string replacement = r.bindings.at(slot.name);
    if (slot.kind == SlotKind::condition) {
      const ConditionDef& cond = r.model->condition(replacement);
      if (!cond.text.empty()) replacement += " (" + cond.text + ")";
    }
    std::size_t at = 0;
    while ((at = text.find(placeholder, at)) != std::string::npos) {
      text.replace(at, placeholder.size(), replacement);
      at += replacement.size();
    }
  }
  const std::string bound_text =
      r.time_boundary == kDefaultTimeBoundary
          ? "platform maximum"
          : std::to_string(r.time_boundary);
  std::string rendered = r.name + " [" + r.model->name() + "]: " + text +
                         " (time boundary: " + bound_text + " steps)";
  if (r.formula) rendered += " | " + ltl::to_string(*r.formula);
  return rendered;
}

Report run_suite(const SuiteConfig& cfg) {
  std::vector<Runnable> runnables;
  std::vector<std::string> problems;

  for (const SuiteEntry& entry : cfg.items) {
    try {
      if (const auto* req = std::get_if<RequirementItem>(&entry)) {
        Runnable r;
        r.name = req->requirement.name;
        r.kind = req->requirement.tmpl->id;
        r.rendering = render_requirement(req->requirement);
        const RequirementItem item = *req;
        r.run = [item, &cfg](std::uint64_t item_seed) {
          return run_requirement(item, cfg, item_seed);
        };
        runnables.push_back(std::move(r));
        continue;
      }
      const auto& suite_item = std::get<DriverSuiteItem>(entry);
      if (suite_item.suite.drivers.empty()) {
        problems.push_back("driver suite '" + suite_item.suite.ops.adt_name +
                           "' has no drivers");
        continue;
      }
      if (suite_item.collapse) {
        Runnable r;
        r.name = suite_item.suite.ops.adt_name;
        r.kind = "probe";
        const adt::DriverSuite suite = suite_item.suite;
        const std::size_t samples = cfg.samples_per_driver;
        const std::size_t retries = cfg.retry_budget;
        r.run = [suite, samples, retries](std::uint64_t item_seed) {
          Verdict aggregate = Verdict::holds();
          bool any = false;
          for (const auto& driver : suite.drivers) {
            adt::InputGenerator gen(mix_seed(item_seed, driver.name));
            auto run = adt::run_driver_samples(driver, suite, gen, samples,
                                               retries);
            aggregate = any ? worse(aggregate, run.verdict) : run.verdict;
            any = true;
          }
          return aggregate;
        };
        runnables.push_back(std::move(r));
      } else {
        for (const auto& driver : suite_item.suite.drivers) {
          Runnable r;
          r.name = suite_item.suite.ops.adt_name + "." + driver.name;
          r.kind = driver.name;
          r.rendering = driver.text;
          const adt::DriverSuite suite = suite_item.suite;
          const adt::AxiomDriver drv = driver;
          const std::size_t samples = cfg.samples_per_driver;
          const std::size_t retries = cfg.retry_budget;
          r.run = [suite, drv, samples, retries](std::uint64_t item_seed) {
            adt::InputGenerator gen(item_seed);
            return adt::run_driver_samples(drv, suite, gen, samples, retries)
                .verdict;
          };
          runnables.push_back(std::move(r));
        }
      }
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
  }

  if (!problems.empty()) {
    std::string msg = "suite resolution failed: ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i > 0) msg += "; ";
      msg += problems[i];
    }
    throw config_error(msg);
  }

  if (!cfg.filter.empty()) {
    std::vector<Runnable> selected;
    for (auto& r : runnables) {
      if (glob_match(cfg.filter, r.name)) selected.push_back(std::move(r));
    }
    runnables = std::move(selected);
  }

  Report report;
  report.suite = cfg.suite_name;
  report.seed = cfg.seed;
  report.items.resize(runnables.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= runnables.size()) return;
      const Runnable& r = runnables[i];
      ReportItem item;
      item.name = r.name;
      item.kind = r.kind;
      item.rendering = r.rendering;
      const auto t0 = std::chrono::steady_clock::now();
      item.verdict = r.run(mix_seed(cfg.seed, r.name));
      const auto t1 = std::chrono::steady_clock::now();
      item.millis =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
              .count();
      report.items[i] = std::move(item);
    }
  };

  const std::size_t jobs =
      std::max<std::size_t>(1, std::min(cfg.jobs, runnables.size() + 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace reqcheck::engine
