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

#include "reqcheck/cli/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "reqcheck/adt/probes.hpp"
#include "reqcheck/adt/suites.hpp"
#include "reqcheck/engine/builtin.hpp"
#include "reqcheck/fixtures/containers.hpp"
#include "reqcheck/fixtures/fixtures.hpp"

namespace reqcheck::cli {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

struct RequirementEntry {
  std::string name;
  std::string template_id;
  std::string model_id;
  std::map<std::string, std::string> bindings;
  std::optional<std::int64_t> bound;
};

void push_requirement(engine::SuiteConfig& cfg, const RequirementEntry& e) {
  if (e.template_id.empty() || e.model_id.empty()) {
    throw config_error("requirement '" + e.name +
                       "' needs both a template and a model line");
  }
  engine::RequirementItem item;
  item.requirement =
      instantiate_template(find_template(e.template_id),
                           fixtures::build_fixture(e.model_id), e.bindings,
                           e.name, e.bound);
  cfg.items.emplace_back(std::move(item));
}

void push_drivers(engine::SuiteConfig& cfg, const std::string& id) {
  if (id == "stack") {
    cfg.items.emplace_back(engine::DriverSuiteItem{
        adt::build_stack_suite(fixtures::stack_ops()), false});
  } else if (id == "queue") {
    cfg.items.emplace_back(engine::DriverSuiteItem{
        adt::build_queue_with_append_suite(fixtures::queue_ops()), false});
  } else if (id == "tree") {
    auto queue_suite =
        adt::build_queue_with_append_suite(fixtures::queue_ops());
    cfg.items.emplace_back(engine::DriverSuiteItem{
        adt::build_tree_inord_suite(fixtures::tree_ops(), queue_suite),
        false});
  } else if (id == "mutants" || id == "flawed-containers") {
    auto sub = engine::builtin_suite(id);
    for (auto& item : sub.items) cfg.items.push_back(std::move(item));
  } else {
    throw config_error("unknown driver suite '" + id +
                       "' (expected stack, queue, tree, mutants or "
                       "flawed-containers)");
  }
}

void print_catalog(std::ostream& out) {
  out << "Templates:\n";
  for (const auto& tmpl : template_catalog()) {
    out << "  " << tmpl->id << " (";
    bool first = true;
    for (const auto& slot : tmpl->slots) {
      if (!first) out << ", ";
      out << slot.name;
      first = false;
    }
    out << ")\n";
  }
  out << "\nModels:\n";
  for (const auto& name : fixtures::fixture_names()) {
    out << "  " << name << "\n";
  }
  out << "\nBuiltin suites:\n";
  for (const auto& name : engine::builtin_suite_names()) {
    out << "  builtin:" << name << "\n";
  }
}

void print_schema(std::ostream& out) {
  out << R"schema({
  "suite": "string",
  "seed": "unsigned integer",
  "items": [
    {
      "name": "string",
      "template": "string",
      "verdict": "holds | violated | bound_exhausted | precondition_unmet",
      "message": "string",
      "iterations": "unsigned integer (loop-driver iteration count)",
      "witness": {
        "step": "unsigned integer",
        "bindings": [{"name": "string", "value": "string"}],
        "trace": {"conditions": ["string"], "steps": [["boolean"]]}
      },
      "rendering": "string",
      "millis": "integer (0 unless timings were requested)"
    }
  ],
  "totals": {
    "holds": "count",
    "violated": "count",
    "bound_exhausted": "count",
    "precondition_unmet": "count"
  }
}
)schema";
}

}  // namespace

engine::SuiteConfig parse_suite_text(const std::string& text,
                                     const std::string& suite_name) {
  engine::SuiteConfig cfg;
  cfg.suite_name = suite_name;

  std::optional<RequirementEntry> current;
  auto flush = [&] {
    if (current) {
      push_requirement(cfg, *current);
      current.reset();
    }
  };

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0];

    auto expect_arg = [&](std::size_t n) {
      if (tokens.size() < n + 1) {
        throw config_error("suite file line " + std::to_string(line_no) +
                           ": '" + keyword + "' needs an argument");
      }
    };

    if (keyword == "suite") {
      expect_arg(1);
      cfg.suite_name = tokens[1];
    } else if (keyword == "requirement") {
      expect_arg(1);
      flush();
      current = RequirementEntry{};
      current->name = tokens[1];
    } else if (keyword == "drivers") {
      expect_arg(1);
      flush();
      push_drivers(cfg, tokens[1]);
    } else if (keyword == "template" || keyword == "model" ||
               keyword == "bind" || keyword == "bound") {
      if (!current) {
        throw config_error("suite file line " + std::to_string(line_no) +
                           ": '" + keyword +
                           "' outside of a requirement entry");
      }
      expect_arg(1);
      if (keyword == "template") {
        current->template_id = tokens[1];
      } else if (keyword == "model") {
        current->model_id = tokens[1];
      } else if (keyword == "bound") {
        try {
          current->bound = std::stoll(tokens[1]);
        } catch (const std::exception&) {
          throw config_error("suite file line " + std::to_string(line_no) +
                             ": bound is not a number: " + tokens[1]);
        }
      } else {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          const auto eq = tokens[i].find('=');
          if (eq == std::string::npos || eq == 0 ||
              eq + 1 == tokens[i].size()) {
            throw config_error("suite file line " + std::to_string(line_no) +
                               ": bind entries look like SLOT=ID, got '" +
                               tokens[i] + "'");
          }
          current->bindings[tokens[i].substr(0, eq)] =
              tokens[i].substr(eq + 1);
        }
      }
    } else {
      throw config_error("suite file line " + std::to_string(line_no) +
                         ": unknown keyword '" + keyword + "'");
    }
  }
  flush();
  return cfg;
}

engine::SuiteConfig resolve_suite(const std::string& spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    return engine::builtin_suite(spec.substr(prefix.size()));
  }
  std::ifstream file(spec);
  if (!file) throw config_error("cannot open suite file: " + spec);
  std::ostringstream text;
  text << file.rdbuf();
  return parse_suite_text(text.str(), spec);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"requirement templates checked by bounded execution",
               "reqcheck"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand(
      "list", "print the template, model and builtin-suite catalogs");

  std::string suite_spec;
  std::int64_t time_boundary = 0;
  std::uint64_t seed = 0;
  std::string format = "plain";
  std::string filter;
  std::size_t jobs = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--suite", suite_spec,
                    "builtin:<name> or a suite file path")
        ->required();
    cmd->add_option("--time-boundary", time_boundary,
                    "default trace bound for requirements without one");
    cmd->add_option("--seed", seed, "seed for all sampled inputs");
    cmd->add_option("--filter", filter, "glob over item names (* and ?)");
    cmd->add_option("--jobs", jobs, "worker count for independent items");
  };

  auto* verify_cmd =
      app.add_subcommand("verify", "run a suite and emit its report");
  add_common(verify_cmd);
  verify_cmd->add_option("--format", format, "json, markdown or plain");

  auto* render_cmd = app.add_subcommand(
      "render", "print the natural-language requirement texts");
  add_common(render_cmd);

  auto* schema_cmd =
      app.add_subcommand("report-schema", "print the json report schema");

  try {
    std::vector<std::string> argv_reversed(args.rbegin(), args.rend());
    app.parse(argv_reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 3;
  }

  try {
    if (list_cmd->parsed()) {
      print_catalog(out);
      return 0;
    }
    if (schema_cmd->parsed()) {
      print_schema(out);
      return 0;
    }

    engine::SuiteConfig cfg = resolve_suite(suite_spec);
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.filter = filter;
    cfg.output_format = engine::parse_format(format);
    if (verify_cmd->count("--time-boundary") ||
        render_cmd->count("--time-boundary")) {
      if (time_boundary < 1) {
        throw config_error("time boundary must be >= 1");
      }
      cfg.time_boundary = time_boundary;
    }

    if (render_cmd->parsed()) {
      for (const auto& entry : cfg.items) {
        if (const auto* req = std::get_if<engine::RequirementItem>(&entry)) {
          out << engine::render_requirement(req->requirement) << "\n";
        }
      }
      return 0;
    }

    const engine::Report report = engine::run_suite(cfg);
    out << engine::serialize_report(report, cfg.output_format);
    return report.exit_status();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace reqcheck::cli
