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

#include "reqcheck/engine/report.hpp"

#include <json.hpp>

#include "reqcheck/errors.hpp"

namespace reqcheck::engine {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kHumanTraceLimit = 50;

bool verdict_equal(const Verdict& a, const Verdict& b) {
  return a.outcome == b.outcome && a.message == b.message &&
         a.iterations == b.iterations && a.witness == b.witness;
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "holds") return Outcome::holds;
  if (s == "violated") return Outcome::violated;
  if (s == "bound_exhausted") return Outcome::bound_exhausted;
  if (s == "precondition_unmet") return Outcome::precondition_unmet;
  throw config_error("unknown verdict in report: " + s);
}

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  j["step"] = w.step;
  ordered_json bindings = ordered_json::array();
  for (const auto& [name, value] : w.bindings) {
    ordered_json b;
    b["name"] = name;
    b["value"] = value;
    bindings.push_back(std::move(b));
  }
  j["bindings"] = std::move(bindings);
  ordered_json trace;
  trace["conditions"] = w.trace.condition_ids();
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < w.trace.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < w.trace.condition_ids().size(); ++c) {
      row.push_back(w.trace.value(i, c));
    }
    steps.push_back(std::move(row));
  }
  trace["steps"] = std::move(steps);
  j["trace"] = std::move(trace);
  return j;
}

Witness witness_from_json(const ordered_json& j) {
  Witness w;
  w.step = j.at("step").get<std::size_t>();
  for (const auto& b : j.at("bindings")) {
    w.bindings.emplace_back(b.at("name").get<std::string>(),
                            b.at("value").get<std::string>());
  }
  const auto& trace = j.at("trace");
  Trace t(trace.at("conditions").get<std::vector<std::string>>());
  for (const auto& row : trace.at("steps")) {
    std::vector<bool> values;
    for (const auto& v : row) values.push_back(v.get<bool>());
    t.append(std::move(values));
  }
  w.trace = std::move(t);
  return w;
}

std::string verdict_glyph(Outcome o) {
  switch (o) {
    case Outcome::holds: return "HOLDS";
    case Outcome::violated: return "VIOLATED";
    case Outcome::bound_exhausted: return "BOUND-EXHAUSTED";
    case Outcome::precondition_unmet: return "PRECONDITION-UNMET";
  }
  return "?";
}

void append_witness_text(std::string& out, const Witness& w,
                         const std::string& indent) {
  out += indent + "witness step: " + std::to_string(w.step) + "\n";
  for (const auto& [name, value] : w.bindings) {
    out += indent + name + " = " + value + "\n";
  }
  const std::size_t steps = std::min(w.trace.size(), kHumanTraceLimit);
  if (steps > 0 && !w.trace.condition_ids().empty()) {
    std::string header = indent + "step";
    for (const auto& id : w.trace.condition_ids()) header += "  " + id;
    out += header + "\n";
    for (std::size_t i = 0; i < steps; ++i) {
      std::string row = indent + std::to_string(i);
      for (std::size_t c = 0; c < w.trace.condition_ids().size(); ++c) {
        row += w.trace.value(i, c) ? "  1" : "  0";
      }
      out += row + "\n";
    }
    if (w.trace.size() > kHumanTraceLimit) {
      out += indent + "... (" +
             std::to_string(w.trace.size() - kHumanTraceLimit) +
             " more steps in the json report)\n";
    }
  }
}

}  // namespace

bool ReportItem::operator==(const ReportItem& other) const {
  return name == other.name && kind == other.kind &&
         rendering == other.rendering && millis == other.millis &&
         verdict_equal(verdict, other.verdict);
}

Totals Report::totals() const {
  Totals t;
  for (const auto& item : items) {
    switch (item.verdict.outcome) {
      case Outcome::holds: ++t.holds; break;
      case Outcome::violated: ++t.violated; break;
      case Outcome::bound_exhausted: ++t.bound_exhausted; break;
      case Outcome::precondition_unmet: ++t.precondition_unmet; break;
    }
  }
  return t;
}

int Report::exit_status() const {
  const Totals t = totals();
  if (t.violated > 0) return 1;
  if (t.bound_exhausted > 0) return 2;
  return 0;
}

bool Report::operator==(const Report& other) const {
  return suite == other.suite && seed == other.seed && items == other.items;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "markdown") return ReportFormat::markdown;
  if (name == "plain") return ReportFormat::plain;
  throw config_error("unknown format '" + name +
                     "' (expected json, markdown or plain)");
}

std::string serialize_report(const Report& rep, ReportFormat fmt,
                             SerializeOptions opts) {
  if (fmt == ReportFormat::json) {
    ordered_json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    ordered_json items = ordered_json::array();
    for (const auto& item : rep.items) {
      ordered_json ji;
      ji["name"] = item.name;
      ji["template"] = item.kind;
      ji["verdict"] = to_string(item.verdict.outcome);
      ji["message"] = item.verdict.message;
      ji["iterations"] = item.verdict.iterations;
      ji["witness"] = item.verdict.witness
                          ? witness_to_json(*item.verdict.witness)
                          : ordered_json(nullptr);
      ji["rendering"] = item.rendering;
      ji["millis"] = opts.include_timings ? item.millis : 0;
      items.push_back(std::move(ji));
    }
    j["items"] = std::move(items);
    const Totals t = rep.totals();
    ordered_json totals;
    totals["holds"] = t.holds;
    totals["violated"] = t.violated;
    totals["bound_exhausted"] = t.bound_exhausted;
    totals["precondition_unmet"] = t.precondition_unmet;
    j["totals"] = std::move(totals);
    return j.dump(2) + "\n";
  }

  const Totals t = rep.totals();
  std::string out;
  if (fmt == ReportFormat::markdown) {
    out += "# Suite " + rep.suite + " (seed " + std::to_string(rep.seed) +
           ")\n\n";
    for (const auto& item : rep.items) {
      out += "## " + item.name + "\n\n";
      out += "- template: " + item.kind + "\n";
      out += "- verdict: " + std::string(to_string(item.verdict.outcome)) +
             "\n";
      if (!item.verdict.message.empty()) {
        out += "- detail: " + item.verdict.message + "\n";
      }
      if (!item.rendering.empty()) {
        out += "- requirement: " + item.rendering + "\n";
      }
      if (opts.include_timings) {
        out += "- millis: " + std::to_string(item.millis) + "\n";
      }
      if (item.verdict.witness) {
        out += "\n```\n";
        append_witness_text(out, *item.verdict.witness, "");
        out += "```\n";
      }
      out += "\n";
    }
    out += "## Totals\n\n";
    out += "- holds: " + std::to_string(t.holds) + "\n";
    out += "- violated: " + std::to_string(t.violated) + "\n";
    out += "- bound_exhausted: " + std::to_string(t.bound_exhausted) + "\n";
    out += "- precondition_unmet: " + std::to_string(t.precondition_unmet) +
           "\n";
    return out;
  }

  out += "suite " + rep.suite + " (seed " + std::to_string(rep.seed) + ")\n";
  for (const auto& item : rep.items) {
    out += "  [" + verdict_glyph(item.verdict.outcome) + "] " + item.name;
    if (!item.verdict.message.empty()) out += ": " + item.verdict.message;
    out += "\n";
    if (item.verdict.witness) {
      append_witness_text(out, *item.verdict.witness, "      ");
    }
  }
  out += "totals: holds " + std::to_string(t.holds) + ", violated " +
         std::to_string(t.violated) + ", bound_exhausted " +
         std::to_string(t.bound_exhausted) + ", precondition_unmet " +
         std::to_string(t.precondition_unmet) + "\n";
  return out;
}

Report deserialize_report(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw config_error(std::string("cannot parse report json: ") + e.what());
  }
  Report rep;
  rep.suite = j.at("suite").get<std::string>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& ji : j.at("items")) {
    ReportItem item;
    item.name = ji.at("name").get<std::string>();
    item.kind = ji.at("template").get<std::string>();
    item.rendering = ji.at("rendering").get<std::string>();
    item.millis = ji.at("millis").get<std::int64_t>();
    item.verdict.outcome =
        outcome_from_string(ji.at("verdict").get<std::string>());
    item.verdict.message = ji.at("message").get<std::string>();
    item.verdict.iterations = ji.at("iterations").get<std::size_t>();
    if (!ji.at("witness").is_null()) {
      item.verdict.witness = witness_from_json(ji.at("witness"));
    }
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace reqcheck::engine
