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

#include "reqcheck/templates.hpp"

#include <algorithm>

#include "reqcheck/errors.hpp"

namespace reqcheck {

const std::string& TemporalRequirement::binding(const std::string& slot) const {
  auto it = bindings.find(slot);
  if (it == bindings.end()) {
    throw resolution_error("requirement '" + name + "': unbound slot '" +
                           slot + "'");
  }
  return it->second;
}

namespace {

std::string pattern_skeleton(Pattern p) {
  switch (p) {
    case Pattern::absence: return "{P} never holds";
    case Pattern::existence: return "{P} eventually holds";
    case Pattern::bounded_existence:
      return "{P} occurs not more than {k} times";
    case Pattern::universality: return "{P} always holds";
    case Pattern::precedence: return "{P} is always preceded by {S}";
    case Pattern::response: return "{P} is always followed by {S}";
    case Pattern::precedence_chain_21:
      return "{P} is always preceded by {S} and then {T}";
    case Pattern::precedence_chain_12:
      return "{S} followed by {T} is always preceded by {P}";
    case Pattern::response_chain_21:
      return "{S} followed by {T} is always answered by {P}";
    case Pattern::response_chain_12:
      return "{P} is always followed by {S} and then {T}";
  }
  return "?";
}

std::string scope_suffix(Scope s) {
  switch (s) {
    case Scope::global: return "";
    case Scope::before_r: return " before {R}";
    case Scope::after_q: return " after {Q}";
    case Scope::between_q_and_r: return " between {Q} and {R}";
    case Scope::after_q_until_r: return " after {Q} until {R}";
  }
  return "";
}

TemplateRef make_pattern_template(Pattern p, Scope s) {
  auto tmpl = std::make_shared<TemporalTemplate>();
  tmpl->id = std::string(pattern_name(p)) + "_" + scope_name(s);
  tmpl->kind = TemplateKind::trace_pattern;
  tmpl->pattern = p;
  tmpl->scope = s;
  for (const auto& slot : required_slots(p, s)) {
    tmpl->slots.push_back({slot, SlotKind::condition});
  }
  if (p == Pattern::bounded_existence) {
    tmpl->slots.push_back({"k", SlotKind::count});
  }
  tmpl->text_skeleton = pattern_skeleton(p) + scope_suffix(s);
  return tmpl;
}

TemplateRef make_stimulus_response_template() {
  auto tmpl = std::make_shared<TemporalTemplate>();
  tmpl->id = "STIMULUS_RESPONSE";
  tmpl->kind = TemplateKind::loop_driver;
  tmpl->pattern = Pattern::response;
  tmpl->scope = Scope::global;
  tmpl->slots = {{"stimulus", SlotKind::condition},
                 {"response", SlotKind::condition},
                 {"action", SlotKind::action},
                 {"timer", SlotKind::measure}};
  tmpl->text_skeleton =
      "once {stimulus}, repeatedly applying {action} reaches {response} "
      "within {timer} steps";
  return tmpl;
}

}  // namespace

const std::vector<TemplateRef>& template_catalog() {
  static const std::vector<TemplateRef> catalog = [] {
    std::vector<TemplateRef> out;
    out.push_back(make_stimulus_response_template());
    for (const auto& [p, s] : supported_pairs()) {
      out.push_back(make_pattern_template(p, s));
    }
    return out;
  }();
  return catalog;
}

TemplateRef find_template(const std::string& id) {
  for (const auto& tmpl : template_catalog()) {
    if (tmpl->id == id) return tmpl;
  }
  throw resolution_error("unknown template: " + id);
}

TemporalRequirement instantiate_template(
    const TemplateRef& tmpl, const ModelRef& model,
    const std::map<std::string, std::string>& bindings, std::string name,
    std::optional<std::int64_t> bound) {
  if (!tmpl) throw instantiation_error("null template");
  if (!model) throw instantiation_error("null model");

  std::vector<std::string> problems;

  auto declared = [&](const std::string& slot) {
    return std::any_of(tmpl->slots.begin(), tmpl->slots.end(),
                       [&](const SlotDecl& d) { return d.name == slot; });
  };

  TemporalRequirement req;
  req.name = std::move(name);
  req.tmpl = tmpl;
  req.model = model;

  for (const SlotDecl& slot : tmpl->slots) {
    auto it = bindings.find(slot.name);
    if (it == bindings.end()) {
      problems.push_back("missing slot '" + slot.name + "'");
      continue;
    }
    const std::string& id = it->second;
    switch (slot.kind) {
      case SlotKind::condition:
        if (!model->has_condition(id)) {
          problems.push_back("slot '" + slot.name + "': no condition '" + id +
                             "' in model '" + model->name() + "'");
        }
        break;
      case SlotKind::action:
        if (!model->has_action(id)) {
          problems.push_back("slot '" + slot.name + "': no action '" + id +
                             "' in model '" + model->name() + "'");
        }
        break;
      case SlotKind::measure:
        if (!model->has_measure(id)) {
          problems.push_back("slot '" + slot.name + "': no measure '" + id +
                             "' in model '" + model->name() + "'");
        }
        break;
      case SlotKind::count: {
        try {
          req.k = static_cast<int>(std::stoll(id));
        } catch (const std::exception&) {
          problems.push_back("slot '" + slot.name +
                             "': not a positive count: '" + id + "'");
          break;
        }
        if (req.k < 1) {
          problems.push_back("slot '" + slot.name + "': k must be >= 1, got " +
                             id);
        }
        break;
      }
    }
    req.bindings[slot.name] = id;
  }

  for (const auto& [slot, id] : bindings) {
    if (!declared(slot)) problems.push_back("extra slot '" + slot + "'");
  }

  if (bound) {
    if (*bound < 1) {
      problems.push_back("time boundary must be >= 1");
    } else {
      req.time_boundary = *bound;
    }
  }

  if (!problems.empty()) {
    std::string msg = "cannot instantiate '" + tmpl->id + "': ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i > 0) msg += "; ";
      msg += problems[i];
    }
    throw instantiation_error(msg);
  }

  if (tmpl->kind == TemplateKind::trace_pattern) {
    std::map<std::string, std::string> condition_slots;
    for (const SlotDecl& slot : tmpl->slots) {
      if (slot.kind == SlotKind::condition) {
        condition_slots[slot.name] = req.bindings.at(slot.name);
      }
    }
    req.formula = pattern_to_ltl({tmpl->pattern, req.k}, tmpl->scope,
                                 condition_slots);
  }
  return req;
}

}  // namespace reqcheck
