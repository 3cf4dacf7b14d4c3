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

#ifndef REQCHECK_TEMPLATES_HPP_
#define REQCHECK_TEMPLATES_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reqcheck/ltl.hpp"
#include "reqcheck/model.hpp"
#include "reqcheck/patterns.hpp"

namespace reqcheck {

// trace_pattern templates compile to a formula checked over a generated
// trace; the loop_driver template executes the bound action in a
// timer-bounded loop until the response condition holds.
enum class TemplateKind { trace_pattern, loop_driver };

enum class SlotKind { condition, action, measure, count };

struct SlotDecl {
  std::string name;
  SlotKind kind = SlotKind::condition;
};

// A reusable requirement shape: pattern + scope + open parameter slots and a
// natural-language skeleton with {slot} placeholders. Templates are immutable;
// instantiation never alters them.
struct TemporalTemplate {
  std::string id;
  TemplateKind kind = TemplateKind::trace_pattern;
  Pattern pattern = Pattern::response;
  Scope scope = Scope::global;
  std::vector<SlotDecl> slots;
  std::string text_skeleton;
};

using TemplateRef = std::shared_ptr<const TemporalTemplate>;

constexpr std::int64_t kDefaultTimeBoundary =
    std::numeric_limits<std::int64_t>::max();

// A closed instantiation: every slot bound to an identifier of the model.
struct TemporalRequirement {
  std::string name;
  TemplateRef tmpl;
  ModelRef model;
  std::map<std::string, std::string> bindings;  // slot -> model identifier
  int k = 2;                                    // bounded-existence episodes
  std::int64_t time_boundary = kDefaultTimeBoundary;
  ltl::FormulaPtr formula;  // compiled for trace_pattern templates

  const std::string& binding(const std::string& slot) const;
};

// The full template catalog: the loop-driver stimulus/response template plus
// one trace-pattern template per supported (pattern, scope) pair.
const std::vector<TemplateRef>& template_catalog();

// Catalog lookup by id (e.g. "RESPONSE_GLOBAL"); throws resolution_error.
TemplateRef find_template(const std::string& id);

// Binds every declared slot, validates identifiers against the model, and
// compiles the pattern formula. `bindings` may carry a numeric "k" entry for
// bounded-existence templates. Throws instantiation_error naming all missing
// or extra slots and all unresolvable identifiers.
TemporalRequirement instantiate_template(
    const TemplateRef& tmpl, const ModelRef& model,
    const std::map<std::string, std::string>& bindings, std::string name,
    std::optional<std::int64_t> bound = std::nullopt);

}  // namespace reqcheck

#endif  // REQCHECK_TEMPLATES_HPP_
