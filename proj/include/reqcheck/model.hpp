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

#ifndef REQCHECK_MODEL_HPP_
#define REQCHECK_MODEL_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reqcheck/errors.hpp"
#include "reqcheck/state.hpp"

namespace reqcheck {

// Extra inputs for an action application: literal values (push(s, 5)) and an
// optional second instance (append(q, other), copy(target, source)). For
// aliasing probes `other` may point at the mutated state itself.
struct ActionInput {
  std::vector<std::int64_t> values;
  const State* other = nullptr;
};

// Pure boolean observation over one state.
struct ConditionDef {
  std::string id;
  std::function<bool(const State&)> eval;
  std::string text;  // short phrase used by requirement rendering
};

// Pure integer observation (timer variants, counts).
struct MeasureDef {
  std::string id;
  std::function<std::int64_t(const State&)> eval;
};

// State transformer. `modifies` lists the regions of the primary state the
// action is allowed to change; everything else must serialize identically
// before and after. A present-and-false guard is a hard error, never a no-op.
struct ActionDef {
  std::string id;
  std::function<void(State&, const ActionInput&)> apply;
  std::optional<ConditionDef> guard;
  std::vector<std::string> modifies;
  // Input shape, used by generated driver inputs.
  std::size_t value_args = 0;
  bool takes_other = false;
};

struct EquivalenceDef {
  std::string id;
  std::function<bool(const State&, const State&)> eq;
};

// Strongest checkable default: canonical serializations compare equal.
inline EquivalenceDef serialization_equivalence() {
  return {"serialization", [](const State& a, const State& b) {
            return a.serialize() == b.serialize();
          }};
}

// The system-under-specification: a state factory, the autonomous step, and
// the named observations/operations requirements may bind to. Immutable once
// built (freeze()) and shared across requirement instances.
class SystemModel {
 public:
  explicit SystemModel(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  void set_init(std::function<State(std::uint64_t)> init) {
    init_ = std::move(init);
  }
  void set_main_step(std::function<void(State&)> step) {
    main_step_ = std::move(step);
  }
  void add_condition(ConditionDef c) { conditions_[c.id] = std::move(c); }
  void add_action(ActionDef a) { actions_[a.id] = std::move(a); }
  void add_measure(MeasureDef m) { measures_[m.id] = std::move(m); }
  void add_equivalence(EquivalenceDef e) { equivalences_[e.id] = std::move(e); }

  State init(std::uint64_t seed) const { return init_(seed); }
  void main_step(State& s) const { main_step_(s); }

  bool has_condition(const std::string& id) const {
    return conditions_.count(id) != 0;
  }
  bool has_action(const std::string& id) const {
    return actions_.count(id) != 0;
  }
  bool has_measure(const std::string& id) const {
    return measures_.count(id) != 0;
  }

  const ConditionDef& condition(const std::string& id) const {
    auto it = conditions_.find(id);
    if (it == conditions_.end()) {
      throw resolution_error("model '" + name_ + "': unknown condition '" +
                             id + "'");
    }
    return it->second;
  }
  const ActionDef& action(const std::string& id) const {
    auto it = actions_.find(id);
    if (it == actions_.end()) {
      throw resolution_error("model '" + name_ + "': unknown action '" + id +
                             "'");
    }
    return it->second;
  }
  const MeasureDef& measure(const std::string& id) const {
    auto it = measures_.find(id);
    if (it == measures_.end()) {
      throw resolution_error("model '" + name_ + "': unknown measure '" + id +
                             "'");
    }
    return it->second;
  }

  // Named equivalence, or the canonical-serialization default when the model
  // registered none under that name and `id` is empty.
  EquivalenceDef equivalence(const std::string& id = "") const {
    if (id.empty()) {
      if (equivalences_.empty()) return serialization_equivalence();
      return equivalences_.begin()->second;
    }
    auto it = equivalences_.find(id);
    if (it == equivalences_.end()) {
      throw resolution_error("model '" + name_ + "': unknown equivalence '" +
                             id + "'");
    }
    return it->second;
  }

  const std::map<std::string, ConditionDef>& conditions() const {
    return conditions_;
  }
  const std::map<std::string, ActionDef>& actions() const { return actions_; }
  const std::map<std::string, MeasureDef>& measures() const {
    return measures_;
  }
  const std::map<std::string, EquivalenceDef>& equivalences() const {
    return equivalences_;
  }

 private:
  std::string name_;
  std::function<State(std::uint64_t)> init_;
  std::function<void(State&)> main_step_;
  std::map<std::string, ConditionDef> conditions_;
  std::map<std::string, ActionDef> actions_;
  std::map<std::string, MeasureDef> measures_;
  std::map<std::string, EquivalenceDef> equivalences_;
};

using ModelRef = std::shared_ptr<const SystemModel>;

}  // namespace reqcheck

#endif  // REQCHECK_MODEL_HPP_
