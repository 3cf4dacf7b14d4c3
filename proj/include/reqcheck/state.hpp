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

#ifndef REQCHECK_STATE_HPP_
#define REQCHECK_STATE_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reqcheck/errors.hpp"

namespace reqcheck {

// One named region of a state's canonical serialization. Frame checking
// compares regions by name; the full serialized form is the ordered join.
struct Region {
  std::string name;
  std::string content;
};

// Fixture-defined concrete state. regions() must be order-stable: the same
// state always serializes to the same region list.
class StateData {
 public:
  virtual ~StateData() = default;
  virtual std::unique_ptr<StateData> clone() const = 0;
  virtual std::vector<Region> regions() const = 0;
};

// Value handle over a StateData. Copying clones the underlying data, so two
// State values never share mutable structure.
class State {
 public:
  State() = default;
  State(std::string model_tag, std::unique_ptr<StateData> data)
      : model_tag_(std::move(model_tag)), data_(std::move(data)) {}

  State(const State& other)
      : model_tag_(other.model_tag_),
        data_(other.data_ ? other.data_->clone() : nullptr) {}
  State& operator=(const State& other) {
    if (this != &other) {
      model_tag_ = other.model_tag_;
      data_ = other.data_ ? other.data_->clone() : nullptr;
    }
    return *this;
  }
  State(State&&) noexcept = default;
  State& operator=(State&&) noexcept = default;

  bool empty() const { return data_ == nullptr; }
  const std::string& model_tag() const { return model_tag_; }

  template <typename T>
  T& as() {
    auto* p = dynamic_cast<T*>(data_.get());
    if (p == nullptr) throw resolution_error("state type mismatch");
    return *p;
  }

  template <typename T>
  const T& as() const {
    const auto* p = dynamic_cast<const T*>(data_.get());
    if (p == nullptr) throw resolution_error("state type mismatch");
    return *p;
  }

  std::vector<Region> regions() const {
    return data_ ? data_->regions() : std::vector<Region>{};
  }

  // Canonical order-stable textual form; identical content <=> identical text.
  std::string serialize() const {
    std::string out;
    for (const Region& r : regions()) {
      out += r.name;
      out += '=';
      out += r.content;
      out += ';';
    }
    return out;
  }

  std::string region_content(const std::string& name) const {
    for (const Region& r : regions()) {
      if (r.name == name) return r.content;
    }
    throw resolution_error("unknown state region: " + name);
  }

 private:
  std::string model_tag_;
  std::unique_ptr<StateData> data_;
};

}  // namespace reqcheck

#endif  // REQCHECK_STATE_HPP_
