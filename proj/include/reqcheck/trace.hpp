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

#ifndef REQCHECK_TRACE_HPP_
#define REQCHECK_TRACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqcheck/errors.hpp"

namespace reqcheck {

// Recorded condition valuations per step. Step 0 is the initial state. Every
// step mentions exactly the same condition set; rows are stored densely and
// addressed by condition index for evaluation speed.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<std::string> condition_ids)
      : ids_(std::move(condition_ids)) {}

  const std::vector<std::string>& condition_ids() const { return ids_; }

  std::optional<std::size_t> index_of(std::string_view cond) const {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (ids_[i] == cond) return i;
    }
    return std::nullopt;
  }

  void append(std::vector<bool> row) {
    if (row.size() != ids_.size()) {
      throw resolution_error("trace row arity mismatch");
    }
    rows_.push_back(std::move(row));
  }

  void clear_steps() { rows_.clear(); }

  // Number of recorded steps; valid positions are [0, size()).
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  bool value(std::size_t step, std::size_t cond_index) const {
    return rows_[step][cond_index];
  }

  bool value(std::size_t step, std::string_view cond) const {
    auto idx = index_of(cond);
    if (!idx) throw resolution_error(std::string("unknown condition in trace: ") +
                                     std::string(cond));
    return rows_[step][*idx];
  }

  Trace prefix(std::size_t steps) const {
    Trace t(ids_);
    for (std::size_t i = 0; i < steps && i < rows_.size(); ++i) {
      t.rows_.push_back(rows_[i]);
    }
    return t;
  }

  bool operator==(const Trace& other) const {
    return ids_ == other.ids_ && rows_ == other.rows_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<bool>> rows_;
};

}  // namespace reqcheck

#endif  // REQCHECK_TRACE_HPP_
