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

#ifndef REQCHECK_VERDICT_HPP_
#define REQCHECK_VERDICT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reqcheck/trace.hpp"

namespace reqcheck {

enum class Outcome { holds, violated, bound_exhausted, precondition_unmet };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::violated: return "violated";
    case Outcome::bound_exhausted: return "bound_exhausted";
    case Outcome::precondition_unmet: return "precondition_unmet";
  }
  return "unknown";
}

// Evidence attached to a non-holding verdict: the observed trace with the
// decisive step, plus named serialized inputs for driver-style checks.
struct Witness {
  Trace trace;
  std::size_t step = 0;
  std::vector<std::pair<std::string, std::string>> bindings;

  bool operator==(const Witness& other) const {
    return trace == other.trace && step == other.step &&
           bindings == other.bindings;
  }
};

struct Verdict {
  Outcome outcome = Outcome::holds;
  std::string message;
  std::optional<Witness> witness;
  std::size_t iterations = 0;  // loop-driver iteration count

  static Verdict holds(std::string msg = "", std::size_t iters = 0) {
    return {Outcome::holds, std::move(msg), std::nullopt, iters};
  }
  static Verdict violated(std::string msg, Witness w) {
    return {Outcome::violated, std::move(msg), std::move(w), 0};
  }
  static Verdict bound_exhausted(std::string msg, Witness w) {
    return {Outcome::bound_exhausted, std::move(msg), std::move(w), 0};
  }
  static Verdict precondition_unmet(std::string msg) {
    return {Outcome::precondition_unmet, std::move(msg), std::nullopt, 0};
  }

  bool ok() const { return outcome == Outcome::holds; }
};

}  // namespace reqcheck

#endif  // REQCHECK_VERDICT_HPP_
