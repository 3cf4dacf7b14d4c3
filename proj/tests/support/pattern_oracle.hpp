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

// Direct trace-window semantics for every supported (pattern, scope) pair,
// written against plain boolean columns and independent of the formula
// machinery under test. An obligation window opens at every step where Q
// holds and closes at the next step where R holds (Q inclusive, R exclusive).
// Between-scope windows left unclosed impose nothing; After-until windows
// run to the trace end. All temporal readings are the strong finite ones:
// an "eventually" needs an in-trace witness.

#ifndef REQCHECK_TESTS_PATTERN_ORACLE_HPP_
#define REQCHECK_TESTS_PATTERN_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "reqcheck/patterns.hpp"

namespace oracle {

struct Columns {
  std::vector<char> p, s, t, q, r;
  std::size_t size() const { return p.size(); }
};

struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
};

inline std::optional<std::size_t> first_true(const std::vector<char>& col,
                                             std::size_t from,
                                             std::size_t end) {
  for (std::size_t i = from; i < end; ++i) {
    if (col[i]) return i;
  }
  return std::nullopt;
}

// Maximal runs of consecutive P-true steps inside [begin, end).
inline std::size_t count_episodes(const std::vector<char>& p,
                                  const Window& w) {
  std::size_t episodes = 0;
  bool inside = false;
  for (std::size_t i = w.begin; i < w.end; ++i) {
    if (p[i] && !inside) ++episodes;
    inside = p[i] != 0;
  }
  return episodes;
}

inline std::vector<Window> scope_windows(reqcheck::Scope scope,
                                         const Columns& c) {
  const std::size_t n = c.size();
  std::vector<Window> windows;
  switch (scope) {
    case reqcheck::Scope::global:
      windows.push_back({0, n});
      break;
    case reqcheck::Scope::before_r: {
      if (auto r = first_true(c.r, 0, n)) windows.push_back({0, *r});
      break;
    }
    case reqcheck::Scope::after_q: {
      if (auto q = first_true(c.q, 0, n)) windows.push_back({*q, n});
      break;
    }
    case reqcheck::Scope::between_q_and_r: {
      for (std::size_t i = 0; i < n; ++i) {
        if (!c.q[i] || c.r[i]) continue;
        if (auto r = first_true(c.r, i, n)) windows.push_back({i, *r});
      }
      break;
    }
    case reqcheck::Scope::after_q_until_r: {
      for (std::size_t i = 0; i < n; ++i) {
        if (!c.q[i] || c.r[i]) continue;
        auto r = first_true(c.r, i, n);
        windows.push_back({i, r ? *r : n});
      }
      break;
    }
  }
  return windows;
}

inline bool absence_in(const Columns& c, const Window& w) {
  for (std::size_t i = w.begin; i < w.end; ++i) {
    if (c.p[i]) return false;
  }
  return true;
}

inline bool universality_in(const Columns& c, const Window& w) {
  for (std::size_t i = w.begin; i < w.end; ++i) {
    if (!c.p[i]) return false;
  }
  return true;
}

inline bool existence_in(const Columns& c, const Window& w) {
  return first_true(c.p, w.begin, w.end).has_value();
}

// First P in the window must have an S at or before it, inside the window.
inline bool precedence_in(const Columns& c, const Window& w) {
  auto p = first_true(c.p, w.begin, w.end);
  if (!p) return true;
  for (std::size_t j = w.begin; j <= *p; ++j) {
    if (c.s[j]) return true;
  }
  return false;
}

// Every P in the window must see an S at or after it, inside the window.
inline bool response_in(const Columns& c, const Window& w) {
  for (std::size_t i = w.begin; i < w.end; ++i) {
    if (!c.p[i]) continue;
    if (!first_true(c.s, i, w.end)) return false;
  }
  return true;
}

// Chains: S at j strictly before T at m.
inline bool chain_exists(const Columns& c, const Window& w) {
  for (std::size_t j = w.begin; j + 1 < w.end; ++j) {
    if (!c.s[j]) continue;
    if (first_true(c.t, j + 1, w.end)) return true;
  }
  return false;
}

// If any P occurs, some S..T chain must complete before the first P
// (T may coincide with that first P).
inline bool precedence_chain_21_in(const Columns& c, const Window& w) {
  auto f = first_true(c.p, w.begin, w.end);
  if (!f) return true;
  for (std::size_t j = w.begin; j < *f; ++j) {
    if (!c.s[j]) continue;
    for (std::size_t m = j + 1; m <= *f; ++m) {
      if (c.t[m]) return true;
    }
  }
  return false;
}

// If some S..T chain occurs, a P must occur with no S anywhere before it.
inline bool precedence_chain_12_in(const Columns& c, const Window& w) {
  if (!chain_exists(c, w)) return true;
  for (std::size_t i = w.begin; i < w.end; ++i) {
    if (c.p[i]) return true;
    if (c.s[i]) return false;
  }
  return false;
}

// Every S..T chain start is answered: some later T carries an eventual P.
inline bool response_chain_21_in(const Columns& c, const Window& w) {
  for (std::size_t j = w.begin; j < w.end; ++j) {
    if (!c.s[j]) continue;
    if (!first_true(c.t, j + 1, w.end)) continue;
    bool answered = false;
    for (std::size_t m = j + 1; m < w.end && !answered; ++m) {
      if (!c.t[m]) continue;
      if (first_true(c.p, m, w.end)) answered = true;
    }
    if (!answered) return false;
  }
  return true;
}

// Every P is followed by a complete S..T chain.
inline bool response_chain_12_in(const Columns& c, const Window& w) {
  for (std::size_t i = w.begin; i < w.end; ++i) {
    if (!c.p[i]) continue;
    bool answered = false;
    for (std::size_t j = i; j + 1 < w.end && !answered; ++j) {
      if (c.s[j] && first_true(c.t, j + 1, w.end)) answered = true;
    }
    if (!answered) return false;
  }
  return true;
}

inline bool pattern_oracle(reqcheck::Pattern pattern, int k,
                           reqcheck::Scope scope, const Columns& c) {
  for (const Window& w : scope_windows(scope, c)) {
    bool ok = true;
    switch (pattern) {
      case reqcheck::Pattern::absence: ok = absence_in(c, w); break;
      case reqcheck::Pattern::existence: ok = existence_in(c, w); break;
      case reqcheck::Pattern::bounded_existence:
        ok = count_episodes(c.p, w) <= static_cast<std::size_t>(k);
        break;
      case reqcheck::Pattern::universality: ok = universality_in(c, w); break;
      case reqcheck::Pattern::precedence: ok = precedence_in(c, w); break;
      case reqcheck::Pattern::response: ok = response_in(c, w); break;
      case reqcheck::Pattern::precedence_chain_21:
        ok = precedence_chain_21_in(c, w);
        break;
      case reqcheck::Pattern::precedence_chain_12:
        ok = precedence_chain_12_in(c, w);
        break;
      case reqcheck::Pattern::response_chain_21:
        ok = response_chain_21_in(c, w);
        break;
      case reqcheck::Pattern::response_chain_12:
        ok = response_chain_12_in(c, w);
        break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // REQCHECK_TESTS_PATTERN_ORACLE_HPP_
