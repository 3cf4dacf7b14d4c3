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

#ifndef REQCHECK_LTL_HPP_
#define REQCHECK_LTL_HPP_

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "reqcheck/trace.hpp"

namespace reqcheck::ltl {

enum class Connective {
  truth,
  atom,
  negation,
  conjunction,
  disjunction,
  implication,
  next,
  always,
  eventually,
  until,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. Atoms name trace conditions.
class Formula {
 public:
  Formula(Connective kind, std::string atom, FormulaPtr left, FormulaPtr right)
      : kind_(kind),
        atom_(std::move(atom)),
        left_(std::move(left)),
        right_(std::move(right)) {}

  Connective kind() const { return kind_; }
  const std::string& atom_id() const { return atom_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

 private:
  Connective kind_;
  std::string atom_;
  FormulaPtr left_;
  FormulaPtr right_;
};

FormulaPtr tru();
FormulaPtr atom(std::string id);
FormulaPtr not_(FormulaPtr f);
FormulaPtr and_(FormulaPtr l, FormulaPtr r);
FormulaPtr or_(FormulaPtr l, FormulaPtr r);
FormulaPtr implies(FormulaPtr l, FormulaPtr r);
FormulaPtr next(FormulaPtr f);
FormulaPtr always(FormulaPtr f);
FormulaPtr eventually(FormulaPtr f);
FormulaPtr until(FormulaPtr l, FormulaPtr r);

// g W h, desugared to (g U h) ∨ □g.
FormulaPtr weak_until(FormulaPtr g, FormulaPtr h);

bool structurally_equal(const Formula& a, const Formula& b);
std::set<std::string> collect_atoms(const Formula& f);

// Renders with the □/◇/𝒰/◯ notation, fully parenthesized below the top level.
std::string to_string(const Formula& f);

// Finite-trace evaluation at position pos, by structural recursion:
//   atom      value at pos
//   □g        g at every j in [pos, last]
//   ◇g        g at some j in [pos, last]
//   g 𝒰 h     some j >= pos with h at j and g at every position in [pos, j)
//   ◯g        pos+1 <= last and g at pos+1
// The trace end is treated as the end of time. Throws resolution_error for
// atoms missing from the trace; requires pos < t.size().
bool ltl_eval(const Formula& f, const Trace& t, std::size_t pos);

// Dynamic-programming evaluator computing, per position, three readings of
// one formula over one trace:
//   plain       the ltl_eval semantics above
//   definitive  true and no extension of the trace could change that
//   optimistic  some extension of the trace could still satisfy it
// definitive => plain => optimistic holds pointwise. A plain-false,
// optimistic-true result at position 0 means falsity is only due to an
// Eventually/Until obligation still pending at the trace end.
class TraceEvaluator {
 public:
  TraceEvaluator(FormulaPtr f, const Trace& t);

  bool plain(std::size_t pos) const;
  bool definitive(std::size_t pos) const;
  bool optimistic(std::size_t pos) const;

  std::size_t steps() const { return len_; }

 private:
  struct Node {
    const Formula* f;
    int left = -1;
    int right = -1;
    std::size_t atom_index = 0;
  };

  int index_of(const Formula* f, std::vector<Node>& nodes, const Trace& t);

  const unsigned char* row(std::size_t kind, std::size_t node) const {
    return tables_.data() + (kind * nodes_.size() + node) * len_;
  }
  unsigned char* row(std::size_t kind, std::size_t node) {
    return tables_.data() + (kind * nodes_.size() + node) * len_;
  }

  FormulaPtr root_;
  std::size_t len_;
  std::vector<Node> nodes_;
  // Flat [kind][node][pos] table; kind: 0 plain, 1 definitive, 2 optimistic.
  std::vector<unsigned char> tables_;
};

}  // namespace reqcheck::ltl

#endif  // REQCHECK_LTL_HPP_
