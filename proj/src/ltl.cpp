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

#include "reqcheck/ltl.hpp"

#include <unordered_map>

namespace reqcheck::ltl {

namespace {

FormulaPtr make(Connective k, std::string a, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(k, std::move(a), std::move(l),
                                   std::move(r));
}

}  // namespace

FormulaPtr tru() { return make(Connective::truth, "", nullptr, nullptr); }
FormulaPtr atom(std::string id) {
  return make(Connective::atom, std::move(id), nullptr, nullptr);
}
FormulaPtr not_(FormulaPtr f) {
  return make(Connective::negation, "", std::move(f), nullptr);
}
FormulaPtr and_(FormulaPtr l, FormulaPtr r) {
  return make(Connective::conjunction, "", std::move(l), std::move(r));
}
FormulaPtr or_(FormulaPtr l, FormulaPtr r) {
  return make(Connective::disjunction, "", std::move(l), std::move(r));
}
FormulaPtr implies(FormulaPtr l, FormulaPtr r) {
  return make(Connective::implication, "", std::move(l), std::move(r));
}
FormulaPtr next(FormulaPtr f) {
  return make(Connective::next, "", std::move(f), nullptr);
}
FormulaPtr always(FormulaPtr f) {
  return make(Connective::always, "", std::move(f), nullptr);
}
FormulaPtr eventually(FormulaPtr f) {
  return make(Connective::eventually, "", std::move(f), nullptr);
}
FormulaPtr until(FormulaPtr l, FormulaPtr r) {
  return make(Connective::until, "", std::move(l), std::move(r));
}
FormulaPtr weak_until(FormulaPtr g, FormulaPtr h) {
  return or_(until(g, std::move(h)), always(g));
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Connective::atom) return a.atom_id() == b.atom_id();
  const bool left_ok =
      (a.left() == nullptr) == (b.left() == nullptr) &&
      (a.left() == nullptr || structurally_equal(*a.left(), *b.left()));
  const bool right_ok =
      (a.right() == nullptr) == (b.right() == nullptr) &&
      (a.right() == nullptr || structurally_equal(*a.right(), *b.right()));
  return left_ok && right_ok;
}

namespace {

void collect(const Formula& f, std::set<std::string>& into) {
  if (f.kind() == Connective::atom) into.insert(f.atom_id());
  if (f.left()) collect(*f.left(), into);
  if (f.right()) collect(*f.right(), into);
}

std::string wrap(const Formula& f) {
  const bool bare =
      f.kind() == Connective::atom || f.kind() == Connective::truth;
  return bare ? to_string(f) : "(" + to_string(f) + ")";
}

}  // namespace

std::set<std::string> collect_atoms(const Formula& f) {
  std::set<std::string> atoms;
  collect(f, atoms);
  return atoms;
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Connective::truth: return "true";
    case Connective::atom: return f.atom_id();
    case Connective::negation: return "¬" + wrap(*f.left());
    case Connective::conjunction:
      return wrap(*f.left()) + " ∧ " + wrap(*f.right());
    case Connective::disjunction:
      return wrap(*f.left()) + " ∨ " + wrap(*f.right());
    case Connective::implication:
      return wrap(*f.left()) + " ⟹ " + wrap(*f.right());
    case Connective::next: return "◯" + wrap(*f.left());
    case Connective::always: return "□" + wrap(*f.left());
    case Connective::eventually: return "◇" + wrap(*f.left());
    case Connective::until:
      return wrap(*f.left()) + " \U0001d4b0 " + wrap(*f.right());
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ltl_eval: plain recursive semantics with memoization on node identity.

namespace {

class RecursiveEval {
 public:
  RecursiveEval(const Trace& t) : trace_(t) {}

  bool eval(const Formula& f, std::size_t pos) {
    auto& slots = memo_[&f];
    if (slots.empty()) slots.assign(trace_.size(), -1);
    if (slots[pos] >= 0) return slots[pos] != 0;
    const bool v = compute(f, pos);
    slots[pos] = v ? 1 : 0;
    return v;
  }

 private:
  bool compute(const Formula& f, std::size_t pos) {
    const std::size_t last = trace_.size() - 1;
    switch (f.kind()) {
      case Connective::truth:
        return true;
      case Connective::atom: {
        auto idx = trace_.index_of(f.atom_id());
        if (!idx) {
          throw resolution_error("formula atom '" + f.atom_id() +
                                 "' not present in trace");
        }
        return trace_.value(pos, *idx);
      }
      case Connective::negation:
        return !eval(*f.left(), pos);
      case Connective::conjunction:
        return eval(*f.left(), pos) && eval(*f.right(), pos);
      case Connective::disjunction:
        return eval(*f.left(), pos) || eval(*f.right(), pos);
      case Connective::implication:
        return !eval(*f.left(), pos) || eval(*f.right(), pos);
      case Connective::next:
        return pos < last && eval(*f.left(), pos + 1);
      case Connective::always: {
        for (std::size_t j = pos; j <= last; ++j) {
          if (!eval(*f.left(), j)) return false;
        }
        return true;
      }
      case Connective::eventually: {
        for (std::size_t j = pos; j <= last; ++j) {
          if (eval(*f.left(), j)) return true;
        }
        return false;
      }
      case Connective::until: {
        for (std::size_t j = pos; j <= last; ++j) {
          if (eval(*f.right(), j)) return true;
          if (!eval(*f.left(), j)) return false;
        }
        return false;
      }
    }
    return false;
  }

  const Trace& trace_;
  std::unordered_map<const Formula*, std::vector<signed char>> memo_;
};

}  // namespace

bool ltl_eval(const Formula& f, const Trace& t, std::size_t pos) {
  if (t.empty()) throw resolution_error("cannot evaluate on an empty trace");
  if (pos >= t.size()) {
    throw resolution_error("evaluation position beyond trace end");
  }
  RecursiveEval ev(t);
  return ev.eval(f, pos);
}

// ---------------------------------------------------------------------------
// TraceEvaluator: right-to-left tables for plain/definitive/optimistic.

int TraceEvaluator::index_of(const Formula* f, std::vector<Node>& nodes,
                             const Trace& t) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].f == f) return static_cast<int>(i);
  }
  Node n;
  n.f = f;
  if (f->left()) n.left = index_of(f->left().get(), nodes, t);
  if (f->right()) n.right = index_of(f->right().get(), nodes, t);
  if (f->kind() == Connective::atom) {
    auto idx = t.index_of(f->atom_id());
    if (!idx) {
      throw resolution_error("formula atom '" + f->atom_id() +
                             "' not present in trace");
    }
    n.atom_index = *idx;
  }
  nodes.push_back(n);  // children first: post-order
  return static_cast<int>(nodes.size() - 1);
}

TraceEvaluator::TraceEvaluator(FormulaPtr f, const Trace& t)
    : root_(std::move(f)), len_(t.size()) {
  if (len_ == 0) throw resolution_error("cannot evaluate on an empty trace");
  index_of(root_.get(), nodes_, t);

  tables_.assign(3 * nodes_.size() * len_, 0);

  const std::size_t last = len_ - 1;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const Node& node = nodes_[n];
    auto* s = row(0, n);
    auto* d = row(1, n);
    auto* o = row(2, n);
    const std::size_t left = node.left >= 0 ? node.left : 0;
    const std::size_t right = node.right >= 0 ? node.right : 0;
    const auto* ls = node.left >= 0 ? row(0, left) : nullptr;
    const auto* ld = node.left >= 0 ? row(1, left) : nullptr;
    const auto* lo = node.left >= 0 ? row(2, left) : nullptr;
    const auto* rs = node.right >= 0 ? row(0, right) : nullptr;
    const auto* rd = node.right >= 0 ? row(1, right) : nullptr;
    const auto* ro = node.right >= 0 ? row(2, right) : nullptr;

    for (std::size_t back = 0; back < len_; ++back) {
      const std::size_t i = last - back;
      const bool has_next = i < last;
      switch (node.f->kind()) {
        case Connective::truth:
          s[i] = d[i] = o[i] = 1;
          break;
        case Connective::atom: {
          const unsigned char v = t.value(i, node.atom_index) ? 1 : 0;
          s[i] = d[i] = o[i] = v;
          break;
        }
        case Connective::negation:
          s[i] = !ls[i];
          d[i] = !lo[i];
          o[i] = !ld[i];
          break;
        case Connective::conjunction:
          s[i] = ls[i] && rs[i];
          d[i] = ld[i] && rd[i];
          o[i] = lo[i] && ro[i];
          break;
        case Connective::disjunction:
          s[i] = ls[i] || rs[i];
          d[i] = ld[i] || rd[i];
          o[i] = lo[i] || ro[i];
          break;
        case Connective::implication:
          s[i] = !ls[i] || rs[i];
          d[i] = !lo[i] || rd[i];
          o[i] = !ld[i] || ro[i];
          break;
        case Connective::next:
          s[i] = has_next && ls[i + 1];
          d[i] = has_next && ld[i + 1];
          o[i] = has_next ? lo[i + 1] : 1;
          break;
        case Connective::always:
          s[i] = ls[i] && (!has_next || s[i + 1]);
          // A finite prefix can never establish an Always for all futures.
          d[i] = 0;
          o[i] = lo[i] && (!has_next || o[i + 1]);
          break;
        case Connective::eventually:
          s[i] = ls[i] || (has_next && s[i + 1]);
          d[i] = ld[i] || (has_next && d[i + 1]);
          o[i] = 1;  // some extension can still deliver the witness
          break;
        case Connective::until:
          s[i] = rs[i] || (ls[i] && has_next && s[i + 1]);
          d[i] = rd[i] || (ld[i] && has_next && d[i + 1]);
          o[i] = ro[i] || (lo[i] && (has_next ? o[i + 1] : 1));
          break;
      }
    }
  }
}

bool TraceEvaluator::plain(std::size_t pos) const {
  return row(0, nodes_.size() - 1)[pos] != 0;
}
bool TraceEvaluator::definitive(std::size_t pos) const {
  return row(1, nodes_.size() - 1)[pos] != 0;
}
bool TraceEvaluator::optimistic(std::size_t pos) const {
  return row(2, nodes_.size() - 1)[pos] != 0;
}

}  // namespace reqcheck::ltl
