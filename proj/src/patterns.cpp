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

#include "reqcheck/patterns.hpp"

#include "reqcheck/errors.hpp"

namespace reqcheck {

using ltl::FormulaPtr;

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::absence: return "ABSENCE";
    case Pattern::existence: return "EXISTENCE";
    case Pattern::bounded_existence: return "BOUNDED_EXISTENCE";
    case Pattern::universality: return "UNIVERSALITY";
    case Pattern::precedence: return "PRECEDENCE";
    case Pattern::response: return "RESPONSE";
    case Pattern::precedence_chain_21: return "PRECEDENCE_CHAIN_2_1";
    case Pattern::precedence_chain_12: return "PRECEDENCE_CHAIN_1_2";
    case Pattern::response_chain_21: return "RESPONSE_CHAIN_2_1";
    case Pattern::response_chain_12: return "RESPONSE_CHAIN_1_2";
  }
  return "?";
}

const char* scope_name(Scope s) {
  switch (s) {
    case Scope::global: return "GLOBAL";
    case Scope::before_r: return "BEFORE";
    case Scope::after_q: return "AFTER";
    case Scope::between_q_and_r: return "BETWEEN";
    case Scope::after_q_until_r: return "AFTER_UNTIL";
  }
  return "?";
}

std::vector<std::string> pattern_slots(Pattern p) {
  switch (p) {
    case Pattern::absence:
    case Pattern::existence:
    case Pattern::bounded_existence:
    case Pattern::universality:
      return {"P"};
    case Pattern::precedence:
    case Pattern::response:
      return {"P", "S"};
    default:
      return {"P", "S", "T"};
  }
}

std::vector<std::string> scope_slots(Scope s) {
  switch (s) {
    case Scope::global: return {};
    case Scope::before_r: return {"R"};
    case Scope::after_q: return {"Q"};
    case Scope::between_q_and_r:
    case Scope::after_q_until_r:
      return {"Q", "R"};
  }
  return {};
}

std::vector<std::string> required_slots(Pattern p, Scope s) {
  auto slots = pattern_slots(p);
  for (auto& extra : scope_slots(s)) slots.push_back(extra);
  return slots;
}

namespace {

bool is_chain(Pattern p) {
  return p == Pattern::precedence_chain_21 ||
         p == Pattern::precedence_chain_12 ||
         p == Pattern::response_chain_21 || p == Pattern::response_chain_12;
}

}  // namespace

bool pattern_supported(Pattern p, Scope s) {
  if (!is_chain(p)) return true;
  return s == Scope::global || s == Scope::after_q;
}

std::vector<std::pair<Pattern, Scope>> supported_pairs() {
  static const Pattern kPatterns[] = {
      Pattern::absence,        Pattern::existence,
      Pattern::bounded_existence, Pattern::universality,
      Pattern::precedence,     Pattern::response,
      Pattern::precedence_chain_21, Pattern::precedence_chain_12,
      Pattern::response_chain_21,   Pattern::response_chain_12,
  };
  static const Scope kScopes[] = {
      Scope::global, Scope::before_r, Scope::after_q, Scope::between_q_and_r,
      Scope::after_q_until_r,
  };
  std::vector<std::pair<Pattern, Scope>> out;
  for (Pattern p : kPatterns) {
    for (Scope s : kScopes) {
      if (pattern_supported(p, s)) out.emplace_back(p, s);
    }
  }
  return out;
}

namespace {

using namespace ltl;

// Anchors a body formula at the first step where q holds; vacuous when q
// never holds. Used for every After-Q compilation: the window runs from the
// first Q to the end of the trace.
FormulaPtr anchored_after(FormulaPtr q, FormulaPtr body) {
  return or_(until(not_(q), and_(q, std::move(body))), always(not_(q)));
}

// Alternating episode nesting with strong untils; the innermost block is
// ¬P 𝒰 R. For k == 2 this is exactly the classic bounded-existence-between
// nesting. Each level admits one more maximal run of P-states before R.
FormulaPtr bounded_between_body(FormulaPtr p, FormulaPtr r, int k) {
  FormulaPtr body = until(not_(p), r);
  for (int level = 0; level < k; ++level) {
    body = until(and_(not_(p), not_(r)),
                 or_(r, until(and_(p, not_(r)), or_(r, std::move(body)))));
  }
  return body;
}

// Same alternation with weak untils for windows that may never close.
FormulaPtr bounded_until_body(FormulaPtr p, FormulaPtr r, int k) {
  FormulaPtr body = weak_until(not_(p), r);
  for (int level = 0; level < k; ++level) {
    body = weak_until(
        and_(not_(p), not_(r)),
        or_(r, weak_until(and_(p, not_(r)), or_(r, std::move(body)))));
  }
  return body;
}

// Unscoped alternation: after k maximal P-runs, ¬P forever.
FormulaPtr bounded_global_body(FormulaPtr p, int k) {
  FormulaPtr body = always(not_(p));
  for (int level = 0; level < k; ++level) {
    body = weak_until(not_(p), weak_until(p, std::move(body)));
  }
  return body;
}

FormulaPtr chain_global_body(Pattern pat, FormulaPtr p, FormulaPtr s,
                             FormulaPtr t) {
  switch (pat) {
    case Pattern::precedence_chain_21:
      // An S followed strictly later by T, all before the first P.
      return implies(eventually(p),
                     until(not_(p), and_(s, and_(not_(p),
                                                 next(until(not_(p), t))))));
    case Pattern::precedence_chain_12:
      // P before the first S whenever some S..T chain occurs.
      return implies(eventually(and_(s, next(eventually(t)))),
                     until(not_(s), p));
    case Pattern::response_chain_21:
      // Every S..T chain is followed by a P at or after the T.
      return always(implies(and_(s, next(eventually(t))),
                            next(eventually(and_(t, eventually(p))))));
    case Pattern::response_chain_12:
      // Every P is followed by an S..T chain.
      return always(implies(p, eventually(and_(s, next(eventually(t))))));
    default:
      throw unsupported_pattern_error("not a chain pattern");
  }
}

}  // namespace

FormulaPtr pattern_to_ltl(const PatternId& id, Scope sc,
                          const std::map<std::string, std::string>& slots) {
  if (!pattern_supported(id.pattern, sc)) {
    throw unsupported_pattern_error(
        std::string("unsupported pattern/scope combination: ") +
        pattern_name(id.pattern) + "/" + scope_name(sc) +
        " (no validated formula; refusing to guess)");
  }
  if (id.pattern == Pattern::bounded_existence && id.k < 1) {
    throw instantiation_error("bounded existence requires k >= 1");
  }

  std::string missing;
  auto lookup = [&](const char* slot) -> FormulaPtr {
    auto it = slots.find(slot);
    if (it == slots.end()) {
      if (!missing.empty()) missing += ", ";
      missing += slot;
      return atom(slot);
    }
    return atom(it->second);
  };

  const auto needed = required_slots(id.pattern, sc);
  FormulaPtr p, s, t, q, r;
  for (const auto& name : needed) {
    if (name == "P") p = lookup("P");
    else if (name == "S") s = lookup("S");
    else if (name == "T") t = lookup("T");
    else if (name == "Q") q = lookup("Q");
    else if (name == "R") r = lookup("R");
  }
  if (!missing.empty()) {
    throw instantiation_error(std::string("pattern ") +
                              pattern_name(id.pattern) + "/" + scope_name(sc) +
                              ": missing slot bindings: " + missing);
  }

  if (is_chain(id.pattern)) {
    FormulaPtr body = chain_global_body(id.pattern, p, s, t);
    return sc == Scope::global ? body : anchored_after(q, std::move(body));
  }

  switch (id.pattern) {
    case Pattern::absence:
      switch (sc) {
        case Scope::global: return always(not_(p));
        case Scope::before_r:
          return implies(eventually(r), until(not_(p), r));
        case Scope::after_q: return anchored_after(q, always(not_(p)));
        case Scope::between_q_and_r:
          return always(implies(and_(q, and_(not_(r), eventually(r))),
                                until(not_(p), r)));
        case Scope::after_q_until_r:
          return always(implies(and_(q, not_(r)), weak_until(not_(p), r)));
      }
      break;

    case Pattern::existence:
      switch (sc) {
        case Scope::global: return eventually(p);
        case Scope::before_r: return weak_until(not_(r), and_(p, not_(r)));
        case Scope::after_q: return anchored_after(q, eventually(p));
        case Scope::between_q_and_r:
          return always(implies(and_(q, not_(r)),
                                weak_until(not_(r), and_(p, not_(r)))));
        case Scope::after_q_until_r:
          return always(
              implies(and_(q, not_(r)), until(not_(r), and_(p, not_(r)))));
      }
      break;

    case Pattern::universality:
      switch (sc) {
        case Scope::global: return always(p);
        case Scope::before_r: return implies(eventually(r), until(p, r));
        case Scope::after_q: return anchored_after(q, always(p));
        case Scope::between_q_and_r:
          return always(
              implies(and_(q, and_(not_(r), eventually(r))), until(p, r)));
        case Scope::after_q_until_r:
          return always(implies(and_(q, not_(r)), weak_until(p, r)));
      }
      break;

    case Pattern::bounded_existence:
      switch (sc) {
        case Scope::global: return bounded_global_body(p, id.k);
        case Scope::before_r:
          return implies(eventually(r), bounded_between_body(p, r, id.k));
        case Scope::after_q:
          return anchored_after(q, bounded_global_body(p, id.k));
        case Scope::between_q_and_r:
          return always(implies(and_(q, eventually(r)),
                                bounded_between_body(p, r, id.k)));
        case Scope::after_q_until_r:
          return always(implies(q, bounded_until_body(p, r, id.k)));
      }
      break;

    case Pattern::precedence:
      switch (sc) {
        case Scope::global: return weak_until(not_(p), s);
        case Scope::before_r:
          return implies(eventually(r), until(not_(p), or_(s, r)));
        case Scope::after_q: return anchored_after(q, weak_until(not_(p), s));
        case Scope::between_q_and_r:
          return always(implies(and_(q, and_(not_(r), eventually(r))),
                                until(not_(p), or_(s, r))));
        case Scope::after_q_until_r:
          return always(
              implies(and_(q, not_(r)), weak_until(not_(p), or_(s, r))));
      }
      break;

    case Pattern::response:
      switch (sc) {
        case Scope::global: return always(implies(p, eventually(s)));
        case Scope::before_r:
          return implies(eventually(r),
                         until(implies(p, until(not_(r), and_(s, not_(r)))),
                               r));
        case Scope::after_q:
          return anchored_after(q, always(implies(p, eventually(s))));
        case Scope::between_q_and_r:
          return always(implies(
              and_(q, and_(not_(r), eventually(r))),
              until(implies(p, until(not_(r), and_(s, not_(r)))), r)));
        case Scope::after_q_until_r:
          return always(implies(
              and_(q, not_(r)),
              weak_until(implies(p, until(not_(r), and_(s, not_(r)))), r)));
      }
      break;

    default:
      break;
  }
  throw unsupported_pattern_error("unhandled pattern/scope combination");
}

}  // namespace reqcheck
