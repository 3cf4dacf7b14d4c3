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

#include "reqcheck/adt/suites.hpp"

#include "reqcheck/adt/probes.hpp"

namespace reqcheck::adt {

namespace {

void require_ops(const SuiteOps& binding, const char* adt,
                 const std::vector<std::string>& required) {
  std::string missing;
  for (const auto& id : required) {
    if (!binding.has(id)) {
      if (!missing.empty()) missing += ", ";
      missing += id;
    }
  }
  if (!missing.empty()) {
    throw config_error(std::string(adt) + " binding is missing operations: " +
                       missing);
  }
  if (!binding.make_instance) {
    throw config_error(std::string(adt) + " binding has no instance generator");
  }
}

// Post-only axiom whose parameters are freshly generated instances/values.
AxiomDriver observation_driver(std::string name, std::string text,
                               std::vector<ParamDecl> params,
                               std::function<bool(const ParamBinding&)> post) {
  AxiomDriver d;
  d.name = std::move(name);
  d.text = std::move(text);
  d.params = std::move(params);
  d.post = std::move(post);
  return d;
}

// Clone-pair driver: s_2 is generated as a clone of s_1, so `old` values can
// be read off s_2 in the postcondition.
AxiomDriver clone_pair_driver(const SuiteOps& ops, std::string name,
                              std::string text, std::size_t value_count,
                              std::function<bool(const ParamBinding&)> pre,
                              std::vector<DriverStep> body,
                              std::function<bool(const ParamBinding&)> post) {
  AxiomDriver d;
  d.name = std::move(name);
  d.text = std::move(text);
  d.params = {{"s_1", ParamKind::instance}, {"s_2", ParamKind::instance}};
  for (std::size_t i = 0; i < value_count; ++i) {
    d.params.push_back({"x" + std::to_string(i), ParamKind::value});
  }
  d.pre = std::move(pre);
  d.body = std::move(body);
  d.modifies = {"s_1"};
  d.post = std::move(post);

  auto make_instance = ops.make_instance;
  auto vmin = ops.value_min;
  auto vmax = ops.value_max;
  d.generate = [make_instance, vmin, vmax, value_count](Rng& rng) {
    ParamBinding b;
    State s = make_instance(rng);
    b.set_instance("s_2", s);
    b.set_instance("s_1", std::move(s));
    for (std::size_t i = 0; i < value_count; ++i) {
      b.set_value("x" + std::to_string(i), rng.int_in(vmin, vmax));
    }
    return b;
  };
  return d;
}

// Clone-pair frame axiom: applying the mutator to s_1 leaves every region
// outside its modifies clause equal to the untouched clone's.
AxiomDriver frame_driver(const SuiteOps& ops, const std::string& op_id) {
  const ActionDef op = ops.action(op_id);
  auto pre = [op](const ParamBinding& b) {
    return !op.guard || op.guard->eval(b.instance("s_1"));
  };
  auto step = [op](ParamBinding& b) {
    ActionInput in;
    for (std::size_t i = 0; i < op.value_args; ++i) {
      in.values.push_back(b.value("x" + std::to_string(i)));
    }
    op.apply(b.instance("s_1"), in);
  };
  const std::vector<std::string> allowed = op.modifies;
  auto post = [allowed](const ParamBinding& b) {
    for (const Region& before : b.instance("s_2").regions()) {
      bool may_change = false;
      for (const auto& m : allowed) may_change = may_change || m == before.name;
      if (may_change) continue;
      if (b.instance("s_1").region_content(before.name) != before.content) {
        return false;
      }
    }
    return true;
  };
  return clone_pair_driver(
      ops, op_id + "_respects_frame",
      "'" + op_id + "' touches only the regions it declares", op.value_args,
      pre, {{op_id + "(s_1)", step}}, post);
}

}  // namespace

DriverSuite build_stack_suite(const SuiteOps& binding) {
  require_ops(binding, "stack",
              {"new", "push", "pop", "top", "is_empty", "count"});

  DriverSuite suite;
  suite.ops = binding;
  const SuiteOps& ops = suite.ops;
  const EquivalenceDef eq = ops.equivalence;

  auto push_step = [&ops](const std::string& slot) {
    const ActionDef push = ops.action("push");
    return DriverStep{"push(" + slot + ", x0)", [push, slot](ParamBinding& b) {
                        ActionInput in;
                        in.values.push_back(b.value("x0"));
                        push.apply(b.instance(slot), in);
                      }};
  };
  auto pop_step = [&ops](const std::string& slot) {
    const ActionDef pop = ops.action("pop");
    return DriverStep{"pop(" + slot + ")", [pop, slot](ParamBinding& b) {
                        pop.apply(b.instance(slot), {});
                      }};
  };
  auto count_of = ops.measure("count").eval;
  auto top_of = ops.measure("top").eval;
  auto is_empty = ops.condition("is_empty").eval;

  // pop (push (s, x)) = s
  suite.drivers.push_back(clone_pair_driver(
      ops, "pop_after_push_restores",
      "popping a stack right after pushing an element restores the original",
      1,
      [eq](const ParamBinding& b) {
        return eq.eq(b.instance("s_1"), b.instance("s_2"));
      },
      {push_step("s_1"), pop_step("s_1")},
      [eq](const ParamBinding& b) {
        return eq.eq(b.instance("s_1"), b.instance("s_2"));
      }));

  // count = old count + 1
  suite.drivers.push_back(clone_pair_driver(
      ops, "push_increments_count", "push grows the count by exactly one", 1,
      [eq](const ParamBinding& b) {
        return eq.eq(b.instance("s_1"), b.instance("s_2"));
      },
      {push_step("s_1")},
      [count_of](const ParamBinding& b) {
        return count_of(b.instance("s_1")) == count_of(b.instance("s_2")) + 1;
      }));

  suite.drivers.push_back(clone_pair_driver(
      ops, "pop_decrements_count", "pop shrinks the count by exactly one", 0,
      [eq, is_empty](const ParamBinding& b) {
        return eq.eq(b.instance("s_1"), b.instance("s_2")) &&
               !is_empty(b.instance("s_1"));
      },
      {pop_step("s_1")},
      [count_of](const ParamBinding& b) {
        return count_of(b.instance("s_1")) == count_of(b.instance("s_2")) - 1;
      }));

  {
    AxiomDriver d;
    d.name = "top_after_push_is_pushed";
    d.text = "the element just pushed is on top";
    d.params = {{"s_1", ParamKind::instance}, {"x0", ParamKind::value}};
    d.body = {push_step("s_1")};
    d.modifies = {"s_1"};
    d.post = [top_of](const ParamBinding& b) {
      return top_of(b.instance("s_1")) == b.value("x0");
    };
    suite.drivers.push_back(std::move(d));
  }

  {
    AxiomDriver d = observation_driver(
        "new_stack_is_empty", "a fresh stack is empty with count zero",
        {{"s", ParamKind::instance}},
        [is_empty, count_of](const ParamBinding& b) {
          return is_empty(b.instance("s")) && count_of(b.instance("s")) == 0;
        });
    const auto new_fn = ops.functions.at("new");
    d.generate = [new_fn](Rng&) {
      ParamBinding b;
      b.set_instance("s", new_fn({}, {}));
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  suite.drivers.push_back(
      well_definedness_driver(ops.action("push"), eq, ops));
  suite.drivers.push_back(well_definedness_driver(ops.action("pop"), eq, ops));
  suite.drivers.push_back(frame_driver(ops, "push"));
  suite.drivers.push_back(frame_driver(ops, "pop"));
  return suite;
}

DriverSuite build_queue_with_append_suite(const SuiteOps& binding) {
  require_ops(binding, "queue", {"new", "enqueue", "dequeue", "push_front",
                                 "append", "front", "is_empty", "count"});

  DriverSuite suite;
  suite.ops = binding;
  const SuiteOps& ops = suite.ops;
  const EquivalenceDef eq = ops.equivalence;

  auto unary_step = [&ops](const std::string& op_id, const std::string& slot,
                           bool with_value) {
    const ActionDef op = ops.action(op_id);
    return DriverStep{op_id + "(" + slot + ")",
                      [op, slot, with_value](ParamBinding& b) {
                        ActionInput in;
                        if (with_value) in.values.push_back(b.value("x0"));
                        op.apply(b.instance(slot), in);
                      }};
  };
  auto append_step = [&ops](const std::string& target,
                            const std::string& source) {
    const ActionDef append = ops.action("append");
    return DriverStep{"append(" + target + ", " + source + ")",
                      [append, target, source](ParamBinding& b) {
                        ActionInput in;
                        in.other = &b.instance(source);
                        append.apply(b.instance(target), in);
                      }};
  };

  auto count_of = ops.measure("count").eval;
  auto front_of = ops.measure("front").eval;
  auto is_empty = ops.condition("is_empty").eval;
  const auto new_fn = ops.functions.at("new");
  auto fresh = [new_fn] { return new_fn({}, {}); };
  auto clone_pair_pre = [eq](const ParamBinding& b) {
    return eq.eq(b.instance("s_1"), b.instance("s_2"));
  };

  {
    AxiomDriver d = observation_driver(
        "new_queue_is_empty", "a fresh queue is empty with count zero",
        {{"q", ParamKind::instance}},
        [is_empty, count_of](const ParamBinding& b) {
          return is_empty(b.instance("q")) && count_of(b.instance("q")) == 0;
        });
    d.generate = [fresh](Rng&) {
      ParamBinding b;
      b.set_instance("q", fresh());
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  suite.drivers.push_back(clone_pair_driver(
      ops, "enqueue_increments_count", "enqueue grows the count by one", 1,
      clone_pair_pre, {unary_step("enqueue", "s_1", true)},
      [count_of](const ParamBinding& b) {
        return count_of(b.instance("s_1")) == count_of(b.instance("s_2")) + 1;
      }));

  suite.drivers.push_back(clone_pair_driver(
      ops, "dequeue_decrements_count", "dequeue shrinks the count by one", 0,
      [eq, is_empty](const ParamBinding& b) {
        return eq.eq(b.instance("s_1"), b.instance("s_2")) &&
               !is_empty(b.instance("s_1"));
      },
      {unary_step("dequeue", "s_1", false)},
      [count_of](const ParamBinding& b) {
        return count_of(b.instance("s_1")) == count_of(b.instance("s_2")) - 1;
      }));

  // dequeue(enqueue(q, x)) ~ enqueue(dequeue(q), x) on non-empty queues
  {
    auto pre = [eq, is_empty](const ParamBinding& b) {
      return eq.eq(b.instance("s_1"), b.instance("s_2")) &&
             !is_empty(b.instance("s_1"));
    };
    std::vector<DriverStep> body = {
        unary_step("enqueue", "s_1", true), unary_step("dequeue", "s_1", false),
        unary_step("dequeue", "s_2", false),
        unary_step("enqueue", "s_2", true)};
    auto d = clone_pair_driver(
        ops, "enqueue_dequeue_commute",
        "enqueue and dequeue commute on non-empty queues", 1, pre,
        std::move(body), [eq](const ParamBinding& b) {
          return eq.eq(b.instance("s_1"), b.instance("s_2"));
        });
    d.modifies = {"s_1", "s_2"};
    suite.drivers.push_back(std::move(d));
  }

  {
    AxiomDriver d;
    d.name = "fifo_first_in_first_out";
    d.text = "the first enqueued element is at the front";
    d.params = {{"q", ParamKind::instance},
                {"x0", ParamKind::value},
                {"x1", ParamKind::value}};
    const ActionDef enqueue = ops.action("enqueue");
    d.body = {{"enqueue(q, x0)",
               [enqueue](ParamBinding& b) {
                 ActionInput in;
                 in.values.push_back(b.value("x0"));
                 enqueue.apply(b.instance("q"), in);
               }},
              {"enqueue(q, x1)", [enqueue](ParamBinding& b) {
                 ActionInput in;
                 in.values.push_back(b.value("x1"));
                 enqueue.apply(b.instance("q"), in);
               }}};
    d.modifies = {"q"};
    d.post = [front_of](const ParamBinding& b) {
      return front_of(b.instance("q")) == b.value("x0");
    };
    auto vmin = ops.value_min;
    auto vmax = ops.value_max;
    d.generate = [fresh, vmin, vmax](Rng& rng) {
      ParamBinding b;
      b.set_instance("q", fresh());
      b.set_value("x0", rng.int_in(vmin, vmax));
      b.set_value("x1", rng.int_in(vmin, vmax));
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  // append(q, new) ~ q
  {
    auto step = DriverStep{"append(s_1, new)", nullptr};
    const ActionDef append = ops.action("append");
    step.run = [append, fresh](ParamBinding& b) {
      State empty = fresh();
      ActionInput in;
      in.other = &empty;
      append.apply(b.instance("s_1"), in);
    };
    suite.drivers.push_back(clone_pair_driver(
        ops, "append_empty_is_identity",
        "appending an empty queue changes nothing", 0, clone_pair_pre, {step},
        [eq](const ParamBinding& b) {
          return eq.eq(b.instance("s_1"), b.instance("s_2"));
        }));
  }

  // append(new, q) ~ q
  {
    const ActionDef append = ops.action("append");
    auto step = DriverStep{"s_1 := append(new, s_1)",
                           [append, fresh](ParamBinding& b) {
                             State target = fresh();
                             ActionInput in;
                             in.other = &b.instance("s_1");
                             append.apply(target, in);
                             b.instance("s_1") = std::move(target);
                           }};
    suite.drivers.push_back(clone_pair_driver(
        ops, "append_onto_empty_is_identity",
        "appending onto an empty queue copies the source", 0, clone_pair_pre,
        {step}, [eq](const ParamBinding& b) {
          return eq.eq(b.instance("s_1"), b.instance("s_2"));
        }));
  }

  // (a · b) · c ~ a · (b · c)
  {
    AxiomDriver d;
    d.name = "append_is_associative";
    d.text = "appending is associative";
    d.params = {{"a_1", ParamKind::instance},
                {"a_2", ParamKind::instance},
                {"b", ParamKind::instance},
                {"c", ParamKind::instance}};
    d.pre = [eq](const ParamBinding& b) {
      return eq.eq(b.instance("a_1"), b.instance("a_2"));
    };
    const ActionDef append = ops.action("append");
    d.body = {append_step("a_1", "b"), append_step("a_1", "c"),
              {"a_2 · (b · c)", [append](ParamBinding& b) {
                 State bc = b.instance("b");
                 ActionInput in;
                 in.other = &b.instance("c");
                 append.apply(bc, in);
                 ActionInput in2;
                 in2.other = &bc;
                 append.apply(b.instance("a_2"), in2);
               }}};
    d.modifies = {"a_1", "a_2"};
    d.post = [eq](const ParamBinding& b) {
      return eq.eq(b.instance("a_1"), b.instance("a_2"));
    };
    auto make_instance = ops.make_instance;
    d.generate = [make_instance](Rng& rng) {
      ParamBinding b;
      State a = make_instance(rng);
      b.set_instance("a_2", a);
      b.set_instance("a_1", std::move(a));
      b.set_instance("b", make_instance(rng));
      b.set_instance("c", make_instance(rng));
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  // count(a · b) = count a + count b
  {
    AxiomDriver d;
    d.name = "append_adds_counts";
    d.text = "the appended queue's count is the sum of both counts";
    d.params = {{"a_1", ParamKind::instance},
                {"a_2", ParamKind::instance},
                {"b", ParamKind::instance}};
    d.pre = [eq](const ParamBinding& b) {
      return eq.eq(b.instance("a_1"), b.instance("a_2"));
    };
    d.body = {append_step("a_1", "b")};
    d.modifies = {"a_1"};
    d.post = [count_of](const ParamBinding& b) {
      return count_of(b.instance("a_1")) ==
             count_of(b.instance("a_2")) + count_of(b.instance("b"));
    };
    auto make_instance = ops.make_instance;
    d.generate = [make_instance](Rng& rng) {
      ParamBinding b;
      State a = make_instance(rng);
      b.set_instance("a_2", a);
      b.set_instance("a_1", std::move(a));
      b.set_instance("b", make_instance(rng));
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  // appending does not disturb the existing front
  {
    AxiomDriver d;
    d.name = "append_preserves_front";
    d.text = "appending to a non-empty queue keeps its front";
    d.params = {{"a_1", ParamKind::instance},
                {"a_2", ParamKind::instance},
                {"b", ParamKind::instance}};
    d.pre = [eq, is_empty](const ParamBinding& b) {
      return eq.eq(b.instance("a_1"), b.instance("a_2")) &&
             !is_empty(b.instance("a_1"));
    };
    d.body = {append_step("a_1", "b")};
    d.modifies = {"a_1"};
    d.post = [front_of](const ParamBinding& b) {
      return front_of(b.instance("a_1")) == front_of(b.instance("a_2"));
    };
    auto make_instance = ops.make_instance;
    d.generate = [make_instance](Rng& rng) {
      ParamBinding b;
      State a = make_instance(rng);
      b.set_instance("a_2", a);
      b.set_instance("a_1", std::move(a));
      b.set_instance("b", make_instance(rng));
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  suite.drivers.push_back(
      well_definedness_driver(ops.action("enqueue"), eq, ops));
  suite.drivers.push_back(
      well_definedness_driver(ops.action("dequeue"), eq, ops));
  suite.drivers.push_back(
      well_definedness_driver(ops.action("append"), eq, ops));
  suite.drivers.push_back(frame_driver(ops, "enqueue"));
  return suite;
}

DriverSuite build_tree_inord_suite(const SuiteOps& binding,
                                   const DriverSuite& queue_suite) {
  require_ops(binding, "binary tree",
              {"leaf", "node", "left", "right", "item", "is_leaf", "in_ord"});
  if (queue_suite.drivers.empty() || !queue_suite.ops.has("append") ||
      !queue_suite.ops.has("push_front") || !queue_suite.ops.has("is_empty")) {
    throw config_error(
        "binary tree suite requires a queue-with-append suite certifying the "
        "in_ord result type");
  }

  DriverSuite suite;
  suite.ops = binding;
  const SuiteOps& ops = suite.ops;
  const SuiteOps& qops = queue_suite.ops;
  const EquivalenceDef tree_eq = ops.equivalence;
  const EquivalenceDef queue_eq = qops.equivalence;

  auto is_leaf = ops.condition("is_leaf").eval;
  auto item_of = ops.measure("item").eval;
  auto queue_empty = qops.condition("is_empty").eval;
  const ActionDef q_append = qops.action("append");
  const ActionDef q_push_front = qops.action("push_front");

  const auto node_fn = ops.functions.at("node");
  const auto in_ord_fn = ops.functions.at("in_ord");
  const auto left_fn = ops.functions.at("left");
  const auto right_fn = ops.functions.at("right");
  const auto leaf_fn = ops.functions.at("leaf");

  auto node_of = [node_fn](const State& l, std::int64_t x, const State& r) {
    return node_fn({&l, &r}, {x});
  };
  auto in_ord = [in_ord_fn](const State& t) { return in_ord_fn({&t}, {}); };
  auto left_of = [left_fn](const State& t) { return left_fn({&t}, {}); };
  auto right_of = [right_fn](const State& t) { return right_fn({&t}, {}); };

  {
    AxiomDriver d = observation_driver(
        "leaf_is_leaf", "a fresh leaf reports itself as a leaf",
        {{"t", ParamKind::instance}},
        [is_leaf](const ParamBinding& b) { return is_leaf(b.instance("t")); });
    d.generate = [leaf_fn](Rng&) {
      ParamBinding b;
      b.set_instance("t", leaf_fn({}, {}));
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  suite.drivers.push_back(observation_driver(
      "node_is_not_leaf", "a constructed node is not a leaf",
      {{"l", ParamKind::instance},
       {"r", ParamKind::instance},
       {"x0", ParamKind::value}},
      [node_of, is_leaf](const ParamBinding& b) {
        return !is_leaf(
            node_of(b.instance("l"), b.value("x0"), b.instance("r")));
      }));

  suite.drivers.push_back(observation_driver(
      "left_of_node", "left(node(l, x, r)) = l",
      {{"l", ParamKind::instance},
       {"r", ParamKind::instance},
       {"x0", ParamKind::value}},
      [node_of, left_of, tree_eq](const ParamBinding& b) {
        State n = node_of(b.instance("l"), b.value("x0"), b.instance("r"));
        return tree_eq.eq(left_of(n), b.instance("l"));
      }));

  suite.drivers.push_back(observation_driver(
      "right_of_node", "right(node(l, x, r)) = r",
      {{"l", ParamKind::instance},
       {"r", ParamKind::instance},
       {"x0", ParamKind::value}},
      [node_of, right_of, tree_eq](const ParamBinding& b) {
        State n = node_of(b.instance("l"), b.value("x0"), b.instance("r"));
        return tree_eq.eq(right_of(n), b.instance("r"));
      }));

  suite.drivers.push_back(observation_driver(
      "item_of_node", "item(node(l, x, r)) = x",
      {{"l", ParamKind::instance},
       {"r", ParamKind::instance},
       {"x0", ParamKind::value}},
      [node_of, item_of](const ParamBinding& b) {
        State n = node_of(b.instance("l"), b.value("x0"), b.instance("r"));
        return item_of(n) == b.value("x0");
      }));

  {
    AxiomDriver d = observation_driver(
        "in_ord_of_leaf_is_empty", "in_ord(leaf) is the empty queue",
        {{"t", ParamKind::instance}},
        [in_ord, queue_empty](const ParamBinding& b) {
          return queue_empty(in_ord(b.instance("t")));
        });
    d.generate = [leaf_fn](Rng&) {
      ParamBinding b;
      b.set_instance("t", leaf_fn({}, {}));
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  // in_ord(node(l, x, r)) = append(in_ord(l), push_front(x, in_ord(r)))
  suite.drivers.push_back(observation_driver(
      "in_ord_of_node_decomposes",
      "in-order of a node is in-order(left) ++ item ++ in-order(right)",
      {{"l", ParamKind::instance},
       {"r", ParamKind::instance},
       {"x0", ParamKind::value}},
      [node_of, in_ord, queue_eq, q_append,
       q_push_front](const ParamBinding& b) {
        State n = node_of(b.instance("l"), b.value("x0"), b.instance("r"));
        State lhs = in_ord(n);
        State left_part = in_ord(b.instance("l"));
        State right_part = in_ord(b.instance("r"));
        ActionInput push_in;
        push_in.values.push_back(b.value("x0"));
        q_push_front.apply(right_part, push_in);
        ActionInput append_in;
        append_in.other = &right_part;
        q_append.apply(left_part, append_in);
        return queue_eq.eq(lhs, left_part);
      }));

  // in_ord well-definedness: equal trees yield equal traversals.
  {
    AxiomDriver d;
    d.name = "in_ord_is_well_defined";
    d.text = "equal trees have equal in-order traversals";
    d.params = {{"t_1", ParamKind::instance}, {"t_2", ParamKind::instance}};
    d.pre = [tree_eq](const ParamBinding& b) {
      return tree_eq.eq(b.instance("t_1"), b.instance("t_2"));
    };
    d.post = [in_ord, queue_eq](const ParamBinding& b) {
      return queue_eq.eq(in_ord(b.instance("t_1")), in_ord(b.instance("t_2")));
    };
    auto make_instance = ops.make_instance;
    auto make_pair = ops.make_equal_pair;
    d.generate = [make_instance, make_pair](Rng& rng) {
      ParamBinding b;
      if (make_pair) {
        auto [a, c] = make_pair(rng);
        b.set_instance("t_1", std::move(a));
        b.set_instance("t_2", std::move(c));
      } else {
        State t = make_instance(rng);
        b.set_instance("t_2", t);
        b.set_instance("t_1", std::move(t));
      }
      return b;
    };
    suite.drivers.push_back(std::move(d));
  }

  return suite;
}

}  // namespace reqcheck::adt
