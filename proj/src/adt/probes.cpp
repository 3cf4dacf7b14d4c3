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

#include "reqcheck/adt/probes.hpp"

#include <algorithm>

#include "reqcheck/kernel.hpp"

namespace reqcheck::adt {

AxiomDriver well_definedness_driver(const ActionDef& op,
                                    const EquivalenceDef& eq,
                                    const SuiteOps& ops) {
  AxiomDriver d;
  d.name = op.id + "_is_well_defined";
  d.text = "equal instances stay equal after identical '" + op.id + "' calls";
  d.params = {{"s_1", ParamKind::instance}, {"s_2", ParamKind::instance}};
  if (op.takes_other) d.params.push_back({"src", ParamKind::instance});
  for (std::size_t i = 0; i < op.value_args; ++i) {
    d.params.push_back({"x" + std::to_string(i), ParamKind::value});
  }
  d.modifies = {"s_1", "s_2"};

  const ActionDef op_copy = op;
  const EquivalenceDef eq_copy = eq;

  d.pre = [op_copy, eq_copy](const ParamBinding& b) {
    if (!eq_copy.eq(b.instance("s_1"), b.instance("s_2"))) return false;
    if (op_copy.guard) {
      return op_copy.guard->eval(b.instance("s_1")) &&
             op_copy.guard->eval(b.instance("s_2"));
    }
    return true;
  };

  auto apply_to = [op_copy](ParamBinding& b, const std::string& slot) {
    ActionInput in;
    for (std::size_t i = 0; i < op_copy.value_args; ++i) {
      in.values.push_back(b.value("x" + std::to_string(i)));
    }
    if (op_copy.takes_other) in.other = &b.instance("src");
    op_copy.apply(b.instance(slot), in);
  };
  d.body = {{op.id + "(s_1)", [apply_to](ParamBinding& b) { apply_to(b, "s_1"); }},
            {op.id + "(s_2)", [apply_to](ParamBinding& b) { apply_to(b, "s_2"); }}};

  d.post = [eq_copy](const ParamBinding& b) {
    return eq_copy.eq(b.instance("s_1"), b.instance("s_2"));
  };

  auto make_instance = ops.make_instance;
  auto make_pair = ops.make_equal_pair;
  auto vmin = ops.value_min;
  auto vmax = ops.value_max;
  const std::size_t value_args = op.value_args;
  const bool takes_other = op.takes_other;
  d.generate = [make_instance, make_pair, vmin, vmax, value_args,
                takes_other](Rng& rng) {
    ParamBinding b;
    if (make_pair) {
      auto [a, c] = make_pair(rng);
      b.set_instance("s_1", std::move(a));
      b.set_instance("s_2", std::move(c));
    } else {
      State s = make_instance(rng);
      b.set_instance("s_2", s);
      b.set_instance("s_1", std::move(s));
    }
    if (takes_other) b.set_instance("src", make_instance(rng));
    for (std::size_t i = 0; i < value_args; ++i) {
      b.set_value("x" + std::to_string(i), rng.int_in(vmin, vmax));
    }
    return b;
  };
  return d;
}

Verdict contract_divergence_probe(
    const ActionDef& impl_a, const ActionDef& impl_b,
    const std::function<bool(const State&)>& contract,
    const InputGenerator& gen, const std::function<State(Rng&)>& make_input,
    const EquivalenceDef& eq, std::size_t budget) {
  Rng rng = gen.substream("divergence:" + impl_a.id + "/" + impl_b.id);
  for (std::size_t i = 0; i < budget; ++i) {
    const State input = make_input(rng);
    ActionInput args;
    const std::size_t arity = std::max(impl_a.value_args, impl_b.value_args);
    for (std::size_t v = 0; v < arity; ++v) {
      args.values.push_back(rng.int_in(-100, 100));
    }

    State result_a = input;
    State result_b = input;
    if (impl_a.guard && !impl_a.guard->eval(result_a)) continue;
    if (impl_b.guard && !impl_b.guard->eval(result_b)) continue;
    impl_a.apply(result_a, args);
    impl_b.apply(result_b, args);

    if (!contract(result_a) || !contract(result_b)) continue;
    if (!eq.eq(result_a, result_b)) {
      Witness w;
      Trace t(std::vector<std::string>{});
      t.append({});
      w.trace = std::move(t);
      w.step = i;
      w.bindings = {{"input", input.serialize()},
                    {impl_a.id, result_a.serialize()},
                    {impl_b.id, result_b.serialize()}};
      return Verdict::violated(
          "contract underspecified: '" + impl_a.id + "' and '" + impl_b.id +
              "' both satisfy the contract yet differ (sample " +
              std::to_string(i) + ")",
          std::move(w));
    }
  }
  return Verdict::holds("no divergence within " + std::to_string(budget) +
                        " samples");
}

AxiomDriver aliasing_self_copy_driver(const ActionDef& copy_op,
                                      const EquivalenceDef& eq,
                                      const SuiteOps& ops) {
  AxiomDriver d;
  d.name = copy_op.id + "_tolerates_self_aliasing";
  d.text = "'" + copy_op.id + "'(x, x) leaves x unchanged";
  d.params = {{"x", ParamKind::instance}, {"snapshot", ParamKind::instance}};
  d.modifies = {"x"};

  const ActionDef op = copy_op;
  d.body = {{copy_op.id + "(x, x)", [op](ParamBinding& b) {
               State& x = b.instance("x");
               ActionInput in;
               in.other = &x;  // the alias under test
               op.apply(x, in);
             }}};

  const EquivalenceDef eq_copy = eq;
  d.post = [eq_copy](const ParamBinding& b) {
    return eq_copy.eq(b.instance("x"), b.instance("snapshot"));
  };

  auto make_instance = ops.make_instance;
  d.generate = [make_instance](Rng& rng) {
    ParamBinding b;
    State x = make_instance(rng);
    b.set_instance("snapshot", x);
    b.set_instance("x", std::move(x));
    return b;
  };
  return d;
}

Verdict frame_check(const ActionDef& op, const std::vector<std::string>& tracked,
                    ParamBinding inputs, const std::string& target_slot) {
  std::map<std::string, std::string> slot_snapshots;
  for (const std::string& slot : tracked) {
    slot_snapshots[slot] = inputs.instance(slot).serialize();
  }
  std::vector<Region> before_regions = inputs.instance(target_slot).regions();

  ActionInput in;
  for (std::size_t i = 0; i < op.value_args; ++i) {
    const std::string slot = "x" + std::to_string(i);
    in.values.push_back(inputs.has_value(slot) ? inputs.value(slot) : 0);
  }
  if (op.takes_other && inputs.has_instance("other")) {
    in.other = &inputs.instance("other");
  }
  apply_action(op, inputs.instance(target_slot), in);

  for (const std::string& slot : tracked) {
    if (slot == target_slot) continue;
    if (inputs.instance(slot).serialize() != slot_snapshots[slot]) {
      Witness w;
      Trace t(std::vector<std::string>{});
      t.append({});
      w.trace = std::move(t);
      w.bindings = {{slot + ".before", slot_snapshots[slot]},
                    {slot + ".after", inputs.instance(slot).serialize()}};
      return Verdict::violated("action '" + op.id + "' modified slot '" +
                                   slot + "' outside its frame",
                               std::move(w));
    }
  }

  const std::vector<Region> after_regions =
      inputs.instance(target_slot).regions();
  for (const Region& before : before_regions) {
    if (std::find(op.modifies.begin(), op.modifies.end(), before.name) !=
        op.modifies.end()) {
      continue;
    }
    for (const Region& after : after_regions) {
      if (after.name != before.name) continue;
      if (after.content != before.content) {
        Witness w;
        Trace t(std::vector<std::string>{});
        t.append({});
        w.trace = std::move(t);
        w.bindings = {{target_slot + "." + before.name + ".before",
                       before.content},
                      {target_slot + "." + before.name + ".after",
                       after.content}};
        return Verdict::violated("action '" + op.id + "' modified region '" +
                                     before.name +
                                     "' outside its modifies clause",
                                 std::move(w));
      }
    }
  }
  return Verdict::holds();
}

}  // namespace reqcheck::adt
