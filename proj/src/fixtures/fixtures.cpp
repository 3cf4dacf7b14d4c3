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

#include "reqcheck/fixtures/fixtures.hpp"

#include <algorithm>
#include <memory>

#include "reqcheck/fixtures/containers.hpp"

namespace reqcheck::fixtures {

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// --------------------------------------------------------------------------
// Stack

struct StackState : StateData {
  std::vector<std::int64_t> items;
  std::int64_t aux = 0;  // scratch region no reference operation touches

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<StackState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"items", join(items)}, {"aux", std::to_string(aux)}};
  }
};

ConditionDef stack_is_empty() {
  return {"is_empty",
          [](const State& s) { return s.as<StackState>().items.empty(); },
          "the stack holds no elements"};
}

ConditionDef stack_not_is_empty() {
  return {"not_is_empty",
          [](const State& s) { return !s.as<StackState>().items.empty(); },
          "the stack holds at least one element"};
}

EquivalenceDef stack_equality() {
  return {"element_equality", [](const State& a, const State& b) {
            return a.as<StackState>().items == b.as<StackState>().items;
          }};
}

ActionDef stack_push_action() {
  ActionDef a;
  a.id = "push";
  a.value_args = 1;
  a.modifies = {"items"};
  a.apply = [](State& s, const ActionInput& in) {
    s.as<StackState>().items.push_back(in.values.empty() ? 0 : in.values[0]);
  };
  return a;
}

ActionDef stack_pop_action() {
  ActionDef a;
  a.id = "pop";
  a.guard = stack_not_is_empty();
  a.modifies = {"items"};
  a.apply = [](State& s, const ActionInput&) {
    s.as<StackState>().items.pop_back();
  };
  return a;
}

MeasureDef stack_count() {
  return {"count", [](const State& s) {
            return static_cast<std::int64_t>(s.as<StackState>().items.size());
          }};
}

MeasureDef stack_top() {
  return {"top", [](const State& s) {
            const auto& items = s.as<StackState>().items;
            return items.empty() ? 0 : items.back();
          }};
}

State stack_state(std::vector<std::int64_t> items, std::int64_t aux = 0) {
  auto data = std::make_unique<StackState>();
  data->items = std::move(items);
  data->aux = aux;
  return State("stack", std::move(data));
}

std::vector<std::int64_t> random_items(Rng& rng, std::size_t max_size,
                                       std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> items(rng.index(max_size + 1));
  for (auto& v : items) v = rng.int_in(lo, hi);
  return items;
}

// --------------------------------------------------------------------------
// Queue

struct QueueState : StateData {
  std::vector<std::int64_t> items;  // front at index 0

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<QueueState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"items", join(items)}};
  }
};

State queue_state(std::vector<std::int64_t> items) {
  auto data = std::make_unique<QueueState>();
  data->items = std::move(items);
  return State("queue", std::move(data));
}

ConditionDef queue_is_empty() {
  return {"is_empty",
          [](const State& s) { return s.as<QueueState>().items.empty(); },
          "the queue holds no elements"};
}

EquivalenceDef queue_equality() {
  return {"element_equality", [](const State& a, const State& b) {
            return a.as<QueueState>().items == b.as<QueueState>().items;
          }};
}

// --------------------------------------------------------------------------
// Binary tree

struct TreeNode {
  std::int64_t item = 0;
  std::unique_ptr<TreeNode> left;
  std::unique_ptr<TreeNode> right;

  std::unique_ptr<TreeNode> clone() const {
    auto n = std::make_unique<TreeNode>();
    n->item = item;
    if (left) n->left = left->clone();
    if (right) n->right = right->clone();
    return n;
  }
};

std::string tree_text(const TreeNode* n) {
  if (n == nullptr) return "_";
  return "(" + tree_text(n->left.get()) + " " + std::to_string(n->item) + " " +
         tree_text(n->right.get()) + ")";
}

struct TreeState : StateData {
  std::unique_ptr<TreeNode> root;

  TreeState() = default;
  TreeState(const TreeState& other)
      : root(other.root ? other.root->clone() : nullptr) {}

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<TreeState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"tree", tree_text(root.get())}};
  }
};

State tree_state(std::unique_ptr<TreeNode> root) {
  auto data = std::make_unique<TreeState>();
  data->root = std::move(root);
  return State("tree", std::move(data));
}

std::unique_ptr<TreeNode> random_tree(Rng& rng, std::size_t budget,
                                      std::int64_t lo, std::int64_t hi) {
  if (budget == 0 || rng.chance(25)) return nullptr;
  auto n = std::make_unique<TreeNode>();
  n->item = rng.int_in(lo, hi);
  const std::size_t half = budget / 2;
  n->left = random_tree(rng, half, lo, hi);
  n->right = random_tree(rng, budget - 1 - half, lo, hi);
  return n;
}

void in_order_collect(const TreeNode* n, std::vector<std::int64_t>& out) {
  if (n == nullptr) return;
  in_order_collect(n->left.get(), out);
  out.push_back(n->item);
  in_order_collect(n->right.get(), out);
}

// --------------------------------------------------------------------------
// Turnstile

struct TurnstileState : StateData {
  std::int64_t coins = 0;
  std::int64_t tick = 0;
  std::vector<bool> script;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<TurnstileState>(*this);
  }
  std::vector<Region> regions() const override {
    std::string bits;
    for (bool b : script) bits += b ? '1' : '0';
    return {{"coins", std::to_string(coins)},
            {"tick", std::to_string(tick)},
            {"script", bits}};
  }
};

constexpr std::size_t kScriptLength = 64;

// --------------------------------------------------------------------------
// Calendar: a day-of-year stepper over a 365-day year.

struct CalendarState : StateData {
  std::int64_t day = 0;  // 0..364; 0 is the year's first day
  std::int64_t year = 0;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<CalendarState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"day", std::to_string(day)}, {"year", std::to_string(year)}};
  }
};

constexpr std::int64_t kYearLength = 365;

// --------------------------------------------------------------------------
// Bag, square, sort fixtures for the probe examples

struct BagState : StateData {
  std::vector<std::int64_t> items;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<BagState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"items", join(items)}};
  }
};

struct SquareState : StateData {
  std::int64_t input = 0;
  std::int64_t result = 0;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<SquareState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"input", std::to_string(input)},
            {"result", std::to_string(result)}};
  }
};

struct SortState : StateData {
  // (key, tag) pairs; sorting orders by key only.
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<SortState>(*this);
  }
  std::vector<Region> regions() const override {
    std::string text;
    for (const auto& [k, t] : pairs) {
      text += std::to_string(k) + ":" + std::to_string(t) + ",";
    }
    return {{"pairs", text}};
  }
};

}  // namespace

State make_stack_state(std::vector<std::int64_t> items) {
  return stack_state(std::move(items));
}

std::vector<std::int64_t> stack_items(const State& s) {
  return s.as<StackState>().items;
}

State make_queue_state(std::vector<std::int64_t> items) {
  return queue_state(std::move(items));
}

std::vector<std::int64_t> queue_items(const State& s) {
  return s.as<QueueState>().items;
}

std::vector<bool> turnstile_script(std::uint64_t seed, std::size_t steps) {
  Rng rng(mix_seed(seed, "turnstile-script"));
  std::vector<bool> script(std::max(steps, kScriptLength));
  for (std::size_t i = 0; i < script.size(); ++i) script[i] = rng.next() & 1;
  script.resize(steps);
  return script;
}

const std::vector<int>& calendar_equinox_days(bool three_equinox) {
  static const std::vector<int> two = {78, 264};
  static const std::vector<int> three = {78, 171, 264};
  return three_equinox ? three : two;
}

// --------------------------------------------------------------------------
// ADT bindings

adt::SuiteOps stack_ops() {
  adt::SuiteOps ops;
  ops.adt_name = "stack";
  ops.actions["push"] = stack_push_action();
  ops.actions["pop"] = stack_pop_action();
  ops.conditions["is_empty"] = stack_is_empty();
  ops.measures["count"] = stack_count();
  ops.measures["top"] = stack_top();
  ops.functions["new"] = [](const std::vector<const State*>&,
                            const std::vector<std::int64_t>&) {
    return stack_state({});
  };
  ops.equivalence = stack_equality();
  ops.make_instance = [](Rng& rng) {
    return stack_state(random_items(rng, 8, -16, 16),
                       rng.int_in(0, 7));
  };
  ops.make_equal_pair = [](Rng& rng) {
    auto items = random_items(rng, 8, -16, 16);
    State a = stack_state(items, rng.int_in(0, 7));
    State b = stack_state(std::move(items), rng.int_in(0, 7));
    return std::make_pair(std::move(a), std::move(b));
  };
  ops.shrink_instance = [](const State& s) -> std::optional<State> {
    auto items = s.as<StackState>().items;
    if (items.empty()) return std::nullopt;
    items.resize(items.size() / 2);
    return stack_state(std::move(items), s.as<StackState>().aux);
  };
  return ops;
}

adt::SuiteOps queue_ops() {
  adt::SuiteOps ops;
  ops.adt_name = "queue";

  ActionDef enqueue;
  enqueue.id = "enqueue";
  enqueue.value_args = 1;
  enqueue.modifies = {"items"};
  enqueue.apply = [](State& s, const ActionInput& in) {
    s.as<QueueState>().items.push_back(in.values.empty() ? 0 : in.values[0]);
  };
  ops.actions["enqueue"] = enqueue;

  ActionDef dequeue;
  dequeue.id = "dequeue";
  dequeue.guard = ConditionDef{
      "not_is_empty",
      [](const State& s) { return !s.as<QueueState>().items.empty(); },
      "the queue holds at least one element"};
  dequeue.modifies = {"items"};
  dequeue.apply = [](State& s, const ActionInput&) {
    auto& items = s.as<QueueState>().items;
    items.erase(items.begin());
  };
  ops.actions["dequeue"] = dequeue;

  ActionDef push_front;
  push_front.id = "push_front";
  push_front.value_args = 1;
  push_front.modifies = {"items"};
  push_front.apply = [](State& s, const ActionInput& in) {
    auto& items = s.as<QueueState>().items;
    items.insert(items.begin(), in.values.empty() ? 0 : in.values[0]);
  };
  ops.actions["push_front"] = push_front;

  ActionDef append;
  append.id = "append";
  append.takes_other = true;
  append.modifies = {"items"};
  append.apply = [](State& s, const ActionInput& in) {
    if (in.other == nullptr) return;
    const auto other = in.other->as<QueueState>().items;
    auto& items = s.as<QueueState>().items;
    items.insert(items.end(), other.begin(), other.end());
  };
  ops.actions["append"] = append;

  ops.conditions["is_empty"] = queue_is_empty();
  ops.measures["count"] = {"count", [](const State& s) {
                             return static_cast<std::int64_t>(
                                 s.as<QueueState>().items.size());
                           }};
  ops.measures["front"] = {"front", [](const State& s) {
                             const auto& items = s.as<QueueState>().items;
                             return items.empty() ? 0 : items.front();
                           }};
  ops.functions["new"] = [](const std::vector<const State*>&,
                            const std::vector<std::int64_t>&) {
    return queue_state({});
  };
  ops.equivalence = queue_equality();
  ops.make_instance = [](Rng& rng) {
    return queue_state(random_items(rng, 8, -16, 16));
  };
  ops.shrink_instance = [](const State& s) -> std::optional<State> {
    auto items = s.as<QueueState>().items;
    if (items.empty()) return std::nullopt;
    items.resize(items.size() / 2);
    return queue_state(std::move(items));
  };
  return ops;
}

adt::SuiteOps tree_ops() {
  adt::SuiteOps ops;
  ops.adt_name = "tree";

  ops.functions["leaf"] = [](const std::vector<const State*>&,
                             const std::vector<std::int64_t>&) {
    return tree_state(nullptr);
  };
  ops.functions["node"] = [](const std::vector<const State*>& args,
                             const std::vector<std::int64_t>& values) {
    if (args.size() != 2) throw resolution_error("node expects two subtrees");
    auto n = std::make_unique<TreeNode>();
    n->item = values.empty() ? 0 : values[0];
    const auto& l = args[0]->as<TreeState>();
    const auto& r = args[1]->as<TreeState>();
    if (l.root) n->left = l.root->clone();
    if (r.root) n->right = r.root->clone();
    return tree_state(std::move(n));
  };
  ops.functions["left"] = [](const std::vector<const State*>& args,
                             const std::vector<std::int64_t>&) {
    const auto& t = args.at(0)->as<TreeState>();
    return tree_state(t.root && t.root->left ? t.root->left->clone() : nullptr);
  };
  ops.functions["right"] = [](const std::vector<const State*>& args,
                              const std::vector<std::int64_t>&) {
    const auto& t = args.at(0)->as<TreeState>();
    return tree_state(t.root && t.root->right ? t.root->right->clone()
                                              : nullptr);
  };
  ops.functions["in_ord"] = [](const std::vector<const State*>& args,
                               const std::vector<std::int64_t>&) {
    std::vector<std::int64_t> items;
    in_order_collect(args.at(0)->as<TreeState>().root.get(), items);
    return queue_state(std::move(items));
  };
  ops.conditions["is_leaf"] = {
      "is_leaf",
      [](const State& s) { return s.as<TreeState>().root == nullptr; },
      "the tree is a leaf"};
  ops.measures["item"] = {"item", [](const State& s) {
                            const auto& t = s.as<TreeState>();
                            return t.root ? t.root->item : 0;
                          }};
  ops.equivalence = {"structural_equality",
                     [](const State& a, const State& b) {
                       return tree_text(a.as<TreeState>().root.get()) ==
                              tree_text(b.as<TreeState>().root.get());
                     }};
  ops.make_instance = [](Rng& rng) {
    return tree_state(random_tree(rng, 7, -16, 16));
  };
  ops.shrink_instance = [](const State& s) -> std::optional<State> {
    const auto& t = s.as<TreeState>();
    if (t.root == nullptr) return std::nullopt;
    return tree_state(t.root->left ? t.root->left->clone() : nullptr);
  };
  return ops;
}

adt::SuiteOps bag_ops(const std::string& equality) {
  adt::SuiteOps ops;
  ops.adt_name = "bag";

  // The occurrence picked among equal maxima varies from call to call.
  auto call_counter = std::make_shared<std::size_t>(0);
  ActionDef remove_max;
  remove_max.id = "remove_arbitrary_max";
  remove_max.guard = ConditionDef{
      "not_is_empty",
      [](const State& s) { return !s.as<BagState>().items.empty(); },
      "the bag holds at least one element"};
  remove_max.modifies = {"items"};
  remove_max.apply = [call_counter](State& s, const ActionInput&) {
    auto& items = s.as<BagState>().items;
    const std::int64_t max = *std::max_element(items.begin(), items.end());
    std::vector<std::size_t> occurrences;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i] == max) occurrences.push_back(i);
    }
    const std::size_t pick = (*call_counter)++ % occurrences.size();
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(occurrences[pick]));
  };
  ops.actions["remove_arbitrary_max"] = remove_max;

  ops.conditions["is_empty"] = {
      "is_empty",
      [](const State& s) { return s.as<BagState>().items.empty(); },
      "the bag holds no elements"};

  if (equality == "multiset") {
    ops.equivalence = {"multiset_equality",
                       [](const State& a, const State& b) {
                         auto xs = a.as<BagState>().items;
                         auto ys = b.as<BagState>().items;
                         std::sort(xs.begin(), xs.end());
                         std::sort(ys.begin(), ys.end());
                         return xs == ys;
                       }};
  } else {
    ops.equivalence = {"sequence_equality",
                       [](const State& a, const State& b) {
                         return a.as<BagState>().items ==
                                b.as<BagState>().items;
                       }};
  }

  ops.make_instance = [](Rng& rng) {
    auto data = std::make_unique<BagState>();
    // Small value range so duplicated maxima are common.
    data->items.resize(2 + rng.index(5));
    for (auto& v : data->items) v = rng.int_in(0, 3);
    return State("bag", std::move(data));
  };
  return ops;
}

// --------------------------------------------------------------------------
// Mutants: one seeded fault each.

std::vector<std::pair<std::string, adt::SuiteOps>> stack_mutants() {
  std::vector<std::pair<std::string, adt::SuiteOps>> out;

  {
    adt::SuiteOps ops = stack_ops();
    ops.adt_name = "stack_pop_noop";
    ops.actions["pop"].apply = [](State&, const ActionInput&) {};
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = stack_ops();
    ops.adt_name = "stack_push_double";
    ops.actions["push"].apply = [](State& s, const ActionInput& in) {
      const std::int64_t v = in.values.empty() ? 0 : in.values[0];
      s.as<StackState>().items.push_back(v);
      s.as<StackState>().items.push_back(v);
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = stack_ops();
    ops.adt_name = "stack_top_bottom";
    ops.measures["top"] = {"top", [](const State& s) {
                             const auto& items = s.as<StackState>().items;
                             return items.empty() ? 0 : items.front();
                           }};
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = stack_ops();
    ops.adt_name = "stack_count_padded";
    ops.measures["count"] = {"count", [](const State& s) {
                               return static_cast<std::int64_t>(
                                   s.as<StackState>().items.size() + 1);
                             }};
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = stack_ops();
    ops.adt_name = "stack_push_marks_aux";
    ops.actions["push"].apply = [](State& s, const ActionInput& in) {
      s.as<StackState>().items.push_back(in.values.empty() ? 0 : in.values[0]);
      s.as<StackState>().aux += 1;  // outside the declared frame
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = stack_ops();
    ops.adt_name = "stack_push_salted";
    // Behavior depends on the aux field, which element equality ignores.
    ops.actions["push"].apply = [](State& s, const ActionInput& in) {
      auto& data = s.as<StackState>();
      data.items.push_back((in.values.empty() ? 0 : in.values[0]) +
                           (data.aux & 1));
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  return out;
}

std::vector<std::pair<std::string, adt::SuiteOps>> queue_mutants() {
  std::vector<std::pair<std::string, adt::SuiteOps>> out;

  {
    adt::SuiteOps ops = queue_ops();
    ops.adt_name = "queue_append_prepends";
    ops.actions["append"].apply = [](State& s, const ActionInput& in) {
      if (in.other == nullptr) return;
      const auto other = in.other->as<QueueState>().items;
      auto& items = s.as<QueueState>().items;
      items.insert(items.begin(), other.begin(), other.end());
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = queue_ops();
    ops.adt_name = "queue_dequeue_back";
    ops.actions["dequeue"].apply = [](State& s, const ActionInput&) {
      s.as<QueueState>().items.pop_back();
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = queue_ops();
    ops.adt_name = "queue_enqueue_front";
    ops.actions["enqueue"].apply = [](State& s, const ActionInput& in) {
      auto& items = s.as<QueueState>().items;
      items.insert(items.begin(), in.values.empty() ? 0 : in.values[0]);
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = queue_ops();
    ops.adt_name = "queue_append_noop";
    ops.actions["append"].apply = [](State&, const ActionInput&) {};
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = queue_ops();
    ops.adt_name = "queue_append_double";
    ops.actions["append"].apply = [](State& s, const ActionInput& in) {
      if (in.other == nullptr) return;
      const auto other = in.other->as<QueueState>().items;
      auto& items = s.as<QueueState>().items;
      items.insert(items.end(), other.begin(), other.end());
      items.insert(items.end(), other.begin(), other.end());
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = queue_ops();
    ops.adt_name = "queue_front_returns_back";
    ops.measures["front"] = {"front", [](const State& s) {
                               const auto& items = s.as<QueueState>().items;
                               return items.empty() ? 0 : items.back();
                             }};
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  return out;
}

std::vector<std::pair<std::string, adt::SuiteOps>> tree_mutants() {
  std::vector<std::pair<std::string, adt::SuiteOps>> out;

  {
    adt::SuiteOps ops = tree_ops();
    ops.adt_name = "tree_in_ord_preorder";
    ops.functions["in_ord"] = [](const std::vector<const State*>& args,
                                 const std::vector<std::int64_t>&) {
      std::vector<std::int64_t> items;
      const std::function<void(const TreeNode*)> walk =
          [&](const TreeNode* n) {
            if (n == nullptr) return;
            items.push_back(n->item);
            walk(n->left.get());
            walk(n->right.get());
          };
      walk(args.at(0)->as<TreeState>().root.get());
      return queue_state(std::move(items));
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = tree_ops();
    ops.adt_name = "tree_in_ord_reversed";
    ops.functions["in_ord"] = [](const std::vector<const State*>& args,
                                 const std::vector<std::int64_t>&) {
      std::vector<std::int64_t> items;
      in_order_collect(args.at(0)->as<TreeState>().root.get(), items);
      std::reverse(items.begin(), items.end());
      return queue_state(std::move(items));
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = tree_ops();
    ops.adt_name = "tree_left_returns_right";
    ops.functions["left"] = [](const std::vector<const State*>& args,
                               const std::vector<std::int64_t>&) {
      const auto& t = args.at(0)->as<TreeState>();
      return tree_state(t.root && t.root->right ? t.root->right->clone()
                                                : nullptr);
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = tree_ops();
    ops.adt_name = "tree_item_negated";
    ops.measures["item"] = {"item", [](const State& s) {
                              const auto& t = s.as<TreeState>();
                              return t.root ? -t.root->item : 0;
                            }};
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  {
    adt::SuiteOps ops = tree_ops();
    ops.adt_name = "tree_node_drops_left";
    ops.functions["node"] = [](const std::vector<const State*>& args,
                               const std::vector<std::int64_t>& values) {
      auto n = std::make_unique<TreeNode>();
      n->item = values.empty() ? 0 : values[0];
      const auto& r = args.at(1)->as<TreeState>();
      if (r.root) n->right = r.root->clone();
      return tree_state(std::move(n));
    };
    out.emplace_back(ops.adt_name, std::move(ops));
  }
  return out;
}

// --------------------------------------------------------------------------
// Divergence fixtures

DivergencePair square_divergence() {
  DivergencePair d;
  d.impl_a.id = "square_as_product";
  d.impl_a.modifies = {"result"};
  d.impl_a.apply = [](State& s, const ActionInput&) {
    auto& data = s.as<SquareState>();
    data.result = data.input * data.input;
  };
  d.impl_b.id = "square_as_zero";
  d.impl_b.modifies = {"result"};
  d.impl_b.apply = [](State& s, const ActionInput&) {
    s.as<SquareState>().result = 0;
  };
  d.contract = [](const State& s) { return s.as<SquareState>().result >= 0; };
  d.eq = {"result_equality", [](const State& a, const State& b) {
            return a.as<SquareState>().result == b.as<SquareState>().result;
          }};
  d.make_input = [](Rng& rng) {
    auto data = std::make_unique<SquareState>();
    data->input = rng.int_in(-50, 50);
    return State("square", std::move(data));
  };
  return d;
}

DivergencePair sort_divergence() {
  DivergencePair d;
  d.impl_a.id = "sort_stable";
  d.impl_a.modifies = {"pairs"};
  d.impl_a.apply = [](State& s, const ActionInput&) {
    auto& pairs = s.as<SortState>().pairs;
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
  };
  d.impl_b.id = "sort_unstable";
  d.impl_b.modifies = {"pairs"};
  d.impl_b.apply = [](State& s, const ActionInput&) {
    auto& pairs = s.as<SortState>().pairs;
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
    // Reverse every run of equal keys: still sorted by key.
    std::size_t i = 0;
    while (i < pairs.size()) {
      std::size_t j = i;
      while (j < pairs.size() && pairs[j].first == pairs[i].first) ++j;
      std::reverse(pairs.begin() + static_cast<std::ptrdiff_t>(i),
                   pairs.begin() + static_cast<std::ptrdiff_t>(j));
      i = j;
    }
  };
  d.contract = [](const State& s) {
    const auto& pairs = s.as<SortState>().pairs;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i - 1].first > pairs[i].first) return false;
    }
    return true;
  };
  d.eq = {"sequence_equality", [](const State& a, const State& b) {
            return a.as<SortState>().pairs == b.as<SortState>().pairs;
          }};
  d.make_input = [](Rng& rng) {
    auto data = std::make_unique<SortState>();
    data->pairs.resize(3 + rng.index(6));
    std::int64_t tag = 0;
    for (auto& p : data->pairs) {
      p.first = rng.int_in(0, 3);  // duplicate keys are likely
      p.second = tag++;
    }
    return State("sortable", std::move(data));
  };
  return d;
}

// --------------------------------------------------------------------------
// System models

namespace {

ModelRef stack_model(std::uint64_t build_seed,
                     const adt::SuiteOps& ops, const std::string& name) {
  auto m = std::make_shared<SystemModel>(name);
  (void)build_seed;
  m->set_init([](std::uint64_t seed) {
    Rng rng(mix_seed(seed, "stack-init"));
    std::vector<std::int64_t> items(seed % 13);
    for (auto& v : items) v = rng.int_in(-99, 99);
    return stack_state(std::move(items));
  });
  const ActionDef pop = ops.action("pop");
  m->set_main_step([pop](State& s) {
    if (!s.as<StackState>().items.empty()) pop.apply(s, {});
  });
  m->add_condition(stack_is_empty());
  m->add_condition(stack_not_is_empty());
  m->add_action(ops.action("push"));
  m->add_action(ops.action("pop"));
  m->add_measure(ops.measure("count"));
  m->add_measure(ops.measure("top"));
  m->add_equivalence(ops.equivalence);
  return m;
}

ModelRef turnstile_model(std::uint64_t build_seed) {
  auto m = std::make_shared<SystemModel>("turnstile");
  (void)build_seed;
  m->set_init([](std::uint64_t seed) {
    auto data = std::make_unique<TurnstileState>();
    Rng rng(mix_seed(seed, "turnstile-script"));
    data->script.resize(kScriptLength);
    for (std::size_t i = 0; i < kScriptLength; ++i) {
      data->script[i] = rng.next() & 1;
    }
    return State("turnstile", std::move(data));
  });
  m->set_main_step([](State& s) {
    auto& data = s.as<TurnstileState>();
    const bool insert =
        data.script[static_cast<std::size_t>(data.tick) % kScriptLength];
    if (insert) {
      data.coins += 1;
    } else if (data.coins > 0) {
      data.coins -= 1;  // a passage spends one coin
    }
    data.tick += 1;
  });
  m->add_condition({"coins_positive",
                    [](const State& s) {
                      return s.as<TurnstileState>().coins > 0;
                    },
                    "at least one coin is banked"});
  m->add_condition({"is_locked",
                    [](const State& s) {
                      return s.as<TurnstileState>().coins == 0;
                    },
                    "the turnstile is locked"});
  m->add_condition({"coins_negative",
                    [](const State& s) {
                      return s.as<TurnstileState>().coins < 0;
                    },
                    "the coin count is negative"});

  ActionDef insert_coin;
  insert_coin.id = "insert_coin";
  insert_coin.modifies = {"coins"};
  insert_coin.apply = [](State& s, const ActionInput&) {
    s.as<TurnstileState>().coins += 1;
  };
  m->add_action(insert_coin);

  ActionDef push_arm;
  push_arm.id = "push_arm";
  push_arm.guard = ConditionDef{"coins_positive",
                                [](const State& s) {
                                  return s.as<TurnstileState>().coins > 0;
                                },
                                "at least one coin is banked"};
  push_arm.modifies = {"coins"};
  push_arm.apply = [](State& s, const ActionInput&) {
    s.as<TurnstileState>().coins -= 1;
  };
  m->add_action(push_arm);

  m->add_measure({"coins", [](const State& s) {
                    return s.as<TurnstileState>().coins;
                  }});
  return m;
}

ModelRef calendar_model(bool three_equinox) {
  auto m = std::make_shared<SystemModel>(three_equinox ? "calendar_3eq"
                                                       : "calendar");
  const std::string tag = m->name();
  m->set_init([tag](std::uint64_t) {
    auto data = std::make_unique<CalendarState>();
    return State(tag, std::move(data));
  });
  m->set_main_step([](State& s) {
    auto& data = s.as<CalendarState>();
    data.day += 1;
    if (data.day >= kYearLength) {
      data.day = 0;
      data.year += 1;
    }
  });
  m->add_condition({"year_beginning",
                    [](const State& s) {
                      return s.as<CalendarState>().day == 0;
                    },
                    "the first day of the year"});
  m->add_condition({"year_end",
                    [](const State& s) {
                      return s.as<CalendarState>().day == kYearLength - 1;
                    },
                    "the last day of the year"});
  const std::vector<int>& days = calendar_equinox_days(three_equinox);
  m->add_condition({"equinox",
                    [days](const State& s) {
                      const auto day = s.as<CalendarState>().day;
                      return std::find(days.begin(), days.end(), day) !=
                             days.end();
                    },
                    "an equinox day"});

  ActionDef advance;
  advance.id = "advance_day";
  advance.modifies = {"day", "year"};
  advance.apply = [](State& s, const ActionInput&) {
    auto& data = s.as<CalendarState>();
    data.day += 1;
    if (data.day >= kYearLength) {
      data.day = 0;
      data.year += 1;
    }
  };
  m->add_action(advance);

  m->add_measure({"day_of_year", [](const State& s) {
                    return s.as<CalendarState>().day;
                  }});
  return m;
}

// Container variants exposed as single-action models.
ModelRef container_model(const std::string& fixture_name,
                         const std::string& variant_name,
                         std::uint64_t seed) {
  for (const auto& variant : flawed_container_library(seed)) {
    if (variant.name != variant_name) continue;
    auto m = std::make_shared<SystemModel>(fixture_name);
    const auto ops = variant.ops;
    m->set_init([ops, fixture_name](std::uint64_t s) {
      Rng rng(mix_seed(s, fixture_name));
      return ops.make_instance(rng);
    });
    m->set_main_step([](State&) {});
    m->add_action(ops.action("copy"));
    m->add_equivalence(ops.equivalence);
    return m;
  }
  throw resolution_error("unknown container variant: " + variant_name);
}

}  // namespace

ModelRef build_fixture(const std::string& name, std::uint64_t seed) {
  if (name == "stack") return stack_model(seed, stack_ops(), "stack");
  if (name == "turnstile") return turnstile_model(seed);
  if (name == "calendar") return calendar_model(false);
  if (name == "calendar_3eq") return calendar_model(true);
  if (name == "array2_correct") {
    return container_model(name, "grid2d", seed);
  }
  if (name == "array2_wipe_on_alias") {
    return container_model(name, "grid2d_alias_wipe", seed);
  }
  if (name == "linked_queue_alias_bug") {
    return container_model(name, "linked_queue_clear_first", seed);
  }
  for (const auto& [mutant_name, ops] : stack_mutants()) {
    if (mutant_name == name) return stack_model(seed, ops, name);
  }
  for (const auto& [mutant_name, ops] : queue_mutants()) {
    if (mutant_name != name) continue;
    auto m = std::make_shared<SystemModel>(name);
    const auto captured = ops;
    m->set_init([](std::uint64_t s) {
      Rng rng(mix_seed(s, "queue-init"));
      std::vector<std::int64_t> items(s % 13);
      for (auto& v : items) v = rng.int_in(-99, 99);
      return queue_state(std::move(items));
    });
    const ActionDef dequeue = captured.action("dequeue");
    m->set_main_step([dequeue](State& s) {
      if (!s.as<QueueState>().items.empty()) dequeue.apply(s, {});
    });
    m->add_condition(captured.condition("is_empty"));
    m->add_action(captured.action("enqueue"));
    m->add_action(captured.action("dequeue"));
    m->add_measure(captured.measure("count"));
    m->add_equivalence(captured.equivalence);
    return m;
  }
  throw resolution_error("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names = {
      "stack",          "turnstile",
      "calendar",       "calendar_3eq",
      "array2_correct", "array2_wipe_on_alias",
      "linked_queue_alias_bug"};
  for (const auto& [name, ops] : stack_mutants()) names.push_back(name);
  for (const auto& [name, ops] : queue_mutants()) names.push_back(name);
  return names;
}

std::vector<std::string> reference_fixture_names() {
  return {"stack", "turnstile", "calendar", "calendar_3eq", "array2_correct"};
}

}  // namespace reqcheck::fixtures
