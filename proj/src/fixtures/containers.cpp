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

#include "reqcheck/fixtures/containers.hpp"

#include <algorithm>
#include <memory>

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

// Flat sequence container; `hidden` is capacity-like state the declared
// equality does not see.
struct SeqState : StateData {
  std::vector<std::int64_t> items;
  std::int64_t hidden = 0;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<SeqState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"items", join(items)}, {"hidden", std::to_string(hidden)}};
  }
};

struct GridState : StateData {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::int64_t> cells;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<GridState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"dims", std::to_string(rows) + "x" + std::to_string(cols)},
            {"cells", join(cells)}};
  }
};

struct IterState : StateData {
  std::vector<std::int64_t> data;
  std::int64_t cursor = 0;
  std::int64_t hidden = 0;

  std::unique_ptr<StateData> clone() const override {
    return std::make_unique<IterState>(*this);
  }
  std::vector<Region> regions() const override {
    return {{"data", join(data)},
            {"cursor", std::to_string(cursor)},
            {"hidden", std::to_string(hidden)}};
  }
};

EquivalenceDef seq_equality() {
  return {"element_equality", [](const State& a, const State& b) {
            return a.as<SeqState>().items == b.as<SeqState>().items;
          }};
}

EquivalenceDef grid_equality() {
  return {"cell_equality", [](const State& a, const State& b) {
            const auto& x = a.as<GridState>();
            const auto& y = b.as<GridState>();
            return x.rows == y.rows && x.cols == y.cols && x.cells == y.cells;
          }};
}

EquivalenceDef iter_equality() {
  return {"position_equality", [](const State& a, const State& b) {
            const auto& x = a.as<IterState>();
            const auto& y = b.as<IterState>();
            return x.data == y.data && x.cursor == y.cursor;
          }};
}

using Canonicalize = std::function<void(std::vector<std::int64_t>&)>;

ContainerVariant seq_variant(
    const std::string& name, bool fault,
    std::function<void(State&, const ActionInput&)> copy_apply,
    std::uint64_t salt, const Canonicalize& canonical = nullptr) {
  ContainerVariant v;
  v.name = name;
  v.seeded_fault = fault;
  v.ops.adt_name = name;

  ActionDef copy;
  copy.id = "copy";
  copy.takes_other = true;
  copy.modifies = {"items"};
  copy.apply = std::move(copy_apply);
  v.ops.actions["copy"] = copy;

  v.ops.conditions["is_empty"] = {
      "is_empty",
      [](const State& s) { return s.as<SeqState>().items.empty(); },
      "the container holds no elements"};
  v.ops.equivalence = seq_equality();
  v.ops.make_instance = [name, salt, canonical](Rng& rng) {
    auto data = std::make_unique<SeqState>();
    data->items.resize(1 + rng.index(7));
    for (auto& x : data->items) x = rng.int_in(-9, 9);
    if (canonical) canonical(data->items);
    data->hidden = rng.int_in(1, 8) + static_cast<std::int64_t>(salt % 2);
    return State(name, std::move(data));
  };
  v.ops.make_equal_pair = [name, salt, canonical](Rng& rng) {
    auto data = std::make_unique<SeqState>();
    data->items.resize(1 + rng.index(7));
    for (auto& x : data->items) x = rng.int_in(-9, 9);
    if (canonical) canonical(data->items);
    auto other = std::make_unique<SeqState>(*data);
    data->hidden = rng.int_in(1, 8) + static_cast<std::int64_t>(salt % 2);
    other->hidden = rng.int_in(1, 8) + static_cast<std::int64_t>(salt % 2);
    return std::make_pair(State(name, std::move(data)),
                          State(name, std::move(other)));
  };
  return v;
}

ContainerVariant grid_variant(
    const std::string& name, bool fault,
    std::function<void(State&, const ActionInput&)> copy_apply) {
  ContainerVariant v;
  v.name = name;
  v.seeded_fault = fault;
  v.ops.adt_name = name;

  ActionDef copy;
  copy.id = "copy";
  copy.takes_other = true;
  copy.modifies = {"dims", "cells"};
  copy.apply = std::move(copy_apply);
  v.ops.actions["copy"] = copy;

  v.ops.equivalence = grid_equality();
  v.ops.make_instance = [name](Rng& rng) {
    auto data = std::make_unique<GridState>();
    data->rows = rng.int_in(1, 3);
    data->cols = rng.int_in(1, 3);
    data->cells.resize(static_cast<std::size_t>(data->rows * data->cols));
    for (auto& c : data->cells) c = rng.int_in(-9, 9);
    return State(name, std::move(data));
  };
  return v;
}

ContainerVariant iter_variant(
    const std::string& name, bool fault,
    std::function<void(State&, const ActionInput&)> copy_apply) {
  ContainerVariant v;
  v.name = name;
  v.seeded_fault = fault;
  v.ops.adt_name = name;

  ActionDef copy;
  copy.id = "copy";
  copy.takes_other = true;
  copy.modifies = {"data", "cursor"};
  copy.apply = std::move(copy_apply);
  v.ops.actions["copy"] = copy;

  v.ops.equivalence = iter_equality();
  v.ops.make_instance = [name](Rng& rng) {
    auto data = std::make_unique<IterState>();
    data->data.resize(2 + rng.index(6));
    for (auto& x : data->data) x = rng.int_in(-9, 9);
    data->cursor = rng.int_in(0, static_cast<std::int64_t>(data->data.size()));
    data->hidden = rng.int_in(0, 3);
    return State(name, std::move(data));
  };
  v.ops.make_equal_pair = [name](Rng& rng) {
    auto data = std::make_unique<IterState>();
    data->data.resize(2 + rng.index(6));
    for (auto& x : data->data) x = rng.int_in(-9, 9);
    data->cursor = rng.int_in(0, static_cast<std::int64_t>(data->data.size()));
    auto other = std::make_unique<IterState>(*data);
    data->hidden = rng.int_in(0, 3);
    other->hidden = rng.int_in(0, 3);
    return std::make_pair(State(name, std::move(data)),
                          State(name, std::move(other)));
  };
  return v;
}

// Straightforward correct copy: snapshot the source first, then overwrite.
void seq_copy_via_snapshot(State& s, const ActionInput& in) {
  if (in.other == nullptr) return;
  const auto snapshot = in.other->as<SeqState>().items;
  s.as<SeqState>().items = snapshot;
}

void grid_copy_via_snapshot(State& s, const ActionInput& in) {
  if (in.other == nullptr) return;
  const auto& src = in.other->as<GridState>();
  const auto rows = src.rows;
  const auto cols = src.cols;
  const auto cells = src.cells;
  auto& dst = s.as<GridState>();
  dst.rows = rows;
  dst.cols = cols;
  dst.cells = cells;
}

void iter_copy_via_snapshot(State& s, const ActionInput& in) {
  if (in.other == nullptr) return;
  const auto data = in.other->as<IterState>().data;
  const auto cursor = in.other->as<IterState>().cursor;
  auto& dst = s.as<IterState>();
  dst.data = data;
  dst.cursor = cursor;
}

}  // namespace

std::vector<ContainerVariant> flawed_container_library(std::uint64_t seed) {
  std::vector<ContainerVariant> variants;

  // -- clean grid copies ----------------------------------------------------
  variants.push_back(grid_variant("grid2d", false, grid_copy_via_snapshot));

  variants.push_back(grid_variant(
      "matrix_block", false, [](State& s, const ActionInput& in) {
        if (in.other == nullptr || in.other == &s) return;  // alias: no-op
        const auto& src = in.other->as<GridState>();
        auto& dst = s.as<GridState>();
        dst.rows = src.rows;
        dst.cols = src.cols;
        dst.cells.assign(src.cells.begin(), src.cells.end());
      }));

  // faulty: an explicit aliasing branch wipes the current object's data.
  variants.push_back(grid_variant(
      "grid2d_alias_wipe", true, [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        auto& dst = s.as<GridState>();
        if (in.other != &s) {
          const auto& src = in.other->as<GridState>();
          dst.rows = src.rows;
          dst.cols = src.cols;
          dst.cells = src.cells;
        } else {
          dst.cells.clear();
          dst.rows = 0;
          dst.cols = 0;
        }
      }));

  // -- clean sequence copies ------------------------------------------------
  for (const char* name : {"vector_array", "linked_queue", "linked_stack",
                           "ring_buffer", "deque_buffer"}) {
    variants.push_back(seq_variant(name, false, seq_copy_via_snapshot, seed));
  }

  // These store canonical forms, and their generators respect that.
  variants.push_back(seq_variant(
      "sorted_bag", false,
      [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        auto snapshot = in.other->as<SeqState>().items;
        std::sort(snapshot.begin(), snapshot.end());
        s.as<SeqState>().items = std::move(snapshot);
      },
      seed,
      [](std::vector<std::int64_t>& items) {
        std::sort(items.begin(), items.end());
      }));

  variants.push_back(seq_variant(
      "hash_set", false,
      [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        auto snapshot = in.other->as<SeqState>().items;
        std::sort(snapshot.begin(), snapshot.end());
        snapshot.erase(std::unique(snapshot.begin(), snapshot.end()),
                       snapshot.end());
        s.as<SeqState>().items = std::move(snapshot);
      },
      seed,
      [](std::vector<std::int64_t>& items) {
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
      }));

  // faulty: clears the target before reading the source; a self-copy reads
  // the already-cleared object and ends up empty.
  variants.push_back(seq_variant(
      "linked_queue_clear_first", true,
      [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        auto& dst = s.as<SeqState>().items;
        dst.clear();
        const auto& src = in.other->as<SeqState>().items;
        for (const auto x : src) dst.push_back(x);
      },
      seed));

  // faulty: copies at most `hidden` elements; equal targets with different
  // hidden capacities end up different.
  variants.push_back(seq_variant(
      "linked_stack_hidden_cap", true,
      [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        const auto src = in.other->as<SeqState>().items;
        auto& dst = s.as<SeqState>();
        const auto n =
            std::min<std::size_t>(src.size(),
                                  static_cast<std::size_t>(
                                      std::max<std::int64_t>(dst.hidden, 0)));
        dst.items.assign(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(n));
      },
      seed));

  // faulty: clear-then-insert set rebuild; self-copy drains itself.
  variants.push_back(seq_variant(
      "hash_set_clear_first", true,
      [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        auto& dst = s.as<SeqState>().items;
        dst.clear();
        const auto& src = in.other->as<SeqState>().items;
        for (const auto x : src) {
          if (std::find(dst.begin(), dst.end(), x) == dst.end()) {
            dst.push_back(x);
          }
        }
        std::sort(dst.begin(), dst.end());
      },
      seed,
      [](std::vector<std::int64_t>& items) {
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
      }));

  // -- iterator copies --------------------------------------------------
  variants.push_back(iter_variant("array_iter", false, iter_copy_via_snapshot));
  variants.push_back(iter_variant("list_iter", false, iter_copy_via_snapshot));

  // faulty: resets the cursor before reading it back from the source; under
  // aliasing the source cursor is already zeroed.
  variants.push_back(iter_variant(
      "array_iter_cursor_reset", true, [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        auto& dst = s.as<IterState>();
        dst.cursor = 0;
        dst.data = in.other->as<IterState>().data;
        dst.cursor = std::min<std::int64_t>(
            in.other->as<IterState>().cursor,
            static_cast<std::int64_t>(dst.data.size()));
      }));

  // faulty: adds its own hidden offset when restoring the cursor; equal
  // iterators with different offsets diverge.
  variants.push_back(iter_variant(
      "list_iter_stale_offset", true, [](State& s, const ActionInput& in) {
        if (in.other == nullptr) return;
        const auto data = in.other->as<IterState>().data;
        const auto cursor = in.other->as<IterState>().cursor;
        auto& dst = s.as<IterState>();
        dst.data = data;
        dst.cursor = cursor + dst.hidden;
      }));

  return variants;
}

}  // namespace reqcheck::fixtures
