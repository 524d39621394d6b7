#pragma once

#include <string>
#include <vector>

#include "erdos/model.hpp"
#include "erdos/reducer.hpp"

namespace erdos {

struct WeightEntry {
  int value = 0;            // i in [2, x_n]
  std::vector<int> nu;      // nu_{p_j}(i) for each prime of the instance
  int omega = 0;            // sum of nu
};

struct SearchSpace {
  Instance instance;
  BoundSet bounds;
  std::vector<WeightEntry> weights;  // one entry per value 2..x_n
};

SearchSpace make_search_space(const Instance& inst, const BoundSet& bounds);

// Loop schedule, outermost first. Default order: descending omega, ties by
// descending value; pinned_order reproduces the published x_n = 10 nest.
struct LoopPlan {
  std::vector<int> order;  // values i
};

LoopPlan loop_plan(const SearchSpace& space, bool pinned_order = false);

struct WorkSlice {
  std::vector<long long> outer_values;  // values of the outermost variable
};

// Round-robin partition of the outermost loop range; slices are disjoint and
// their union restores the full search.
std::vector<WorkSlice> partition_work(const SearchSpace& space, int shards,
                                      bool pinned_order = false);

struct EnumOptions {
  int shards = 1;
  int threads = 0;  // 0: one thread per shard, capped at hardware_concurrency
  std::string checkpoint_path;
  bool pinned_order = false;
};

// All solutions of the counts-form equation with a_{x_n} >= 1 under the
// bound set, canonically sorted. Pure except for the optional checkpoint file.
std::vector<Solution> enumerate_solutions(const SearchSpace& space, const EnumOptions& opts = {});

// x_n = 1: the trivial solution; x_n = 2: the n = 1 tuple [1,0,1]
// (see cmd-line docs for why it is reported).
std::vector<Solution> enumerate_trivial(int x_n);

}  // namespace erdos
