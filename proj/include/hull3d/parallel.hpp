// Copyright 2026 The hull3d Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <vector>

#include "hull3d/backend.hpp"
#include "hull3d/merge.hpp"
#include "hull3d/movie.hpp"

namespace hull3d {

/// Where kernel instance `global_id` reads and writes at a level whose full
/// groups hold `data_offset` points.
struct KernelIndices {
  Index left_group = 0;   // first point of the left half
  Index right_group = 0;  // first point of the right half
  Index event_list_offset = 0;

  friend bool operator==(const KernelIndices&, const KernelIndices&) = default;
};

inline KernelIndices kernel_indices(Index global_id, Index data_offset) {
  const Index left = global_id * data_offset;
  const Index right = (left + (global_id + 1) * data_offset) / 2;
  return {left, right, left * 2};
}

/// Work of one merge level. Groups of 2^level points tile [0, n); a trailing
/// group too small to have a right half is carried over unmerged.
struct LevelPlan {
  int level = 0;
  Index group_size = 0;
  std::vector<MergeJob> jobs;
  std::vector<Index> carries;  // leftmost index of each carried group
};

/// ceil(log2 n); zero for n <= 1.
int level_count(Index n);

LevelPlan plan_level(Index n, int level);

struct LevelReport {
  const LevelPlan& plan;
  PointStore& store;
  const MovieBuffer& out;
  double ms = 0;
};

/// Called after every level, between the barrier and the buffer swap.
using LevelObserver = std::function<void(const LevelReport&)>;

struct MovieRun {
  const MovieBuffer* final_buffer = nullptr;  // log of the whole set at slot 0
  int levels = 0;
  std::vector<double> level_ms;
};

/// Bottom-up engine: trivial logs in `a`, then one data-parallel merge level
/// at a time with `a` and `b` alternating as input and output.
MovieRun build_movie(PointStore& store, MovieBuffer& a, MovieBuffer& b, ExecutionBackend& backend,
                     const LevelObserver& observer = {});

/// Same contract, driven by hull_recursive. level_ms stays empty.
MovieRun build_movie_recursive(PointStore& store, MovieBuffer& a, MovieBuffer& b);

}  // namespace hull3d
