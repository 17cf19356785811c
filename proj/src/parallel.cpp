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

#include "hull3d/parallel.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <utility>

#include "hull3d/error.hpp"
#include "hull3d/serial.hpp"

namespace hull3d {

int level_count(Index n) { return recursion_depth(n); }

LevelPlan plan_level(Index n, int level) {
  if (n < 1 || level < 1 || level > level_count(n)) {
    throw Error(ErrorCode::invalid_argument, "level out of range");
  }
  LevelPlan plan;
  plan.level = level;
  plan.group_size = Index{1} << level;
  const Index half = plan.group_size / 2;
  for (Index g = 0; g * plan.group_size < n; ++g) {
    const KernelIndices k = kernel_indices(g, plan.group_size);
    const Index right = std::min(k.left_group + plan.group_size, n);
    if (right - k.left_group > half) {
      plan.jobs.push_back({k.left_group, k.right_group, right});
    } else {
      plan.carries.push_back(k.left_group);
    }
  }
  return plan;
}

MovieRun build_movie(PointStore& store, MovieBuffer& a, MovieBuffer& b, ExecutionBackend& backend,
                     const LevelObserver& observer) {
  const Index n = store.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "no points");
  const auto need = 2 * static_cast<std::size_t>(n);
  if (a.capacity() < need || b.capacity() < need) {
    throw Error(ErrorCode::invalid_argument, "movie buffer smaller than 2n");
  }

  init_base_logs(store, a);
  MovieBuffer* in = &a;
  MovieBuffer* out = &b;
  MovieRun run;
  run.levels = level_count(n);
  for (int level = 1; level <= run.levels; ++level) {
    const auto start = std::chrono::steady_clock::now();
    const LevelPlan plan = plan_level(n, level);
    backend.run(plan.jobs.size(), [&](std::size_t id) {
      merge_movies(store, in->slots(), out->slots(), plan.jobs[id]);
    });
    for (const Index left : plan.carries) {
      const EventLog log = log_at(*in, left, n);
      const auto offset = 2 * static_cast<std::size_t>(left);
      std::copy(log.begin(), log.end(), out->slots().begin() + offset);
      (*out)[offset + log.size()] = kNil;
    }
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    run.level_ms.push_back(ms.count());
    if (observer) observer(LevelReport{plan, store, *out, ms.count()});
    std::swap(in, out);
  }
  run.final_buffer = in;
  return run;
}

MovieRun build_movie_recursive(PointStore& store, MovieBuffer& a, MovieBuffer& b) {
  const Index n = store.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "no points");
  const auto need = 2 * static_cast<std::size_t>(n);
  if (a.capacity() < need || b.capacity() < need) {
    throw Error(ErrorCode::invalid_argument, "movie buffer smaller than 2n");
  }
  hull_recursive(store, 0, n, a, b);
  return {&a, recursion_depth(n), {}};
}

}  // namespace hull3d
