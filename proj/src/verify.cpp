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

#include "hull3d/verify.hpp"

#include <cmath>
#include <random>

#include "hull3d/oracle.hpp"
#include "hull3d/parallel.hpp"

namespace hull3d {

namespace {

double sample_time(std::span<const EventTime> times, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (times.empty()) return -10.0 + 20.0 * unit(rng);
  const std::size_t gap = std::uniform_int_distribution<std::size_t>(0, times.size())(rng);
  const double lo = gap == 0 ? times.front() - 1.0 - std::abs(times.front()) : times[gap - 1];
  const double hi =
      gap == times.size() ? times.back() + 1.0 + std::abs(times.back()) : times[gap];
  return lo + (hi - lo) * unit(rng);
}

}  // namespace

MovieCheckReport check_movie(std::span<const Point3> sorted, unsigned times, std::uint64_t seed,
                             bool all_levels) {
  PointStore store(sorted);
  MovieBuffer a(store.size());
  MovieBuffer b(store.size());
  SequentialBackend backend;
  std::mt19937_64 rng(seed);
  MovieCheckReport report;
  const int last = level_count(store.size());

  build_movie(store, a, b, backend, [&](const LevelReport& level) {
    if (!all_levels && level.plan.level != last) return;
    for (const MergeJob& job : level.plan.jobs) {
      ++report.groups;
      const EventLog log = log_at(level.out, job.left, job.right);
      if (job.size() >= 3 && log.size() > static_cast<std::size_t>(2 * job.size() - 3)) {
        ++report.max_events_over_bound;
      }
      const std::vector<EventTime> when = replay_times(level.store, log);
      for (std::size_t e = 1; e < when.size(); ++e) {
        if (!(when[e - 1] < when[e])) {
          ++report.failures;
          break;
        }
      }
      for (unsigned c = 0; c < times; ++c) {
        SnapshotOutcome outcome = SnapshotOutcome::retry;
        for (int attempt = 0; attempt < 32 && outcome == SnapshotOutcome::retry; ++attempt) {
          outcome = snapshot_check(level.store, log, job.left, job.right, sample_time(when, rng));
        }
        ++report.checks;
        if (outcome != SnapshotOutcome::match) ++report.failures;
      }
    }
  });
  return report;
}

}  // namespace hull3d
