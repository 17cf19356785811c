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

#include <cstdint>
#include <span>

#include "hull3d/geometry.hpp"

namespace hull3d {

struct MovieCheckReport {
  std::size_t groups = 0;    // merged groups inspected
  std::size_t checks = 0;    // snapshot comparisons made
  std::size_t failures = 0;  // mismatching snapshots plus out-of-order logs
  std::size_t max_events_over_bound = 0;  // groups whose log exceeds 2m - 3
};

/// Builds the lower movie of x-sorted points with the bottom-up engine and,
/// after every level (or only the last when `all_levels` is false), checks
/// that each merged log replays in chronological order and matches the
/// independent 2D hull at `times` random instants. Instants are drawn per
/// check by picking one of the k + 1 gaps between the group's event times and
/// a uniform point inside it.
MovieCheckReport check_movie(std::span<const Point3> sorted, unsigned times, std::uint64_t seed,
                             bool all_levels);

}  // namespace hull3d
