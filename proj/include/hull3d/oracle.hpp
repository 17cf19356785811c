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

#include <array>
#include <set>
#include <span>
#include <vector>

#include "hull3d/geometry.hpp"
#include "hull3d/movie.hpp"

namespace hull3d {

/// Face as an ascending index triple, orientation dropped.
using Triple = std::array<Index, 3>;

Triple canonical(const Face& f);
std::set<Triple> canonical_faces(std::span<const Face> faces);

/// Hull facets split by the sign of the outward normal's z component.
struct FaceSet {
  std::set<Triple> lower;
  std::set<Triple> upper;

  std::set<Triple> all() const;
  std::size_t size() const noexcept { return lower.size() + upper.size(); }
};

/// O(n^4) facet enumeration: {i, j, k} is a facet iff every other point lies
/// strictly on one side of its plane. Throws degenerate_input when a decision
/// rests on a point within 1e-9 (relative) of a candidate plane.
FaceSet brute_force_hull(std::span<const Point3> points);

/// Monotone-chain lower hull of x-sorted points with distinct x. Collinear
/// interior points are dropped.
std::vector<Index> lower_hull_2d(std::span<const Projected> pts);

enum class SnapshotOutcome { match, mismatch, retry };

/// Replays the events of group [left, right) that happen before time t and
/// compares the resulting chain with lower_hull_2d of the projected group.
/// The store is restored before returning. `retry` means t lies within 1e-12
/// of an event time.
SnapshotOutcome snapshot_check(PointStore& store, EventLog log, Index left, Index right, double t);

/// Event times of a log as seen during replay from the t = -inf state.
/// Leaves the store unchanged.
std::vector<EventTime> replay_times(PointStore& store, EventLog log);

}  // namespace hull3d
