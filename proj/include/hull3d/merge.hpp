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

#include <bit>
#include <span>

#include "hull3d/movie.hpp"

namespace hull3d {

/// One pairwise merge: left group [left, split), right group [split, right).
/// Reads logs at slots 2*left and 2*split of the input buffer, writes the
/// merged log at slot 2*left of the output buffer.
struct MergeJob {
  Index left = 0;
  Index split = 0;
  Index right = 0;

  Index size() const noexcept { return right - left; }
  friend bool operator==(const MergeJob&, const MergeJob&) = default;
};

/// Split point of the group [lo, hi) in the canonical merge tree: half of the
/// enclosing power of two. Equals the midpoint when hi - lo is a power of two.
inline Index merge_split(Index lo, Index hi) {
  const auto m = static_cast<std::uint32_t>(hi - lo);
  return lo + static_cast<Index>(std::bit_ceil(m) / 2);
}

struct Bridge {
  Index u = kNil;
  Index v = kNil;

  friend bool operator==(const Bridge&, const Bridge&) = default;
};

/// Common lower tangent of two adjacent chains in their t = -inf state,
/// starting from the facing extreme points u0 (left) and v0 (right). Throws
/// after more than `max_steps` moves.
Bridge find_initial_bridge(const PointStore& store, Index u0, Index v0, Index max_steps);

/// Merge two adjacent kinetic movies. On return the chain over [left, right)
/// is in its merged t = -inf state and the output log is written. Returns the
/// number of merged events.
Index merge_movies(PointStore& store, std::span<const Index> in, std::span<Index> out,
                   const MergeJob& job);

}  // namespace hull3d
