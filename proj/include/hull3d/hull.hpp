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

#include <span>
#include <vector>

#include "hull3d/backend.hpp"
#include "hull3d/geometry.hpp"
#include "hull3d/movie.hpp"

namespace hull3d {

enum class Engine {
  recursive,  // top-down reference solver, always single-threaded
  leveled,    // bottom-up level-synchronous engine on the given backend
};

struct HullOptions {
  Engine engine = Engine::leveled;
  /// Backend for the leveled engine and the presort; sequential when null.
  ExecutionBackend* backend = nullptr;
};

struct HullStats {
  int levels = 0;
  Index lower_events = 0;
  Index upper_events = 0;
  /// Input had repeated x coordinates; the hull is that of the nudged points.
  bool perturbed = false;
  double sort_ms = 0;
  double lower_ms = 0;
  double upper_ms = 0;
  double total_ms = 0;
  std::vector<double> lower_level_ms;
  std::vector<double> upper_level_ms;
};

struct HullResult {
  std::vector<Index> vertices;  // ascending input indices
  std::vector<Face> faces;      // input indices, counterclockwise seen from outside
  HullStats stats;
};

/// Convex hull of `points`. Indices in the result refer to positions in
/// `points`. Up to three points give no faces and every point as a vertex.
/// Throws Error(invalid_argument) on empty or non-finite input and
/// Error(degenerate_input) when the points are coplanar or otherwise violate
/// general position.
HullResult convex_hull_3d(std::span<const Point3> points, const HullOptions& options = {});

/// Input in engine order: sorted by (x, y, z), repeated x nudged apart.
struct SortedInput {
  std::vector<Point3> points;
  std::vector<Index> original;  // input position of each sorted point
  bool perturbed = false;
};

/// Throws Error(invalid_argument) on empty or non-finite input.
SortedInput prepare_input(std::span<const Point3> points, ExecutionBackend& backend);

/// Nudges repeated x coordinates of an x-sorted sequence apart: the r-th point
/// of a run of equal x moves right by r * 16 * eps * max(1, |x|).
std::vector<Point3> perturb_ties(std::span<const Point3> sorted);

/// True when no two points have the same x, the order taken as given.
bool strictly_increasing_x(std::span<const Point3> sorted);

}  // namespace hull3d
