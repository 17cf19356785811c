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

#include <cmath>
#include <limits>
#include <utility>

namespace hull3d {

struct Point3 {
  double x = 0;
  double y = 0;
  double z = 0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

/// Extended-real event time. Finite values are ordinary times; +INF marks a
/// triple that never becomes collinear (or involves the sentinel).
using EventTime = double;
inline constexpr EventTime kNever = std::numeric_limits<double>::infinity();

/// Signed area of the (x, y) projection. Positive for a counterclockwise
/// (left) turn.
inline double turn_xy(const Point3& p, const Point3& q, const Point3& r) {
  return (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
}

/// Same determinant over (x, z).
inline double turn_xz(const Point3& p, const Point3& q, const Point3& r) {
  return (q.x - p.x) * (r.z - p.z) - (r.x - p.x) * (q.z - p.z);
}

/// Time at which the moving points (x, z - t*y) of p, q, r are collinear.
inline EventTime event_time(const Point3& p, const Point3& q, const Point3& r) {
  const double denom = turn_xy(p, q, r);
  if (denom == 0) return kNever;
  return turn_xz(p, q, r) / denom;
}

/// Kinetic position of p at time t: abscissa x, ordinate z - t*y. The 2D lower
/// hull of the projected set at time t is the slice of the 3D lower hull made
/// of facets whose plane is z = a*x + t*y + c.
struct Projected {
  double x = 0;
  double w = 0;
};

inline Projected project(const Point3& p, double t) { return {p.x, p.z - t * p.y}; }

inline double turn_2d(const Projected& p, const Projected& q, const Projected& r) {
  return (q.x - p.x) * (r.w - p.w) - (r.x - p.x) * (q.w - p.w);
}

inline bool is_finite(const Point3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

}  // namespace hull3d
