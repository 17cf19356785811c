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

#include "hull3d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hull3d/error.hpp"

namespace hull3d {

namespace {

constexpr double kCoplanarTolerance = 1e-9;

struct Vec {
  double x, y, z;
};

Vec sub(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec cross(const Vec& a, const Vec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

[[noreturn]] void degenerate(Index i, Index j, Index k, Index q) {
  throw Error(ErrorCode::degenerate_input, "degenerate input: points " + std::to_string(i) + ", " +
                                               std::to_string(j) + ", " + std::to_string(k) +
                                               ", " + std::to_string(q) + " are nearly coplanar");
}

}  // namespace

Triple canonical(const Face& f) {
  Triple t = f;
  std::sort(t.begin(), t.end());
  return t;
}

std::set<Triple> canonical_faces(std::span<const Face> faces) {
  std::set<Triple> out;
  for (const Face& f : faces) out.insert(canonical(f));
  return out;
}

std::set<Triple> FaceSet::all() const {
  std::set<Triple> out = lower;
  out.insert(upper.begin(), upper.end());
  return out;
}

FaceSet brute_force_hull(std::span<const Point3> points) {
  const auto n = static_cast<Index>(points.size());
  if (n < 4) throw Error(ErrorCode::invalid_argument, "brute force hull needs at least 4 points");

  FaceSet result;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        const Point3& a = points[i];
        const Vec normal = cross(sub(points[j], a), sub(points[k], a));
        const double normal_len = norm(normal);
        // A clear witness on each side rules the triple out; near-zero sides
        // only matter if no clear witness exists.
        bool above = false;
        bool below = false;
        Index near = kNil;
        for (Index q = 0; q < n && !(above && below); ++q) {
          if (q == i || q == j || q == k) continue;
          const Vec d = sub(points[q], a);
          const double side = dot(normal, d);
          if (std::abs(side) <= kCoplanarTolerance * normal_len * norm(d)) {
            if (near == kNil) near = q;
            continue;
          }
          (side > 0 ? above : below) = true;
        }
        if (above && below) continue;
        if (near != kNil) degenerate(i, j, k, near);
        // All other points on one side: the outward normal points away from them.
        const double outward_z = above ? -normal.z : normal.z;
        (outward_z < 0 ? result.lower : result.upper).insert({i, j, k});
      }
    }
  }
  return result;
}

std::vector<Index> lower_hull_2d(std::span<const Projected> pts) {
  std::vector<Index> chain;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && !(pts[i - 1].x < pts[i].x)) {
      throw Error(ErrorCode::invalid_argument, "lower_hull_2d needs strictly increasing x");
    }
    while (chain.size() >= 2 &&
           turn_2d(pts[chain[chain.size() - 2]], pts[chain.back()], pts[i]) <= 0) {
      chain.pop_back();
    }
    chain.push_back(static_cast<Index>(i));
  }
  return chain;
}

std::vector<EventTime> replay_times(PointStore& store, EventLog log) {
  std::vector<EventTime> times;
  times.reserve(log.size());
  for (const Index e : log) {
    times.push_back(event_time(store, store.prev(e), e, store.next(e)));
    act(store, e);
  }
  rewind_replay(store, log, log.size());
  return times;
}

SnapshotOutcome snapshot_check(PointStore& store, EventLog log, Index left, Index right, double t) {
  if (!(0 <= left && left < right && right <= store.size()) || !std::isfinite(t)) {
    throw Error(ErrorCode::invalid_argument, "bad snapshot request");
  }
  std::size_t applied = 0;
  SnapshotOutcome outcome = SnapshotOutcome::match;
  for (; applied < log.size(); ++applied) {
    const Index e = log[applied];
    const EventTime te = event_time(store, store.prev(e), e, store.next(e));
    if (std::abs(te - t) <= 1e-12 * std::max(1.0, std::abs(t))) {
      outcome = SnapshotOutcome::retry;
      break;
    }
    if (te > t) break;
    act(store, e);
  }

  if (outcome == SnapshotOutcome::match) {
    std::vector<Projected> projected;
    projected.reserve(static_cast<std::size_t>(right - left));
    for (Index i = left; i < right; ++i) projected.push_back(project(store.point(i), t));
    const std::vector<Index> expected = lower_hull_2d(projected);

    std::vector<Index> chain;
    for (Index p = left; p != kNil && chain.size() <= expected.size(); p = store.next(p)) {
      chain.push_back(p - left);
    }
    if (chain != expected) outcome = SnapshotOutcome::mismatch;
  }

  rewind_replay(store, log, applied);
  return outcome;
}

}  // namespace hull3d
