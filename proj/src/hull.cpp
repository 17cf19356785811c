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

#include "hull3d/hull.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "hull3d/error.hpp"
#include "hull3d/parallel.hpp"

namespace hull3d {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Sort key: x plus the input position; ties in x fall back to (y, z, input
// position) through the point array.
struct Key {
  double x;
  Index original;
};

struct KeyLess {
  std::span<const Point3> points;

  bool operator()(const Key& a, const Key& b) const {
    if (a.x != b.x) return a.x < b.x;
    const Point3& p = points[a.original];
    const Point3& q = points[b.original];
    if (p.y != q.y) return p.y < q.y;
    if (p.z != q.z) return p.z < q.z;
    return a.original < b.original;
  }
};

// Chunked sort: every chunk sorted as one job, then pairwise merge rounds.
void sort_keys(std::vector<Key>& v, const KeyLess& less, ExecutionBackend& backend) {
  constexpr std::size_t kMinChunk = 1 << 14;
  const std::size_t parts = std::min<std::size_t>(backend.width(), v.size() / kMinChunk);
  if (parts <= 1) {
    std::sort(v.begin(), v.end(), less);
    return;
  }
  std::vector<std::size_t> bounds(parts + 1);
  for (std::size_t c = 0; c <= parts; ++c) bounds[c] = v.size() * c / parts;
  backend.run(parts, [&](std::size_t c) {
    std::sort(v.begin() + bounds[c], v.begin() + bounds[c + 1], less);
  });
  for (std::size_t step = 1; step < parts; step *= 2) {
    const std::size_t pairs = (parts + 2 * step - 1) / (2 * step);
    backend.run(pairs, [&](std::size_t p) {
      const std::size_t lo = p * 2 * step;
      const std::size_t mid = std::min(lo + step, parts);
      const std::size_t hi = std::min(lo + 2 * step, parts);
      if (mid < hi) {
        std::inplace_merge(v.begin() + bounds[lo], v.begin() + bounds[mid], v.begin() + bounds[hi],
                           less);
      }
    });
  }
}

Point3 diff(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

[[noreturn]] void degenerate(const std::string& why) {
  throw Error(ErrorCode::degenerate_input, "degenerate input: " + why);
}

// Rejects point sets that span less than three dimensions (1e-9 relative).
void check_full_dimension(std::span<const Point3> pts) {
  constexpr double kTol = 1e-9;
  const Point3& o = pts[0];
  std::size_t far = 0;
  double best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = norm(diff(pts[i], o));
    if (d > best) best = d, far = i;
  }
  if (best == 0) degenerate("all points coincide");
  const Point3 axis = diff(pts[far], o);

  Point3 normal{};
  best = 0;
  for (const Point3& q : pts) {
    const Point3 d = diff(q, o);
    const Point3 c = cross(axis, d);
    const double len = norm(c);
    if (len > kTol * norm(axis) * norm(d) && len > best) best = len, normal = c;
  }
  if (best == 0) degenerate("all points are collinear");

  for (const Point3& q : pts) {
    const Point3 d = diff(q, o);
    if (std::abs(dot(normal, d)) > kTol * norm(normal) * norm(d)) return;
  }
  degenerate("all points are coplanar");
}

struct Pass {
  std::vector<Face> faces;
  Index events = 0;
  int levels = 0;
  std::vector<double> level_ms;
};

Pass run_pass(std::span<const Point3> sorted, Engine engine, ExecutionBackend& backend) {
  PointStore store(sorted);
  MovieBuffer a(store.size());
  MovieBuffer b(store.size());
  MovieRun run;
  try {
    run = engine == Engine::recursive ? build_movie_recursive(store, a, b)
                                      : build_movie(store, a, b, backend);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::merge_failure) throw;
    degenerate(std::string("points are not in general position (") + e.what() + ")");
  }
  Pass pass;
  const EventLog log = log_at(*run.final_buffer, 0, store.size());
  pass.events = static_cast<Index>(log.size());
  pass.faces = extract_faces(store, log);
  pass.levels = run.levels;
  pass.level_ms = std::move(run.level_ms);
  return pass;
}

}  // namespace

bool strictly_increasing_x(std::span<const Point3> sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sorted[i - 1].x < sorted[i].x)) return false;
  }
  return true;
}

std::vector<Point3> perturb_ties(std::span<const Point3> sorted) {
  constexpr double kStep = 16 * std::numeric_limits<double>::epsilon();
  std::vector<Point3> out(sorted.begin(), sorted.end());
  std::size_t run_start = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].x == sorted[run_start].x) {
      const double x = sorted[run_start].x;
      out[i].x = x + static_cast<double>(i - run_start) * kStep * std::max(1.0, std::abs(x));
    } else {
      run_start = i;
    }
  }
  return out;
}

SortedInput prepare_input(std::span<const Point3> points, ExecutionBackend& backend) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "no points");
  if (points.size() >= static_cast<std::size_t>(std::numeric_limits<Index>::max() / 2)) {
    throw Error(ErrorCode::invalid_argument, "too many points");
  }
  const auto n = static_cast<Index>(points.size());
  std::vector<Key> keys(points.size());
  for (Index i = 0; i < n; ++i) {
    if (!is_finite(points[i])) {
      throw Error(ErrorCode::invalid_argument, "point " + std::to_string(i) + " is not finite");
    }
    keys[i] = {points[i].x, i};
  }
  sort_keys(keys, KeyLess{points}, backend);

  SortedInput input;
  input.points.resize(keys.size());
  input.original.resize(keys.size());
  for (Index i = 0; i < n; ++i) {
    input.points[i] = points[keys[i].original];
    input.original[i] = keys[i].original;
  }
  for (int round = 0; !strictly_increasing_x(input.points); ++round) {
    if (round == 8) degenerate("could not separate repeated x coordinates");
    const std::vector<Point3> nudged = perturb_ties(input.points);
    std::vector<Index> order(keys.size());
    for (Index i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return nudged[a].x < nudged[b].x; });
    std::vector<Index> original(keys.size());
    for (Index i = 0; i < n; ++i) {
      input.points[i] = nudged[order[i]];
      original[i] = input.original[order[i]];
    }
    input.original = std::move(original);
    input.perturbed = true;
  }
  return input;
}

HullResult convex_hull_3d(std::span<const Point3> points, const HullOptions& options) {
  const auto start = Clock::now();
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "no points");
  SequentialBackend sequential;
  ExecutionBackend& backend = options.backend ? *options.backend : sequential;

  HullResult result;
  const auto n = static_cast<Index>(points.size());
  if (n <= 3) {
    for (Index i = 0; i < n; ++i) {
      if (!is_finite(points[i])) {
        throw Error(ErrorCode::invalid_argument, "point " + std::to_string(i) + " is not finite");
      }
      result.vertices.push_back(i);
    }
    result.stats.total_ms = elapsed_ms(start);
    return result;
  }

  SortedInput input = prepare_input(points, backend);
  const std::vector<Point3>& sorted = input.points;
  result.stats.perturbed = input.perturbed;
  check_full_dimension(sorted);
  result.stats.sort_ms = elapsed_ms(start);

  auto pass_start = Clock::now();
  Pass lower = run_pass(sorted, options.engine, backend);
  result.stats.lower_ms = elapsed_ms(pass_start);

  // The upper hull is the lower hull of the mirrored set; x order is unchanged.
  pass_start = Clock::now();
  std::vector<Point3> mirrored(sorted);
  for (Point3& p : mirrored) p.z = -p.z;
  Pass upper = run_pass(mirrored, options.engine, backend);
  result.stats.upper_ms = elapsed_ms(pass_start);

  result.stats.levels = lower.levels;
  result.stats.lower_events = lower.events;
  result.stats.upper_events = upper.events;
  result.stats.lower_level_ms = std::move(lower.level_ms);
  result.stats.upper_level_ms = std::move(upper.level_ms);

  Point3 centroid{};
  for (const Point3& p : sorted) centroid.x += p.x, centroid.y += p.y, centroid.z += p.z;
  centroid = {centroid.x / n, centroid.y / n, centroid.z / n};

  result.faces.reserve(lower.faces.size() + upper.faces.size());
  std::vector<char> on_hull(points.size(), 0);
  for (const auto* faces : {&lower.faces, &upper.faces}) {
    for (Face f : *faces) {
      if (f[0] == kNil || f[2] == kNil) degenerate("hull chain reached the sentinel");
      const Point3& a = sorted[f[0]];
      const Point3 normal = cross(diff(sorted[f[1]], a), diff(sorted[f[2]], a));
      if (dot(normal, diff(centroid, a)) > 0) std::swap(f[1], f[2]);
      for (Index& v : f) {
        v = input.original[v];
        on_hull[v] = 1;
      }
      result.faces.push_back(f);
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (on_hull[i]) result.vertices.push_back(i);
  }
  if (result.faces.size() + 4 != 2 * result.vertices.size()) {
    degenerate("face count " + std::to_string(result.faces.size()) + " does not match " +
               std::to_string(result.vertices.size()) + " hull vertices");
  }
  result.stats.total_ms = elapsed_ms(start);
  return result;
}

}  // namespace hull3d
