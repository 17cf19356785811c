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

#include <random>
#include <vector>

#include "hull3d/backend.hpp"
#include "hull3d/generate.hpp"
#include "hull3d/hull.hpp"
#include "hull3d/movie.hpp"
#include "hull3d/parallel.hpp"
#include "hull3d/serial.hpp"

namespace hull3d::testing {

inline std::vector<Point3> sorted_points(std::size_t n, Distribution d, std::uint64_t seed) {
  SequentialBackend backend;
  return prepare_input(generate(n, d, seed), backend).points;
}

inline std::vector<Point3> mirrored(std::vector<Point3> pts) {
  for (Point3& p : pts) p.z = -p.z;
  return pts;
}

/// Store, both buffers and the finished movie of one pass.
struct Movie {
  PointStore store;
  MovieBuffer a;
  MovieBuffer b;
  MovieRun run;

  EventLog log() const { return log_at(*run.final_buffer, 0, store.size()); }
};

inline Movie leveled_movie(std::span<const Point3> sorted, ExecutionBackend& backend,
                           const LevelObserver& observer = {}) {
  Movie m{PointStore(sorted), MovieBuffer(static_cast<Index>(sorted.size())),
          MovieBuffer(static_cast<Index>(sorted.size())), {}};
  m.run = build_movie(m.store, m.a, m.b, backend, observer);
  return m;
}

inline Movie leveled_movie(std::span<const Point3> sorted) {
  SequentialBackend backend;
  return leveled_movie(sorted, backend);
}

inline Movie recursive_movie(std::span<const Point3> sorted) {
  Movie m{PointStore(sorted), MovieBuffer(static_cast<Index>(sorted.size())),
          MovieBuffer(static_cast<Index>(sorted.size())), {}};
  m.run = build_movie_recursive(m.store, m.a, m.b);
  return m;
}

inline Point3 random_point(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double x = u(rng);
  const double y = u(rng);
  return {x, y, u(rng)};
}

}  // namespace hull3d::testing
