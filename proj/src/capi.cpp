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

#include "hull3d/hull3d.h"

#include <algorithm>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "hull3d/backend.hpp"
#include "hull3d/error.hpp"
#include "hull3d/generate.hpp"
#include "hull3d/hull.hpp"
#include "hull3d/oracle.hpp"
#include "hull3d/point_io.hpp"
#include "hull3d/verify.hpp"

struct hull3d_points {
  std::vector<hull3d::Point3> points;
};

struct hull3d_context {
  hull3d_engine engine;
  std::unique_ptr<hull3d::ExecutionBackend> backend;
};

struct hull3d_result {
  std::vector<int32_t> vertices;
  std::vector<int32_t> faces;
  hull3d::HullStats stats;
};

static_assert(sizeof(hull3d::Point3) == 3 * sizeof(double));
static_assert(sizeof(hull3d::Face) == 3 * sizeof(int32_t));

namespace {

thread_local std::string last_error;

hull3d_status fail(hull3d_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

hull3d_status status_of(hull3d::ErrorCode code) {
  switch (code) {
    case hull3d::ErrorCode::invalid_argument: return HULL3D_ERR_INVALID_ARGUMENT;
    case hull3d::ErrorCode::parse_error: return HULL3D_ERR_PARSE;
    case hull3d::ErrorCode::io_error: return HULL3D_ERR_IO;
    case hull3d::ErrorCode::degenerate_input: return HULL3D_ERR_DEGENERATE;
    case hull3d::ErrorCode::merge_failure: return HULL3D_ERR_INTERNAL;
  }
  return HULL3D_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
hull3d_status guarded(Body&& body) {
  try {
    body();
    return HULL3D_OK;
  } catch (const hull3d::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HULL3D_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HULL3D_ERR_INTERNAL, e.what());
  }
}

#define HULL3D_REQUIRE(cond, what) \
  if (!(cond)) return fail(HULL3D_ERR_INVALID_ARGUMENT, what)

std::unique_ptr<hull3d_result> to_result(const hull3d::HullResult& r) {
  auto out = std::make_unique<hull3d_result>();
  out->vertices.assign(r.vertices.begin(), r.vertices.end());
  out->faces.reserve(3 * r.faces.size());
  for (const auto& f : r.faces) out->faces.insert(out->faces.end(), f.begin(), f.end());
  out->stats = r.stats;
  return out;
}

std::vector<hull3d::Face> faces_of(const hull3d_result& r) {
  std::vector<hull3d::Face> faces(r.faces.size() / 3);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    faces[i] = {r.faces[3 * i], r.faces[3 * i + 1], r.faces[3 * i + 2]};
  }
  return faces;
}

}  // namespace

extern "C" {

const char* hull3d_version(void) { return "1.0.0"; }

const char* hull3d_last_error(void) { return last_error.c_str(); }

hull3d_status hull3d_points_create(const double* xyz, size_t n, hull3d_points** out) {
  HULL3D_REQUIRE(out != nullptr, "null output handle");
  HULL3D_REQUIRE(xyz != nullptr || n == 0, "null coordinate array");
  return guarded([&] {
    auto p = std::make_unique<hull3d_points>();
    p->points.resize(n);
    for (size_t i = 0; i < n; ++i) p->points[i] = {xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]};
    *out = p.release();
  });
}

hull3d_status hull3d_points_generate(size_t n, hull3d_distribution dist, uint64_t seed,
                                     hull3d_points** out) {
  HULL3D_REQUIRE(out != nullptr, "null output handle");
  HULL3D_REQUIRE(dist >= HULL3D_DIST_BALL && dist <= HULL3D_DIST_GAUSS, "unknown distribution");
  return guarded([&] {
    auto p = std::make_unique<hull3d_points>();
    p->points = hull3d::generate(n, static_cast<hull3d::Distribution>(dist), seed);
    *out = p.release();
  });
}

hull3d_status hull3d_distribution_parse(const char* name, hull3d_distribution* out) {
  HULL3D_REQUIRE(name != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = static_cast<hull3d_distribution>(hull3d::parse_distribution(name)); });
}

hull3d_status hull3d_points_read(const char* path, hull3d_points** out) {
  HULL3D_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto p = std::make_unique<hull3d_points>();
    p->points = hull3d::read_points_file(path);
    *out = p.release();
  });
}

hull3d_status hull3d_points_write(const hull3d_points* points, const char* path) {
  HULL3D_REQUIRE(points != nullptr && path != nullptr, "null argument");
  return guarded([&] { hull3d::write_points_file(path, points->points); });
}

size_t hull3d_points_count(const hull3d_points* points) {
  return points ? points->points.size() : 0;
}

const double* hull3d_points_data(const hull3d_points* points) {
  if (!points || points->points.empty()) return nullptr;
  return &points->points.front().x;
}

void hull3d_points_destroy(hull3d_points* points) { delete points; }

hull3d_status hull3d_context_create(hull3d_engine engine, unsigned workers, hull3d_context** out) {
  HULL3D_REQUIRE(out != nullptr, "null output handle");
  HULL3D_REQUIRE(engine == HULL3D_ENGINE_SERIAL || engine == HULL3D_ENGINE_PARALLEL,
                 "unknown engine");
  return guarded([&] {
    auto ctx = std::make_unique<hull3d_context>();
    ctx->engine = engine;
    ctx->backend = engine == HULL3D_ENGINE_SERIAL
                       ? std::make_unique<hull3d::SequentialBackend>()
                       : hull3d::make_backend(workers == 0 ? hull3d::default_workers() : workers);
    *out = ctx.release();
  });
}

unsigned hull3d_context_workers(const hull3d_context* ctx) {
  return ctx ? ctx->backend->width() : 0;
}

void hull3d_context_destroy(hull3d_context* ctx) { delete ctx; }

hull3d_status hull3d_compute(hull3d_context* ctx, const hull3d_points* points,
                             hull3d_result** out) {
  HULL3D_REQUIRE(ctx != nullptr && points != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    hull3d::HullOptions options;
    options.engine = ctx->engine == HULL3D_ENGINE_SERIAL ? hull3d::Engine::recursive
                                                         : hull3d::Engine::leveled;
    options.backend = ctx->backend.get();
    *out = to_result(hull3d::convex_hull_3d(points->points, options)).release();
  });
}

hull3d_status hull3d_oracle_hull(const hull3d_points* points, hull3d_result** out) {
  HULL3D_REQUIRE(points != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto& pts = points->points;
    const hull3d::FaceSet set = hull3d::brute_force_hull(pts);
    auto r = std::make_unique<hull3d_result>();
    std::vector<char> on_hull(pts.size(), 0);
    hull3d::Point3 c{};
    for (const auto& p : pts) c.x += p.x, c.y += p.y, c.z += p.z;
    const double n = static_cast<double>(pts.size());
    c = {c.x / n, c.y / n, c.z / n};
    for (const auto& t : set.all()) {
      hull3d::Face f = t;
      const auto& a = pts[f[0]];
      const auto& b = pts[f[1]];
      const auto& d = pts[f[2]];
      const double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
      const double vx = d.x - a.x, vy = d.y - a.y, vz = d.z - a.z;
      const double nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
      if (nx * (c.x - a.x) + ny * (c.y - a.y) + nz * (c.z - a.z) > 0) std::swap(f[1], f[2]);
      r->faces.insert(r->faces.end(), f.begin(), f.end());
      for (auto v : f) on_hull[v] = 1;
    }
    for (size_t i = 0; i < pts.size(); ++i) {
      if (on_hull[i]) r->vertices.push_back(static_cast<int32_t>(i));
    }
    *out = r.release();
  });
}

size_t hull3d_result_vertex_count(const hull3d_result* r) { return r ? r->vertices.size() : 0; }

const int32_t* hull3d_result_vertices(const hull3d_result* r) {
  return r && !r->vertices.empty() ? r->vertices.data() : nullptr;
}

size_t hull3d_result_face_count(const hull3d_result* r) { return r ? r->faces.size() / 3 : 0; }

const int32_t* hull3d_result_faces(const hull3d_result* r) {
  return r && !r->faces.empty() ? r->faces.data() : nullptr;
}

void hull3d_result_stats(const hull3d_result* r, hull3d_stats* out) {
  if (!out) return;
  *out = hull3d_stats{};
  if (!r) return;
  out->levels = static_cast<uint32_t>(r->stats.levels);
  out->lower_events = static_cast<uint64_t>(r->stats.lower_events);
  out->upper_events = static_cast<uint64_t>(r->stats.upper_events);
  out->perturbed = r->stats.perturbed ? 1 : 0;
  out->sort_ms = r->stats.sort_ms;
  out->lower_ms = r->stats.lower_ms;
  out->upper_ms = r->stats.upper_ms;
  out->total_ms = r->stats.total_ms;
}

size_t hull3d_result_level_count(const hull3d_result* r, hull3d_pass pass) {
  if (!r) return 0;
  return (pass == HULL3D_PASS_LOWER ? r->stats.lower_level_ms : r->stats.upper_level_ms).size();
}

const double* hull3d_result_level_ms(const hull3d_result* r, hull3d_pass pass) {
  if (!r) return nullptr;
  const auto& v = pass == HULL3D_PASS_LOWER ? r->stats.lower_level_ms : r->stats.upper_level_ms;
  return v.empty() ? nullptr : v.data();
}

int hull3d_result_same_faces(const hull3d_result* a, const hull3d_result* b) {
  if (!a || !b) return 0;
  return hull3d::canonical_faces(faces_of(*a)) == hull3d::canonical_faces(faces_of(*b)) ? 1 : 0;
}

hull3d_status hull3d_result_write_faces(const hull3d_result* r, const char* path) {
  HULL3D_REQUIRE(r != nullptr && path != nullptr, "null argument");
  return guarded([&] { hull3d::write_faces_file(path, faces_of(*r)); });
}

hull3d_status hull3d_result_write_obj(const hull3d_result* r, const hull3d_points* points,
                                      const char* path) {
  HULL3D_REQUIRE(r != nullptr && points != nullptr && path != nullptr, "null argument");
  return guarded([&] { hull3d::write_obj_file(path, points->points, faces_of(*r)); });
}

void hull3d_result_destroy(hull3d_result* r) { delete r; }

hull3d_status hull3d_check_movie(const hull3d_points* points, unsigned times, uint64_t seed,
                                 int all_levels, size_t* checks, size_t* failures) {
  HULL3D_REQUIRE(points != nullptr && checks != nullptr && failures != nullptr, "null argument");
  return guarded([&] {
    hull3d::SequentialBackend sequential;
    const hull3d::SortedInput input = hull3d::prepare_input(points->points, sequential);
    const hull3d::MovieCheckReport report =
        hull3d::check_movie(input.points, times, seed, all_levels != 0);
    *checks = report.checks;
    *failures = report.failures + report.max_events_over_bound;
  });
}

}  // extern "C"
