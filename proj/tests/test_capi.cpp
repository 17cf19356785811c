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

// Exercises the shared library through its C header only.
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hull3d/hull3d.h"

namespace {

struct Points {
  hull3d_points* p = nullptr;
  ~Points() { hull3d_points_destroy(p); }
};
struct Context {
  hull3d_context* c = nullptr;
  ~Context() { hull3d_context_destroy(c); }
};
struct Result {
  hull3d_result* r = nullptr;
  ~Result() { hull3d_result_destroy(r); }
};

std::string temp_file(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("version and distributions") {
  CHECK(std::strlen(hull3d_version()) > 0);
  hull3d_distribution d{};
  CHECK(hull3d_distribution_parse("sphere", &d) == HULL3D_OK);
  CHECK(d == HULL3D_DIST_SPHERE);
  CHECK(hull3d_distribution_parse("donut", &d) == HULL3D_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hull3d_last_error()).find("donut") != std::string::npos);
  CHECK(hull3d_distribution_parse(nullptr, &d) == HULL3D_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments") {
  hull3d_points* p = nullptr;
  hull3d_result* r = nullptr;
  CHECK(hull3d_points_create(nullptr, 3, &p) == HULL3D_ERR_INVALID_ARGUMENT);
  CHECK(hull3d_points_generate(10, HULL3D_DIST_BALL, 1, nullptr) == HULL3D_ERR_INVALID_ARGUMENT);
  CHECK(hull3d_compute(nullptr, nullptr, &r) == HULL3D_ERR_INVALID_ARGUMENT);
  CHECK(hull3d_points_count(nullptr) == 0);
  CHECK(hull3d_result_face_count(nullptr) == 0);
  CHECK(hull3d_result_same_faces(nullptr, nullptr) == 0);
  hull3d_points_destroy(nullptr);
  hull3d_result_destroy(nullptr);
  hull3d_context_destroy(nullptr);
}

TEST_CASE("tetrahedron through the C API") {
  const double xyz[] = {0, 0, 0, 1, 0, 0, 0.1, 1, 0.2, 0.3, 0.3, 1};
  Points pts;
  REQUIRE(hull3d_points_create(xyz, 4, &pts.p) == HULL3D_OK);
  CHECK(hull3d_points_count(pts.p) == 4);
  CHECK(hull3d_points_data(pts.p)[8] == 0.2);

  for (hull3d_engine engine : {HULL3D_ENGINE_SERIAL, HULL3D_ENGINE_PARALLEL}) {
    Context ctx;
    REQUIRE(hull3d_context_create(engine, 2, &ctx.c) == HULL3D_OK);
    Result res;
    REQUIRE(hull3d_compute(ctx.c, pts.p, &res.r) == HULL3D_OK);
    CHECK(hull3d_result_face_count(res.r) == 4);
    CHECK(hull3d_result_vertex_count(res.r) == 4);
    hull3d_stats stats{};
    hull3d_result_stats(res.r, &stats);
    CHECK(stats.levels == 2);
    CHECK(stats.perturbed == 0);
  }
}

TEST_CASE("engines agree with the oracle") {
  Points pts;
  REQUIRE(hull3d_points_generate(60, HULL3D_DIST_GAUSS, 5, &pts.p) == HULL3D_OK);
  Context serial, parallel;
  REQUIRE(hull3d_context_create(HULL3D_ENGINE_SERIAL, 1, &serial.c) == HULL3D_OK);
  REQUIRE(hull3d_context_create(HULL3D_ENGINE_PARALLEL, 4, &parallel.c) == HULL3D_OK);
  CHECK(hull3d_context_workers(parallel.c) == 4);
  Result a, b, oracle;
  REQUIRE(hull3d_compute(serial.c, pts.p, &a.r) == HULL3D_OK);
  REQUIRE(hull3d_compute(parallel.c, pts.p, &b.r) == HULL3D_OK);
  REQUIRE(hull3d_oracle_hull(pts.p, &oracle.r) == HULL3D_OK);
  CHECK(hull3d_result_same_faces(a.r, oracle.r) == 1);
  CHECK(hull3d_result_same_faces(b.r, oracle.r) == 1);
  CHECK(hull3d_result_face_count(a.r) == 2 * hull3d_result_vertex_count(a.r) - 4);

  CHECK(hull3d_result_level_count(b.r, HULL3D_PASS_LOWER) == 6);
  CHECK(hull3d_result_level_count(b.r, HULL3D_PASS_UPPER) == 6);
  for (size_t i = 0; i < 6; ++i) CHECK(hull3d_result_level_ms(b.r, HULL3D_PASS_LOWER)[i] >= 0);
  CHECK(hull3d_result_level_count(a.r, HULL3D_PASS_LOWER) == 0);

  // Oracle faces are also outward.
  const int32_t* f = hull3d_result_faces(oracle.r);
  const double* x = hull3d_points_data(pts.p);
  double c[3] = {0, 0, 0};
  for (size_t i = 0; i < 60; ++i) {
    for (int k = 0; k < 3; ++k) c[k] += x[3 * i + k] / 60;
  }
  for (size_t i = 0; i < hull3d_result_face_count(oracle.r); ++i) {
    const double* p = x + 3 * f[3 * i];
    const double* q = x + 3 * f[3 * i + 1];
    const double* r = x + 3 * f[3 * i + 2];
    const double u[3] = {q[0] - p[0], q[1] - p[1], q[2] - p[2]};
    const double v[3] = {r[0] - p[0], r[1] - p[1], r[2] - p[2]};
    const double n[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                         u[0] * v[1] - u[1] * v[0]};
    CHECK(n[0] * (c[0] - p[0]) + n[1] * (c[1] - p[1]) + n[2] * (c[2] - p[2]) < 0);
  }
}

TEST_CASE("error statuses") {
  Context ctx;
  REQUIRE(hull3d_context_create(HULL3D_ENGINE_PARALLEL, 0, &ctx.c) == HULL3D_OK);
  CHECK(hull3d_context_workers(ctx.c) >= 1);
  CHECK(hull3d_context_create(static_cast<hull3d_engine>(7), 1, &ctx.c) ==
        HULL3D_ERR_INVALID_ARGUMENT);

  const double coplanar[] = {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 2, 3, 0};
  Points flat;
  REQUIRE(hull3d_points_create(coplanar, 5, &flat.p) == HULL3D_OK);
  Result res;
  CHECK(hull3d_compute(ctx.c, flat.p, &res.r) == HULL3D_ERR_DEGENERATE);
  CHECK(res.r == nullptr);
  CHECK(std::string(hull3d_last_error()).find("coplanar") != std::string::npos);

  Points empty;
  REQUIRE(hull3d_points_create(nullptr, 0, &empty.p) == HULL3D_OK);
  CHECK(hull3d_compute(ctx.c, empty.p, &res.r) == HULL3D_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hull3d_last_error()).find("no points") != std::string::npos);

  Points missing;
  CHECK(hull3d_points_read("/nonexistent/in.txt", &missing.p) == HULL3D_ERR_IO);

  const std::string bad = temp_file("hull3d_capi_bad.txt");
  std::ofstream(bad) << "1 2 3\n4 5\n";
  CHECK(hull3d_points_read(bad.c_str(), &missing.p) == HULL3D_ERR_PARSE);
  CHECK(std::string(hull3d_last_error()).find("line 2") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("file output") {
  Points pts;
  REQUIRE(hull3d_points_generate(30, HULL3D_DIST_BALL, 2, &pts.p) == HULL3D_OK);
  const std::string path = temp_file("hull3d_capi_points.txt");
  REQUIRE(hull3d_points_write(pts.p, path.c_str()) == HULL3D_OK);
  Points back;
  REQUIRE(hull3d_points_read(path.c_str(), &back.p) == HULL3D_OK);
  CHECK(std::memcmp(hull3d_points_data(pts.p), hull3d_points_data(back.p), 90 * sizeof(double)) ==
        0);

  Context ctx;
  REQUIRE(hull3d_context_create(HULL3D_ENGINE_SERIAL, 1, &ctx.c) == HULL3D_OK);
  Result res;
  REQUIRE(hull3d_compute(ctx.c, pts.p, &res.r) == HULL3D_OK);
  const std::string faces = temp_file("hull3d_capi_faces.txt");
  REQUIRE(hull3d_result_write_faces(res.r, faces.c_str()) == HULL3D_OK);
  std::ifstream in(faces);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == hull3d_result_face_count(res.r));
  CHECK(hull3d_result_write_obj(res.r, pts.p, "/nonexistent/out.obj") == HULL3D_ERR_IO);
  std::remove(path.c_str());
  std::remove(faces.c_str());
}

TEST_CASE("movie check") {
  Points pts;
  REQUIRE(hull3d_points_generate(100, HULL3D_DIST_SPHERE, 3, &pts.p) == HULL3D_OK);
  size_t checks = 0, failures = 1;
  REQUIRE(hull3d_check_movie(pts.p, 5, 1, 1, &checks, &failures) == HULL3D_OK);
  CHECK(checks > 0);
  CHECK(failures == 0);
}
