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

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hull3d/error.hpp"
#include "hull3d/generate.hpp"
#include "hull3d/hull.hpp"
#include "hull3d/point_io.hpp"

using namespace hull3d;

namespace {

ErrorCode parse_code(const std::string& text, std::string* message = nullptr) {
  std::istringstream in(text);
  try {
    read_points(in);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("generation is deterministic") {
  for (auto d : {Distribution::ball, Distribution::sphere, Distribution::cube, Distribution::gauss}) {
    CHECK(generate(500, d, 9) == generate(500, d, 9));
    CHECK(generate(500, d, 9) != generate(500, d, 10));
    CHECK(parse_distribution(distribution_name(d)) == d);
  }
  CHECK_THROWS_AS(parse_distribution("torus"), Error);
  CHECK_THROWS_AS(generate(0, Distribution::ball, 1), Error);
}

TEST_CASE("cube sample is reproducible from the raw stream") {
  std::mt19937_64 raw(77);
  auto u = [&] { return static_cast<double>(raw() >> 11) / 4503599627370496.0 - 1.0; };
  const double x = u(), y = u(), z = u();
  const Point3 first = generate(3, Distribution::cube, 77)[0];
  CHECK(first == Point3{x, y, z});
}

TEST_CASE("samples stay in range") {
  for (const Point3& p : generate(5000, Distribution::ball, 3)) {
    CHECK(p.x * p.x + p.y * p.y + p.z * p.z < 1.0);
  }
  for (const Point3& p : generate(5000, Distribution::cube, 3)) {
    CHECK(std::abs(p.x) <= 1);
    CHECK(std::abs(p.y) <= 1);
    CHECK(std::abs(p.z) <= 1);
  }
  for (const Point3& p : generate(5000, Distribution::sphere, 3)) {
    CHECK(std::abs(std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z) - 1) <= 2e-6);
  }
}

TEST_CASE("hull sizes by distribution") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    CHECK(convex_hull_3d(generate(256, Distribution::sphere, seed)).vertices.size() >= 250);
    CHECK(convex_hull_3d(generate(4096, Distribution::ball, seed)).vertices.size() < 4096 / 4);
  }
}

TEST_CASE("reading points") {
  std::istringstream in("# comment\n\n1 2 3\n  -4.5\t5e-3  6\n# trailing\n7 8 9");
  const auto pts = read_points(in);
  CHECK(pts == std::vector<Point3>{{1, 2, 3}, {-4.5, 5e-3, 6}, {7, 8, 9}});

  std::string message;
  CHECK(parse_code("1 2 3\n1 2\n", &message) == ErrorCode::parse_error);
  CHECK(message.find("line 2") != std::string::npos);
  CHECK(parse_code("1 2 3 4\n") == ErrorCode::parse_error);
  CHECK(parse_code("1 two 3\n") == ErrorCode::parse_error);
  CHECK(parse_code("1 2 nan\n") == ErrorCode::parse_error);
  CHECK(parse_code("1 2 inf\n") == ErrorCode::parse_error);

  try {
    read_points_file("/nonexistent/points.txt");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io_error);
  }
}

TEST_CASE("points round trip exactly") {
  auto pts = generate(1000, Distribution::gauss, 12);
  pts.push_back({0.1, -0.0, 1e-300});
  pts.push_back({1e300, 5e-324, -123456789.125});
  std::stringstream io;
  write_points(io, pts);
  CHECK(read_points(io) == pts);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2) == "2");

  const auto path = std::filesystem::temp_directory_path() / "hull3d_roundtrip.txt";
  write_points_file(path, pts);
  CHECK(read_points_file(path) == pts);
  std::filesystem::remove(path);
}

TEST_CASE("face and OBJ output") {
  const std::vector<Point3> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<Face> faces{{0, 2, 1}, {0, 1, 3}};
  std::ostringstream f;
  write_faces(f, faces);
  CHECK(f.str() == "0 2 1\n0 1 3\n");
  std::ostringstream obj;
  write_obj(obj, pts, faces);
  CHECK(obj.str() == "v 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\nf 1 3 2\nf 1 2 4\n");
  CHECK_THROWS_AS(write_faces_file("/nonexistent/dir/faces.txt", faces), Error);
}
