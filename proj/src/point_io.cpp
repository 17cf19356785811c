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

#include "hull3d/point_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "hull3d/error.hpp"

namespace hull3d {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

[[noreturn]] void parse_failure(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::io_error, "failed writing '" + path.string() + "'");
}

}  // namespace

std::vector<Point3> read_points(std::istream& in) {
  std::vector<Point3> points;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end && is_space(*p)) ++p;
    if (p == end || *p == '#') continue;

    double xyz[3];
    for (double& value : xyz) {
      while (p < end && is_space(*p)) ++p;
      if (p == end) parse_failure(number, "expected three coordinates");
      const auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc() || (next < end && !is_space(*next))) {
        parse_failure(number, "malformed number");
      }
      p = next;
    }
    while (p < end && is_space(*p)) ++p;
    if (p != end) parse_failure(number, "unexpected text after three coordinates");
    const Point3 point{xyz[0], xyz[1], xyz[2]};
    if (!is_finite(point)) parse_failure(number, "coordinate is not finite");
    points.push_back(point);
  }
  if (in.bad()) throw Error(ErrorCode::io_error, "read error");
  return points;
}

std::vector<Point3> read_points_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_points(in);
}

std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void write_points(std::ostream& out, std::span<const Point3> points) {
  for (const Point3& p : points) {
    out << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z) << '\n';
  }
}

void write_points_file(const std::filesystem::path& path, std::span<const Point3> points) {
  auto out = open_out(path);
  write_points(out, points);
  finish(out, path);
}

void write_faces(std::ostream& out, std::span<const Face> faces) {
  for (const Face& f : faces) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_faces_file(const std::filesystem::path& path, std::span<const Face> faces) {
  auto out = open_out(path);
  write_faces(out, faces);
  finish(out, path);
}

void write_obj(std::ostream& out, std::span<const Point3> points, std::span<const Face> faces) {
  for (const Point3& p : points) {
    out << "v " << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z)
        << '\n';
  }
  for (const Face& f : faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_obj_file(const std::filesystem::path& path, std::span<const Point3> points,
                    std::span<const Face> faces) {
  auto out = open_out(path);
  write_obj(out, points, faces);
  finish(out, path);
}

}  // namespace hull3d
