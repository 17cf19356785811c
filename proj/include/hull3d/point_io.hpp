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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hull3d/geometry.hpp"
#include "hull3d/movie.hpp"

namespace hull3d {

// Point files: UTF-8 text, one point per line as three whitespace-separated
// decimals. Blank lines and lines starting with '#' are skipped.

/// Throws Error(parse_error) naming the offending line.
std::vector<Point3> read_points(std::istream& in);
std::vector<Point3> read_points_file(const std::filesystem::path& path);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

void write_points(std::ostream& out, std::span<const Point3> points);
void write_points_file(const std::filesystem::path& path, std::span<const Point3> points);

/// One "i j k" line per face, 0-based.
void write_faces(std::ostream& out, std::span<const Face> faces);
void write_faces_file(const std::filesystem::path& path, std::span<const Face> faces);

/// Wavefront OBJ: every input point as a vertex, then 1-based faces.
void write_obj(std::ostream& out, std::span<const Point3> points, std::span<const Face> faces);
void write_obj_file(const std::filesystem::path& path, std::span<const Point3> points,
                    std::span<const Face> faces);

}  // namespace hull3d
