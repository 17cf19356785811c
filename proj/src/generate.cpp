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

#include "hull3d/generate.hpp"

#include <cmath>
#include <random>
#include <string>

#include "hull3d/error.hpp"

namespace hull3d {

namespace {

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [-1, 1).
  double symmetric() { return static_cast<double>(engine_() >> 11) * 0x1p-52 - 1.0; }

  Point3 in_ball() {
    for (;;) {
      const Point3 p{symmetric(), symmetric(), symmetric()};
      if (p.x * p.x + p.y * p.y + p.z * p.z < 1.0) return p;
    }
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    for (;;) {
      const double u = symmetric();
      const double v = symmetric();
      const double s = u * u + v * v;
      if (s >= 1.0 || s == 0.0) continue;
      const double f = std::sqrt(-2.0 * std::log(s) / s);
      spare_ = v * f;
      has_spare_ = true;
      return u * f;
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace

Distribution parse_distribution(std::string_view name) {
  if (name == "ball") return Distribution::ball;
  if (name == "sphere") return Distribution::sphere;
  if (name == "cube") return Distribution::cube;
  if (name == "gauss") return Distribution::gauss;
  throw Error(ErrorCode::invalid_argument, "unknown distribution '" + std::string(name) + "'");
}

std::string_view distribution_name(Distribution d) {
  switch (d) {
    case Distribution::ball: return "ball";
    case Distribution::sphere: return "sphere";
    case Distribution::cube: return "cube";
    case Distribution::gauss: return "gauss";
  }
  return "?";
}

std::vector<Point3> generate(std::size_t n, Distribution dist, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "point count must be at least 1");
  Stream rng(seed);
  std::vector<Point3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (dist) {
      case Distribution::ball:
        out.push_back(rng.in_ball());
        break;
      case Distribution::sphere: {
        Point3 p;
        double r2 = 0;
        do {
          p = rng.in_ball();
          r2 = p.x * p.x + p.y * p.y + p.z * p.z;
        } while (r2 < 1e-4);
        const double scale = (1.0 + rng.symmetric() * 1e-6) / std::sqrt(r2);
        out.push_back({p.x * scale, p.y * scale, p.z * scale});
        break;
      }
      case Distribution::cube:
        out.push_back({rng.symmetric(), rng.symmetric(), rng.symmetric()});
        break;
      case Distribution::gauss: {
        const double x = rng.gaussian();
        const double y = rng.gaussian();
        out.push_back({x, y, rng.gaussian()});
        break;
      }
    }
  }
  return out;
}

}  // namespace hull3d
