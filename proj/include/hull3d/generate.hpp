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

#include <cstdint>
#include <string_view>
#include <vector>

#include "hull3d/geometry.hpp"

namespace hull3d {

enum class Distribution {
  ball,    // uniform in the unit ball
  sphere,  // unit sphere, radius jittered by a factor 1 + u * 1e-6
  cube,    // uniform in [-1, 1]^3
  gauss,   // standard normal per coordinate
};

/// Throws Error(invalid_argument) for unknown names.
Distribution parse_distribution(std::string_view name);
std::string_view distribution_name(Distribution d);

/// Seed-deterministic sample. The stream is std::mt19937_64; a uniform in
/// [-1, 1) takes the top 53 bits of one draw. Ball and sphere use rejection
/// from the cube (sphere normalizes the accepted draw), gauss uses the
/// Marsaglia polar method. Only gauss touches libm (log), everything else is
/// exact IEEE arithmetic plus sqrt.
std::vector<Point3> generate(std::size_t n, Distribution dist, std::uint64_t seed);

}  // namespace hull3d
