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

#include "hull3d/movie.hpp"

namespace hull3d {

/// Top-down reference solver over [lo, hi). The merged log ends up in `out`
/// at slot 2*lo; `scratch` holds the children's logs. Returns the event count.
Index hull_recursive(PointStore& store, Index lo, Index hi, MovieBuffer& out, MovieBuffer& scratch);

/// Recursion depth of hull_recursive over n points (ceil(log2 n)).
int recursion_depth(Index n);

}  // namespace hull3d
