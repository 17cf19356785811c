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

#include "hull3d/serial.hpp"

#include <bit>

#include "hull3d/error.hpp"
#include "hull3d/merge.hpp"

namespace hull3d {

Index hull_recursive(PointStore& store, Index lo, Index hi, MovieBuffer& out, MovieBuffer& scratch) {
  if (hi - lo < 1) throw Error(ErrorCode::invalid_argument, "empty recursion range");
  if (hi - lo == 1) {
    store.set_prev(lo, kNil);
    store.set_next(lo, kNil);
    out[2 * static_cast<std::size_t>(lo)] = kNil;
    return 0;
  }
  const Index mid = merge_split(lo, hi);
  hull_recursive(store, lo, mid, scratch, out);
  hull_recursive(store, mid, hi, scratch, out);
  return merge_movies(store, scratch.slots(), out.slots(), {lo, mid, hi});
}

int recursion_depth(Index n) {
  if (n <= 1) return 0;
  return static_cast<int>(std::bit_width(static_cast<std::uint32_t>(n - 1)));
}

}  // namespace hull3d
