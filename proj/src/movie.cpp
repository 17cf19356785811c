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

#include "hull3d/movie.hpp"

#include <string>

#include "hull3d/error.hpp"

namespace hull3d {

PointStore::PointStore(std::span<const Point3> x_sorted) {
  if (x_sorted.size() >= static_cast<std::size_t>(INT32_MAX / 2)) {
    throw Error(ErrorCode::invalid_argument, "too many points");
  }
  records_.reserve(x_sorted.size());
  for (std::size_t i = 0; i < x_sorted.size(); ++i) {
    if (i > 0 && !(x_sorted[i - 1].x < x_sorted[i].x)) {
      throw Error(ErrorCode::invalid_argument,
                  "point store requires strictly increasing x (index " + std::to_string(i) + ")");
    }
    records_.push_back({x_sorted[i], kNil, kNil});
  }
}

EventLog log_at(std::span<const Index> slots, Index left, Index right) {
  const std::size_t begin = 2 * static_cast<std::size_t>(left);
  const std::size_t end = 2 * static_cast<std::size_t>(right);
  if (left < 0 || left >= right || end > slots.size()) {
    throw Error(ErrorCode::invalid_argument, "log group out of range");
  }
  for (std::size_t i = begin; i < end; ++i) {
    if (slots[i] == kNil) return slots.subspan(begin, i - begin);
  }
  throw Error(ErrorCode::merge_failure,
              "event log at offset " + std::to_string(begin) + " has no terminator");
}

void throw_sentinel_act(Index i) {
  throw Error(ErrorCode::merge_failure,
              "act on point " + std::to_string(i) + " with a sentinel neighbour");
}

void init_base_logs(PointStore& store, MovieBuffer& out) {
  if (out.capacity() < 2 * static_cast<std::size_t>(store.size())) {
    throw Error(ErrorCode::invalid_argument, "movie buffer smaller than 2n");
  }
  for (Index i = 0; i < store.size(); ++i) {
    store.set_prev(i, kNil);
    store.set_next(i, kNil);
    out[2 * static_cast<std::size_t>(i)] = kNil;
    out[2 * static_cast<std::size_t>(i) + 1] = kNil;
  }
}

void replay(PointStore& store, EventLog log, std::size_t count) {
  if (count > log.size()) throw Error(ErrorCode::invalid_argument, "replay past end of log");
  for (std::size_t e = 0; e < count; ++e) act(store, log[e]);
}

void rewind_replay(PointStore& store, EventLog log, std::size_t count) {
  if (count > log.size()) throw Error(ErrorCode::invalid_argument, "rewind past end of log");
  for (std::size_t e = count; e-- > 0;) act(store, log[e]);
}

std::vector<Face> extract_faces(PointStore& store, EventLog log) {
  std::vector<Face> faces;
  faces.reserve(log.size());
  for (const Index e : log) {
    faces.push_back({store.prev(e), e, store.next(e)});
    act(store, e);
  }
  return faces;
}

}  // namespace hull3d
