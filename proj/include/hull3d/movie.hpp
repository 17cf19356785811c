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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hull3d/geometry.hpp"

namespace hull3d {

/// Position of a point in the x-sorted store.
using Index = std::int32_t;
inline constexpr Index kNil = -1;

/// One record of the master point list: coordinates plus the chain links of the
/// kinetic hull the point currently belongs to.
struct PointRecord {
  Point3 p;
  Index prev = kNil;
  Index next = kNil;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

/// Flat point store. Coordinates are fixed at construction; only the links
/// change afterwards. Concurrent writers must work on disjoint index ranges.
class PointStore {
 public:
  PointStore() = default;
  /// Points must be strictly increasing in x.
  explicit PointStore(std::span<const Point3> x_sorted);

  Index size() const noexcept { return static_cast<Index>(records_.size()); }

  const Point3& point(Index i) const { return records_[i].p; }
  Index prev(Index i) const { return records_[i].prev; }
  Index next(Index i) const { return records_[i].next; }
  void set_prev(Index i, Index v) { records_[i].prev = v; }
  void set_next(Index i, Index v) { records_[i].next = v; }

  std::span<const PointRecord> records() const noexcept { return records_; }

  friend bool operator==(const PointStore&, const PointStore&) = default;

 private:
  std::vector<PointRecord> records_;
};

/// Event time of the triple (a, b, c); +INF if any of them is the sentinel.
inline EventTime event_time(const PointStore& s, Index a, Index b, Index c) {
  if (a == kNil || b == kNil || c == kNil) return kNever;
  return event_time(s.point(a), s.point(b), s.point(c));
}

/// Movie array: 2n event slots. The log of the group whose leftmost point is L
/// starts at slot 2L and is terminated by kNil.
class MovieBuffer {
 public:
  MovieBuffer() = default;
  explicit MovieBuffer(Index points) : slots_(2 * static_cast<std::size_t>(points), kNil) {}

  std::size_t capacity() const noexcept { return slots_.size(); }
  std::span<Index> slots() noexcept { return slots_; }
  std::span<const Index> slots() const noexcept { return slots_; }
  Index operator[](std::size_t i) const { return slots_[i]; }
  Index& operator[](std::size_t i) { return slots_[i]; }

  friend bool operator==(const MovieBuffer&, const MovieBuffer&) = default;

 private:
  std::vector<Index> slots_;
};

/// Events of one group, terminator excluded.
using EventLog = std::span<const Index>;

/// The log of group [left, right), read up to its terminator. Throws if the
/// slice has none.
EventLog log_at(std::span<const Index> slots, Index left, Index right);
inline EventLog log_at(const MovieBuffer& buf, Index left, Index right) {
  return log_at(buf.slots(), left, right);
}

[[noreturn]] void throw_sentinel_act(Index i);

/// Toggle point i in or out of the chain between its recorded neighbours.
/// The point's own links are left untouched, so a deleted point still knows
/// where to reinsert itself.
inline void act(PointStore& s, Index i) {
  const Index p = s.prev(i);
  const Index q = s.next(i);
  if (p == kNil || q == kNil) throw_sentinel_act(i);
  if (s.next(p) != i) {
    s.set_next(p, i);
    s.set_prev(q, i);
  } else {
    s.set_next(p, q);
    s.set_prev(q, p);
  }
}

/// Every point becomes its own one-point hull with an empty log.
void init_base_logs(PointStore& store, MovieBuffer& out);

/// Apply the first `count` events in order.
void replay(PointStore& store, EventLog log, std::size_t count);
/// Undo the first `count` events, last one first.
void rewind_replay(PointStore& store, EventLog log, std::size_t count);

using Face = std::array<Index, 3>;

/// Play the whole log from the group's t = -inf state, emitting
/// (prev, e, next) before each event. Leaves the store at t = +inf.
std::vector<Face> extract_faces(PointStore& store, EventLog log);

}  // namespace hull3d
