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

#include "hull3d/merge.hpp"

#include <array>
#include <string>
#include <utility>

#include "hull3d/error.hpp"

namespace hull3d {

namespace {

// Orientation of the projected triple as t -> -inf. The projected turn is
// turn_xz - t * turn_xy, so the sign is that of turn_xy, or of turn_xz when
// the (x, y) projection is collinear.
bool right_turn(const PointStore& s, Index a, Index b, Index c) {
  if (a == kNil || b == kNil || c == kNil) return false;
  const double xy = turn_xy(s.point(a), s.point(b), s.point(c));
  if (xy != 0) return xy < 0;
  const double xz = turn_xz(s.point(a), s.point(b), s.point(c));
  if (xz == 0) {
    throw Error(ErrorCode::merge_failure, "collinear points " + std::to_string(a) + ", " +
                                              std::to_string(b) + ", " + std::to_string(c));
  }
  return xz < 0;
}

[[noreturn]] void simultaneous(const MergeJob& job) {
  throw Error(ErrorCode::merge_failure, "simultaneous kinetic events in group [" +
                                            std::to_string(job.left) + ", " +
                                            std::to_string(job.right) + ")");
}

using Triple = std::array<Index, 3>;

Triple sorted_triple(Index a, Index b, Index c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return {a, b, c};
}

// The six candidate event times of the forward pass, with the (sorted)
// triple each one belongs to:
//   0: next left-internal event    1: next right-internal event
//   2: (u, next u, v)  3: (prev u, u, v)  4: (u, v, next v)  5: (u, prev v, v)
struct Candidates {
  explicit Candidates(const PointStore& store) : s(store) {}

  void set(int n, Index a, Index b, Index c) {
    t[n] = event_time(s, a, b, c);
    key[n] = sorted_triple(a, b, c);
  }
  void set_internal(int n, Index e) {
    if (e == kNil) {
      t[n] = kNever;
      key[n] = {kNil, kNil, kNil};
    } else {
      set(n, s.prev(e), e, s.next(e));
    }
  }
  // After a left act only u's links can have moved.
  void set_left_bridge(Index u, Index v) {
    set(2, u, s.next(u), v);
    set(3, s.prev(u), u, v);
  }
  void set_right_bridge(Index u, Index v) {
    set(4, u, v, s.next(v));
    set(5, u, s.prev(v), v);
  }
  void set_bridge(Index u, Index v) {
    set_left_bridge(u, v);
    set_right_bridge(u, v);
  }

  const PointStore& s;
  EventTime t[6];
  Triple key[6];
};

[[noreturn]] void overflow(const MergeJob& job) {
  throw Error(ErrorCode::merge_failure, "merged log overflow in group [" + std::to_string(job.left) +
                                            ", " + std::to_string(job.right) + ")");
}

}  // namespace

Bridge find_initial_bridge(const PointStore& s, Index u0, Index v0, Index max_steps) {
  Index u = u0;
  Index v = v0;
  for (Index steps = 0;; ++steps) {
    if (steps > max_steps) {
      throw Error(ErrorCode::merge_failure, "initial bridge walk did not terminate");
    }
    if (right_turn(s, u, v, s.next(v))) {
      v = s.next(v);
    } else if (right_turn(s, s.prev(u), u, v)) {
      u = s.prev(u);
    } else {
      return {u, v};
    }
  }
}

Index merge_movies(PointStore& s, std::span<const Index> in, std::span<Index> out,
                   const MergeJob& job) {
  const Index L = job.left;
  const Index M = job.split;
  const Index R = job.right;
  if (!(0 <= L && L < M && M < R && R <= s.size()) ||
      in.size() < 2 * static_cast<std::size_t>(R) || out.size() < 2 * static_cast<std::size_t>(R)) {
    throw Error(ErrorCode::invalid_argument, "malformed merge job");
  }

  auto [u, v] = find_initial_bridge(s, M - 1, M, R - L);

  // Points are x-sorted, so index order is x order below.
  const std::size_t left_end = 2 * static_cast<std::size_t>(M);
  const std::size_t right_end = 2 * static_cast<std::size_t>(R);
  const std::size_t out_begin = 2 * static_cast<std::size_t>(L);
  std::size_t i = out_begin;
  std::size_t j = left_end;
  std::size_t k = out_begin;

  auto record = [&](Index e) {
    if (k + 1 >= right_end) overflow(job);
    out[k++] = e;
  };

  // Forward pass: sweep time, tracking the bridge (u, v) between the two
  // kinetic hulls and recording every change of the merged hull. A candidate
  // is recomputed only when an input of its triple may have changed.
  Candidates c(s);
  Index a = i < left_end ? in[i] : kNil;
  Index b = j < right_end ? in[j] : kNil;
  c.set_internal(0, a);
  c.set_internal(1, b);
  c.set_bridge(u, v);
  Triple last{kNil, kNil, kNil};
  for (EventTime oldt = -kNever;;) {
    EventTime newt = kNever;
    int winner = -1;
    for (int n = 0; n < 6; ++n) {
      if (c.t[n] > oldt && c.t[n] < newt) {
        newt = c.t[n];
        winner = n;
      }
    }
    if (winner < 0) break;
    // Exact ties between different triples break the sweep (events at equal
    // times would be skipped); they only arise from degenerate input. The
    // triple just processed legitimately reappears at oldt, reversed.
    for (int n = 0; n < 6; ++n) {
      if (n != winner && (c.t[n] == newt || c.t[n] == oldt) && c.key[n] != last) {
        simultaneous(job);
      }
    }
    last = c.key[winner];

    switch (winner) {
      case 0:  // left-internal; hidden once at or right of the bridge foot
        if (a < u) record(a);
        act(s, a);
        ++i;
        a = i < left_end ? in[i] : kNil;
        c.set_internal(0, a);
        c.set_left_bridge(u, v);
        break;
      case 1:
        if (b > v) record(b);
        act(s, b);
        ++j;
        b = j < right_end ? in[j] : kNil;
        c.set_internal(1, b);
        c.set_right_bridge(u, v);
        break;
      case 2:
        u = s.next(u);
        record(u);
        c.set_bridge(u, v);
        break;
      case 3:
        record(u);
        u = s.prev(u);
        c.set_bridge(u, v);
        break;
      case 4:
        record(v);
        v = s.next(v);
        c.set_bridge(u, v);
        break;
      case 5:
        v = s.prev(v);
        record(v);
        c.set_bridge(u, v);
        break;
    }
    oldt = newt;
  }
  out[k] = kNil;

  // Final bridge at t = +inf.
  s.set_next(u, v);
  s.set_prev(v, u);

  // Walk back to t = -inf, restoring links of points hidden under the bridge.
  for (std::size_t e_pos = k; e_pos-- > out_begin;) {
    const Index e = out[e_pos];
    if (e <= u || e >= v) {
      act(s, e);
      if (e == u) {
        u = s.prev(u);
      } else if (e == v) {
        v = s.next(v);
      }
    } else {
      s.set_next(u, e);
      s.set_prev(e, u);
      s.set_prev(v, e);
      s.set_next(e, v);
      if (e < M) {
        u = e;
      } else {
        v = e;
      }
    }
  }
  return static_cast<Index>(k - out_begin);
}

}  // namespace hull3d
