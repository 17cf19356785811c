/* Copyright 2026 The hull3d Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the hull3d library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_destroy function (which accepts NULL). Functions that can fail
 * return a hull3d_status; on failure hull3d_last_error() describes the problem
 * for the calling thread until its next failing call. Index arrays use int32_t
 * positions into the point set the result was computed from. */

#ifndef HULL3D_H_
#define HULL3D_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HULL3D_BUILDING_LIBRARY)
#    define HULL3D_API __declspec(dllexport)
#  else
#    define HULL3D_API __declspec(dllimport)
#  endif
#else
#  define HULL3D_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hull3d_status {
  HULL3D_OK = 0,
  HULL3D_ERR_INVALID_ARGUMENT = 1,
  HULL3D_ERR_PARSE = 2,
  HULL3D_ERR_IO = 3,
  HULL3D_ERR_DEGENERATE = 4,
  HULL3D_ERR_INTERNAL = 5
} hull3d_status;

typedef enum hull3d_distribution {
  HULL3D_DIST_BALL = 0,
  HULL3D_DIST_SPHERE = 1,
  HULL3D_DIST_CUBE = 2,
  HULL3D_DIST_GAUSS = 3
} hull3d_distribution;

typedef enum hull3d_engine {
  HULL3D_ENGINE_SERIAL = 0,   /* top-down recursive solver */
  HULL3D_ENGINE_PARALLEL = 1  /* bottom-up level-synchronous solver */
} hull3d_engine;

typedef enum hull3d_pass { HULL3D_PASS_LOWER = 0, HULL3D_PASS_UPPER = 1 } hull3d_pass;

typedef struct hull3d_points hull3d_points;
typedef struct hull3d_context hull3d_context;
typedef struct hull3d_result hull3d_result;

typedef struct hull3d_stats {
  uint32_t levels;
  uint64_t lower_events;
  uint64_t upper_events;
  int perturbed; /* nonzero when repeated x coordinates were nudged apart */
  double sort_ms;
  double lower_ms;
  double upper_ms;
  double total_ms;
} hull3d_stats;

HULL3D_API const char* hull3d_version(void);
HULL3D_API const char* hull3d_last_error(void);

/* ---- point sets ---- */

/* Copies n points from xyz (3n doubles, interleaved). */
HULL3D_API hull3d_status hull3d_points_create(const double* xyz, size_t n, hull3d_points** out);
HULL3D_API hull3d_status hull3d_points_generate(size_t n, hull3d_distribution dist, uint64_t seed,
                                                hull3d_points** out);
HULL3D_API hull3d_status hull3d_distribution_parse(const char* name, hull3d_distribution* out);
HULL3D_API hull3d_status hull3d_points_read(const char* path, hull3d_points** out);
HULL3D_API hull3d_status hull3d_points_write(const hull3d_points* points, const char* path);
HULL3D_API size_t hull3d_points_count(const hull3d_points* points);
/* 3 * count doubles, valid until the handle is destroyed. */
HULL3D_API const double* hull3d_points_data(const hull3d_points* points);
HULL3D_API void hull3d_points_destroy(hull3d_points* points);

/* ---- solver contexts ----
 * A context owns the engine choice and, for the parallel engine, a worker
 * pool reused across calls. workers == 0 selects HULL3D_WORKERS or the
 * hardware concurrency. */

HULL3D_API hull3d_status hull3d_context_create(hull3d_engine engine, unsigned workers,
                                               hull3d_context** out);
HULL3D_API unsigned hull3d_context_workers(const hull3d_context* ctx);
HULL3D_API void hull3d_context_destroy(hull3d_context* ctx);

/* ---- hulls ---- */

HULL3D_API hull3d_status hull3d_compute(hull3d_context* ctx, const hull3d_points* points,
                                        hull3d_result** out);

/* Facets by brute-force enumeration, oriented outward. O(n^4); meant for
 * verification of small inputs. Statistics of the result are zero. */
HULL3D_API hull3d_status hull3d_oracle_hull(const hull3d_points* points, hull3d_result** out);

HULL3D_API size_t hull3d_result_vertex_count(const hull3d_result* result);
HULL3D_API const int32_t* hull3d_result_vertices(const hull3d_result* result);
HULL3D_API size_t hull3d_result_face_count(const hull3d_result* result);
/* 3 * face_count indices; each face is counterclockwise seen from outside. */
HULL3D_API const int32_t* hull3d_result_faces(const hull3d_result* result);
HULL3D_API void hull3d_result_stats(const hull3d_result* result, hull3d_stats* out);
/* Wall time of every merge level of one pass (parallel engine only). */
HULL3D_API size_t hull3d_result_level_count(const hull3d_result* result, hull3d_pass pass);
HULL3D_API const double* hull3d_result_level_ms(const hull3d_result* result, hull3d_pass pass);
/* Nonzero when both results have the same faces as unordered triples. */
HULL3D_API int hull3d_result_same_faces(const hull3d_result* a, const hull3d_result* b);
HULL3D_API hull3d_status hull3d_result_write_faces(const hull3d_result* result, const char* path);
HULL3D_API hull3d_status hull3d_result_write_obj(const hull3d_result* result,
                                                 const hull3d_points* points, const char* path);
HULL3D_API void hull3d_result_destroy(hull3d_result* result);

/* ---- verification ----
 * Runs the lower pass of the bottom-up engine and, after every level, checks
 * each merged group at `times` random instants against an independent 2D
 * hull of the projected group. *checks and *failures receive the number of
 * comparisons made and failed. */
HULL3D_API hull3d_status hull3d_check_movie(const hull3d_points* points, unsigned times,
                                            uint64_t seed, int all_levels, size_t* checks,
                                            size_t* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HULL3D_H_ */
