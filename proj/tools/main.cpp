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

// hull3d command-line driver. Talks to the library only through hull3d.h.

#include <hull3d/hull3d.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitDegenerate = 3;

struct PointsDeleter {
  void operator()(hull3d_points* p) const { hull3d_points_destroy(p); }
};
struct ContextDeleter {
  void operator()(hull3d_context* c) const { hull3d_context_destroy(c); }
};
struct ResultDeleter {
  void operator()(hull3d_result* r) const { hull3d_result_destroy(r); }
};
using Points = std::unique_ptr<hull3d_points, PointsDeleter>;
using Context = std::unique_ptr<hull3d_context, ContextDeleter>;
using Result = std::unique_ptr<hull3d_result, ResultDeleter>;

// Thrown to unwind to main with an exit code after the message is printed.
struct Exit {
  int code;
};

void check(hull3d_status status, const std::string& what) {
  if (status == HULL3D_OK) return;
  std::cerr << "error: " << what << ": " << hull3d_last_error() << "\n";
  throw Exit{status == HULL3D_ERR_DEGENERATE ? kExitDegenerate : kExitUsage};
}

Points generate_points(std::size_t n, hull3d_distribution dist, std::uint64_t seed) {
  hull3d_points* p = nullptr;
  check(hull3d_points_generate(n, dist, seed, &p), "generate");
  return Points(p);
}

hull3d_distribution parse_dist(const std::string& name) {
  hull3d_distribution d{};
  check(hull3d_distribution_parse(name.c_str(), &d), "distribution");
  return d;
}

Context make_context(hull3d_engine engine, unsigned workers) {
  hull3d_context* c = nullptr;
  check(hull3d_context_create(engine, workers, &c), "context");
  return Context(c);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// ---- generate ----

struct GenerateArgs {
  std::size_t n = 0;
  std::string dist = "ball";
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  const Points pts = generate_points(a.n, parse_dist(a.dist), a.seed);
  check(hull3d_points_write(pts.get(), a.out.c_str()), "write " + a.out);
  return kExitOk;
}

// ---- hull ----

struct HullArgs {
  std::string in;
  std::string out;
  std::string obj;
  std::string backend = "parallel";
  unsigned workers = 0;
};

int cmd_hull(const HullArgs& a) {
  hull3d_points* raw = nullptr;
  check(hull3d_points_read(a.in.c_str(), &raw), "read " + a.in);
  const Points pts(raw);
  const Context ctx = make_context(
      a.backend == "serial" ? HULL3D_ENGINE_SERIAL : HULL3D_ENGINE_PARALLEL, a.workers);

  hull3d_result* res = nullptr;
  check(hull3d_compute(ctx.get(), pts.get(), &res), "hull");
  const Result result(res);
  check(hull3d_result_write_faces(result.get(), a.out.c_str()), "write " + a.out);
  if (!a.obj.empty()) {
    check(hull3d_result_write_obj(result.get(), pts.get(), a.obj.c_str()), "write " + a.obj);
  }

  hull3d_stats stats{};
  hull3d_result_stats(result.get(), &stats);
  std::cerr << "n=" << hull3d_points_count(pts.get())
            << " h=" << hull3d_result_vertex_count(result.get())
            << " F=" << hull3d_result_face_count(result.get()) << " levels=" << stats.levels
            << " ms=" << stats.total_ms << " backend=" << a.backend
            << " workers=" << hull3d_context_workers(ctx.get());
  if (stats.perturbed) std::cerr << " perturbed=yes";
  std::cerr << "\n";
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::size_t max_n = 128;
  unsigned seeds = 200;
  std::vector<std::string> dists{"ball", "sphere", "gauss"};
  unsigned snapshots = 10;
  unsigned workers = 0;
  std::string dump_dir = ".";
};

void dump_counterexample(const VerifyArgs& a, const hull3d_points* pts, const hull3d_result* got,
                         const hull3d_result* want) {
  const std::filesystem::path dir(a.dump_dir);
  std::filesystem::create_directories(dir);
  const auto points = (dir / "counterexample_points.txt").string();
  const auto ours = (dir / "counterexample_faces.txt").string();
  const auto oracle = (dir / "counterexample_oracle_faces.txt").string();
  hull3d_points_write(pts, points.c_str());
  if (got) hull3d_result_write_faces(got, ours.c_str());
  if (want) hull3d_result_write_faces(want, oracle.c_str());
  std::cerr << "counterexample written to " << points << ", " << ours << ", " << oracle << "\n";
}

int cmd_verify(const VerifyArgs& a) {
  const Context serial = make_context(HULL3D_ENGINE_SERIAL, 1);
  const Context parallel = make_context(HULL3D_ENGINE_PARALLEL, a.workers);
  std::size_t cases = 0;
  std::size_t snapshots = 0;
  for (const std::string& name : a.dists) {
    const hull3d_distribution dist = parse_dist(name);
    for (std::size_t n = 4; n <= a.max_n; n *= 2) {
      for (unsigned seed = 0; seed < a.seeds; ++seed) {
        const Points pts = generate_points(n, dist, seed);
        hull3d_result* raw = nullptr;
        if (hull3d_oracle_hull(pts.get(), &raw) != HULL3D_OK) {
          std::cerr << "oracle rejected " << name << " n=" << n << " seed=" << seed << ": "
                    << hull3d_last_error() << "\n";
          dump_counterexample(a, pts.get(), nullptr, nullptr);
          return kExitVerify;
        }
        const Result oracle(raw);
        for (hull3d_context* ctx : {serial.get(), parallel.get()}) {
          raw = nullptr;
          const hull3d_status st = hull3d_compute(ctx, pts.get(), &raw);
          const Result got(raw);
          if (st != HULL3D_OK || !hull3d_result_same_faces(got.get(), oracle.get())) {
            std::cerr << "mismatch: " << name << " n=" << n << " seed=" << seed << " engine="
                      << (ctx == serial.get() ? "serial" : "parallel");
            if (st != HULL3D_OK) std::cerr << " (" << hull3d_last_error() << ")";
            std::cerr << "\n";
            dump_counterexample(a, pts.get(), got.get(), oracle.get());
            return kExitVerify;
          }
        }
        std::size_t checks = 0;
        std::size_t failures = 0;
        const hull3d_status st =
            hull3d_check_movie(pts.get(), a.snapshots, seed, 0, &checks, &failures);
        if (st != HULL3D_OK || failures != 0) {
          std::cerr << "kinetic snapshot failure: " << name << " n=" << n << " seed=" << seed
                    << " failures=" << failures << "\n";
          dump_counterexample(a, pts.get(), nullptr, oracle.get());
          return kExitVerify;
        }
        snapshots += checks;
        ++cases;
      }
    }
  }
  std::cout << "verified " << cases << " inputs (" << snapshots << " snapshots), all match\n";
  return kExitOk;
}

// ---- bench ----

struct BenchArgs {
  int min_exp = 2;
  int max_exp = 23;
  unsigned reps = 5;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string dist = "ball";
  std::string csv;
  std::string levels_csv;
};

struct Timing {
  double median_ms = 0;
  Result last;
};

Timing time_hull(hull3d_context* ctx, const hull3d_points* pts, unsigned reps) {
  Timing t;
  std::vector<double> samples;
  for (unsigned r = 0; r <= reps; ++r) {  // r == 0 is the warmup
    hull3d_result* raw = nullptr;
    const auto start = std::chrono::steady_clock::now();
    const hull3d_status st = hull3d_compute(ctx, pts, &raw);
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    Result res(raw);
    check(st, "hull");
    if (r > 0) samples.push_back(ms.count());
    t.last = std::move(res);
  }
  t.median_ms = median(samples);
  return t;
}

int cmd_bench(const BenchArgs& a) {
  if (a.min_exp < 2 || a.max_exp > 26 || a.min_exp > a.max_exp) {
    std::cerr << "error: exponents must satisfy 2 <= min-exp <= max-exp <= 26\n";
    return kExitUsage;
  }
  if (a.reps < 1) {
    std::cerr << "error: --reps must be at least 1\n";
    return kExitUsage;
  }
  const hull3d_distribution dist = parse_dist(a.dist);
  const Context serial = make_context(HULL3D_ENGINE_SERIAL, 1);
  const Context parallel = make_context(HULL3D_ENGINE_PARALLEL, a.workers);
  const unsigned workers = hull3d_context_workers(parallel.get());

  std::ofstream csv(a.csv);
  if (!csv) {
    std::cerr << "error: cannot open " << a.csv << "\n";
    return kExitUsage;
  }
  std::ofstream levels;
  if (!a.levels_csv.empty()) {
    levels.open(a.levels_csv);
    if (!levels) {
      std::cerr << "error: cannot open " << a.levels_csv << "\n";
      return kExitUsage;
    }
    levels << "n,pass,level,ms\n";
  }

  csv << "n,serial_ms,parallel_ms,speedup,workers,reps\n";
  char line[256];
  for (int e = a.min_exp; e <= a.max_exp; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const Points pts = generate_points(n, dist, a.seed);
    const Timing s = time_hull(serial.get(), pts.get(), a.reps);
    const Timing p = time_hull(parallel.get(), pts.get(), a.reps);
    const double speedup = p.median_ms > 0 ? s.median_ms / p.median_ms : 0.0;
    std::snprintf(line, sizeof line, "%zu,%.6f,%.6f,%.3f,%u,%u\n", n, s.median_ms, p.median_ms,
                  speedup, workers, a.reps);
    csv << line;
    csv.flush();
    std::cerr << line;
    if (levels) {
      for (hull3d_pass pass : {HULL3D_PASS_LOWER, HULL3D_PASS_UPPER}) {
        const std::size_t count = hull3d_result_level_count(p.last.get(), pass);
        const double* ms = hull3d_result_level_ms(p.last.get(), pass);
        for (std::size_t l = 0; l < count; ++l) {
          std::snprintf(line, sizeof line, "%zu,%s,%zu,%.6f\n", n,
                        pass == HULL3D_PASS_LOWER ? "lower" : "upper", l + 1, ms[l]);
          levels << line;
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3D convex hulls by bottom-up kinetic divide and conquer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hull3d_version()));

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a random point set");
  generate->add_option("--n", gen.n, "Number of points")->required()->check(CLI::PositiveNumber);
  generate->add_option("--dist", gen.dist, "ball, sphere, cube or gauss")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output point file")->required();

  HullArgs hull;
  auto* hull_cmd = app.add_subcommand("hull", "Compute the hull of a point file");
  hull_cmd->add_option("--in", hull.in, "Input point file")->required();
  hull_cmd->add_option("--out", hull.out, "Output face file")->required();
  hull_cmd->add_option("--obj", hull.obj, "Optional OBJ export");
  hull_cmd->add_option("--backend", hull.backend, "serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}))
      ->capture_default_str();
  hull_cmd->add_option("--workers", hull.workers, "Worker threads (default: HULL3D_WORKERS or all cores)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check hulls against brute force on random inputs");
  verify->add_option("--max-n", ver.max_n, "Largest size (sizes double from 4)")
      ->check(CLI::Range(4, 512))
      ->capture_default_str();
  verify->add_option("--seeds", ver.seeds, "Seeds per size and distribution")->capture_default_str();
  verify->add_option("--dists", ver.dists, "Distributions to sample")->delimiter(',');
  verify->add_option("--snapshots", ver.snapshots, "Kinetic snapshots per input")
      ->capture_default_str();
  verify->add_option("--workers", ver.workers, "Worker threads for the parallel engine");
  verify->add_option("--dump-dir", ver.dump_dir, "Where to write a counterexample")
      ->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time serial and parallel engines over doubling n");
  bench_cmd->add_option("--min-exp", bench.min_exp, "Smallest n is 2^min-exp")->capture_default_str();
  bench_cmd->add_option("--max-exp", bench.max_exp, "Largest n is 2^max-exp")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Timed repetitions after one warmup")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers, "Worker threads for the parallel engine");
  bench_cmd->add_option("--dist", bench.dist, "Input distribution")->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "Output CSV")->required();
  bench_cmd->add_option("--levels-csv", bench.levels_csv, "Per-level timings of the parallel engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*hull_cmd) return cmd_hull(hull);
    if (*verify) return cmd_verify(ver);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
