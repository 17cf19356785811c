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

// Runs the command-line tool as a subprocess.
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hull3d_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const fs::path err = work_dir() / "stderr.txt";
  const std::string cmd =
      std::string("\"") + HULL3D_CLI + "\" " + args + " >/dev/null 2>\"" + err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(err);
  std::stringstream text;
  text << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, text.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path write(const char* name, const std::string& text) {
  const fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("hull of a tetrahedron") {
  const fs::path in = write("tet.txt", "# tetrahedron\n0 0 0\n1 0 0\n0 1 0.2\n0.3 0.3 1\n");
  const fs::path out = work_dir() / "tet_faces.txt";
  const fs::path obj = work_dir() / "tet.obj";
  for (const char* backend : {"serial", "parallel"}) {
    const Run r = run("hull --in " + in.string() + " --out " + out.string() + " --obj " +
                      obj.string() + " --backend " + backend + " --workers 2");
    CHECK(r.status == 0);
    CHECK(lines(out).size() == 4);
    CHECK(r.err.find("h=4") != std::string::npos);
    CHECK(lines(obj).size() == 8);
  }
}

TEST_CASE("empty and malformed input") {
  const fs::path empty = write("empty.txt", "");
  Run r = run("hull --in " + empty.string() + " --out " + (work_dir() / "x.txt").string());
  CHECK(r.status == 1);
  CHECK(r.err.find("no points") != std::string::npos);

  const fs::path bad = write("bad.txt", "1 2 3\n1 2 x\n");
  r = run("hull --in " + bad.string() + " --out " + (work_dir() / "x.txt").string());
  CHECK(r.status == 1);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(run("hull --bogus").status == 1);
  CHECK(run("").status == 1);
  CHECK(run("--help").status == 0);
}

TEST_CASE("degenerate input exits with 3") {
  const fs::path flat = write("flat.txt", "0 0 0\n1 0 0\n0 1 0\n1 1 0\n2 3 0\n");
  const Run r = run("hull --in " + flat.string() + " --out " + (work_dir() / "x.txt").string());
  CHECK(r.status == 3);
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("generate is deterministic") {
  const fs::path a = work_dir() / "a.txt";
  const fs::path b = work_dir() / "b.txt";
  CHECK(run("generate --n 100 --dist sphere --seed 4 --out " + a.string()).status == 0);
  CHECK(run("generate --n 100 --dist sphere --seed 4 --out " + b.string()).status == 0);
  CHECK(lines(a).size() == 100);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("generate --n 10 --dist torus --out " + a.string()).status == 1);

  const fs::path faces = work_dir() / "sphere_faces.txt";
  CHECK(run("hull --in " + a.string() + " --out " + faces.string()).status == 0);
}

TEST_CASE("small verify run") {
  const Run r = run("verify --max-n 16 --seeds 3 --dump-dir " + work_dir().string());
  CHECK(r.status == 0);
}

TEST_CASE("bench CSV") {
  const fs::path csv = work_dir() / "bench.csv";
  const fs::path levels = work_dir() / "levels.csv";
  REQUIRE(run("bench --min-exp 2 --max-exp 6 --reps 1 --workers 2 --csv " + csv.string() +
              " --levels-csv " + levels.string())
              .status == 0);
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "n,serial_ms,parallel_ms,speedup,workers,reps");
  long previous = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    long n = 0;
    double serial = 0, parallel = 0, speedup = 0;
    int workers = 0, reps = 0;
    REQUIRE(std::sscanf(rows[i].c_str(), "%ld,%lf,%lf,%lf,%d,%d", &n, &serial, &parallel, &speedup,
                        &workers, &reps) == 6);
    CHECK(n == 1L << (i + 1));
    CHECK(n > previous);
    previous = n;
    CHECK(serial >= 0);
    CHECK(parallel >= 0);
    CHECK(workers == 2);
    CHECK(reps == 1);
    if (parallel > 0 && serial > 0) {
      // Both times are printed to 1e-6 ms, so allow for that rounding.
      const double ratio = serial / parallel;
      const double slack = 5e-4 + ratio * 1e-6 * (1 / serial + 1 / parallel);
      CHECK(std::abs(speedup - ratio) <= slack);
    }
  }
  const auto level_rows = lines(levels);
  REQUIRE(!level_rows.empty());
  CHECK(level_rows[0] == "n,pass,level,ms");
}
