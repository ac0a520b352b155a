// Copyright 2026 The jetcalc Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "golden.hpp"
#include "jetcalc/cache.hpp"
#include "jetcalc/cli.hpp"
#include "jetcalc/format.hpp"

using namespace jetcalc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("jetcalc-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("golden files") {
  const auto cases = golden::load_cases(JETCALC_GOLDEN_DIR);
  REQUIRE_FALSE(cases.empty());
  for (const golden::Case& c : cases) {
    const Result r = cli(c.args);
    CHECK_MESSAGE(r.code == c.exit_code, c.name);
    CHECK_MESSAGE(r.out == c.expected, c.name);
  }
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::vector<std::string> args{"inv-basis", "--k", "3", "--r", "2", "--m", "5", "--no-cache", "--format", "json"};
  CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("documented examples through the front end") {
  const Result fdb = cli({"faa-di-bruno", "--k", "3", "--format", "json"});
  CHECK(fdb.code == kExitOk);
  const auto m = nlohmann::json::parse(fdb.out);
  CHECK(m.size() == 3);
  CHECK(m[1][2] == "2*a[1]*a[2]");

  const Result check = cli({"check", "--poly", "x[1,1]", "--group", "Gk"});
  CHECK(check.out == "relative_invariant weight 1\n");

  const Result basis = cli({"inv-basis", "--k", "2", "--r", "2", "--m", "3", "--no-cache", "--format", "json"});
  CHECK(nlohmann::json::parse(basis.out)["basis"].size() == 5);
}

TEST_CASE("emitted polynomials parse back") {
  const Result r = cli({"qseq", "--k", "3", "--r", "3"});
  std::istringstream lines(r.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) CHECK(to_string(parse_polynomial(line)) == line);
  CHECK(n > 0);
}

TEST_CASE("usage errors") {
  Result r = cli({"hilbert", "--k", "2", "--r", "2", "--m-max", "4", "--bogus"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--bogus") != std::string::npos);
  r = cli({"hilbert", "--k", "0", "--r", "2", "--m-max", "4"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--k") != std::string::npos);
  r = cli({"frobnicate"});
  CHECK(r.code == kExitUsage);
  r = cli({});
  CHECK(r.code == kExitUsage);
  r = cli({"check", "--poly", "x[1,1"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--poly") != std::string::npos);
  r = cli({"monomials", "--k", "2", "--r", "1"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--m") != std::string::npos);
  r = cli({"hilbert", "--k", "2", "--r", "2", "--m-max", "4", "--format", "xml"});
  CHECK(r.code == kExitUsage);
  r = cli({"inv-basis", "--k", "2", "--r", "2", "--m-range", "5:3", "--no-cache"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--m-range") != std::string::npos);
}

TEST_CASE("help") {
  const Result r = cli({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("inv-basis") != std::string::npos);
}

TEST_CASE("domain errors carry the error name") {
  Result r = cli({"picard", "--poly", "x[1,1]", "--poly", "2*x[1,1]"});
  CHECK(r.code == kExitDomainError);
  CHECK(r.err.find("dependent-solutions") != std::string::npos);
  r = cli({"qseq", "--k", "3", "--r", "1"});
  CHECK(r.code == kExitDomainError);
  CHECK(r.err.find("rank-error") != std::string::npos);
  r = cli({"bracket", "--poly", "x[1,1]+x[1,2]", "--poly", "x[2,1]"});
  CHECK(r.err.find("non-homogeneous") != std::string::npos);
  r = cli({"pullback", "--poly", "x[1,3]", "--k", "2"});
  CHECK(r.err.find("order-overflow") != std::string::npos);
  r = cli({"pullback", "--poly", "x[1,1]", "--phi", "0,1"});
  CHECK(r.err.find("non-invertible") != std::string::npos);
  r = cli({"coord-change", "--k", "2", "--r", "2", "--j", "3", "--s", "1"});
  CHECK(r.err.find("bounds-error") != std::string::npos);
  r = cli({"growth-check", "--k", "2", "--r", "2", "--m-max", "3"});
  CHECK(r.err.find("insufficient-range") != std::string::npos);
  r = cli({"inv-basis", "--k", "3", "--r", "3", "--m", "10", "--size-limit", "10", "--no-cache"});
  CHECK(r.code == kExitDomainError);
  CHECK(r.err.find("instance-too-large") != std::string::npos);
}

TEST_CASE("poly file input") {
  TempDir dir;
  const fs::path file = dir.path / "polys.txt";
  std::ofstream(file) << "# two solutions\nx[1,1]\n\nx[2,1]\n";
  const Result a = cli({"wronskian", "--poly-file", file.string()});
  const Result b = cli({"wronskian", "--poly", "x[1,1]", "--poly", "x[2,1]"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Result missing = cli({"wronskian", "--poly-file", (dir.path / "nope").string()});
  CHECK(missing.code == kExitDomainError);
  CHECK(missing.err.find("io-error") != std::string::npos);
}

TEST_CASE("cache round trip and warm path") {
  TempDir dir;
  const std::vector<std::string> args{"inv-basis", "--k", "2", "--r", "2", "--m", "4", "--format", "json",
                                      "--cache-dir", dir.path.string(), "--verbose"};
  const Result cold = cli(args);
  CHECK(cold.code == kExitOk);
  CHECK(cold.err.find("eliminated") != std::string::npos);
  const fs::path entry = dir.path / "basis_k2_r2_m4_Uk.json";
  REQUIRE(fs::exists(entry));
  const Result warm = cli(args);
  CHECK(warm.err.find("cache hit") != std::string::npos);
  CHECK(warm.err.find("eliminated") == std::string::npos);
  CHECK(warm.out == cold.out);

  // Store then load gives identical bytes.
  const BasisCache cache(dir.path);
  const auto loaded = cache.load({2, 2, 4, Group::unipotent});
  REQUIRE(loaded.has_value());
  CHECK(loaded->to_json().dump(2) + "\n" == cold.out);
  const std::string before = golden::slurp(entry);
  cache.store(*loaded);
  CHECK(golden::slurp(entry) == before);
  for (const auto& f : fs::directory_iterator(dir.path)) CHECK(f.path().extension() == ".json");
}

TEST_CASE("tampered cache entries are recomputed") {
  TempDir dir;
  const std::vector<std::string> args{"inv-basis", "--k", "2", "--r", "2", "--m", "3", "--cache-dir",
                                      dir.path.string(), "--verbose"};
  const Result first = cli(args);
  const fs::path entry = dir.path / "basis_k2_r2_m3_Uk.json";
  std::string text = golden::slurp(entry);
  const auto pos = text.find("\"coeff\":\"1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "\"coeff\":\"7\"");
  std::ofstream(entry, std::ios::binary | std::ios::trunc) << text;

  const Result second = cli(args);
  CHECK(second.code == kExitOk);
  CHECK(second.err.find("warning: cache entry") != std::string::npos);
  CHECK(second.err.find("eliminated") != std::string::npos);
  CHECK(second.out == first.out);
  // The rewritten entry is trusted again.
  const Result third = cli(args);
  CHECK(third.err.find("cache hit") != std::string::npos);

  std::ofstream(entry, std::ios::binary | std::ios::trunc) << "{not json";
  const Result fourth = cli(args);
  CHECK(fourth.err.find("warning: cache entry") != std::string::npos);
  CHECK(fourth.out == first.out);
}

TEST_CASE("cache directory from the environment") {
  TempDir dir;
  ::setenv("JETCALC_CACHE", dir.path.c_str(), 1);
  const Result r = cli({"inv-basis", "--k", "2", "--r", "1", "--m", "2"});
  ::unsetenv("JETCALC_CACHE");
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(dir.path / "basis_k2_r1_m2_Uk.json"));
}

TEST_CASE("unwritable cache surfaces the path") {
  TempDir dir;
  const fs::path blocker = dir.path / "file";
  std::ofstream(blocker) << "x";
  const Result r = cli({"inv-basis", "--k", "2", "--r", "1", "--m", "2", "--cache-dir", (blocker / "sub").string()});
  CHECK(r.code == kExitDomainError);
  CHECK(r.err.find("io-error") != std::string::npos);
  CHECK(r.err.find((blocker / "sub").string()) != std::string::npos);
}

TEST_CASE("m range runs in order") {
  TempDir dir;
  const Result range = cli({"inv-basis", "--k", "2", "--r", "2", "--m-range", "1:4", "--cache-dir", dir.path.string()});
  std::string joined;
  for (int m = 1; m <= 4; ++m)
    joined += cli({"inv-basis", "--k", "2", "--r", "2", "--m", std::to_string(m), "--no-cache"}).out;
  CHECK(range.code == kExitOk);
  CHECK(range.out == joined);
}
