#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "esnufft/bench.hpp"

using namespace esnufft::bench;

TEST_CASE("uniform points are reproducible and in range") {
  const auto a = gen_points(Dist::rand, 100, 1, 42);
  const auto b = gen_points(Dist::rand, 100, 1, 42);
  const auto c = gen_points(Dist::rand, 100, 1, 43);
  CHECK(a.count() == 100);
  CHECK(a.x[0] == b.x[0]);
  CHECK(a.x[0] != c.x[0]);
  for (double v : a.x[0]) {
    CHECK(v >= -std::numbers::pi);
    CHECK(v < std::numbers::pi);
  }
}

TEST_CASE("disc quadrature points lie in the disc") {
  const auto p = gen_points(Dist::disc, 10000, 2, 1);
  CHECK(p.count() == 10000);
  for (std::int64_t j = 0; j < p.count(); ++j)
    CHECK(p.x[0][j] * p.x[0][j] + p.x[1][j] * p.x[1][j] <= std::numbers::pi * std::numbers::pi);
  CHECK_THROWS_AS(gen_points(Dist::disc, 100, 3, 1), std::invalid_argument);
}

TEST_CASE("sphere quadrature points concentrate at the origin") {
  const auto p = gen_points(Dist::sph, 10000, 3, 1);
  CHECK(std::abs(p.count() - 10000) <= 1000);
  const double r_in = 0.01 * std::numbers::pi;
  std::int64_t inner = 0;
  for (std::int64_t j = 0; j < p.count(); ++j) {
    const double r = std::hypot(p.x[0][j], p.x[1][j], p.x[2][j]);
    CHECK(r <= std::numbers::pi);
    if (r <= r_in) ++inner;
  }
  const double uniform_expect = p.count() * std::pow(0.01, 3);
  CHECK(inner >= 50.0 * uniform_expect);
  CHECK(inner > 0);
  CHECK_THROWS_AS(gen_points(Dist::sph, 100, 2, 1), std::invalid_argument);
}

TEST_CASE("Gauss-Legendre nodes") {
  const auto t = gauss_legendre_nodes(5);
  REQUIRE(t.size() == 5);
  CHECK(t[2] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(t[4] == doctest::Approx(0.906179845938664).epsilon(1e-14));
  CHECK(std::is_sorted(t.begin(), t.end()));
}

TEST_CASE("mode counts") {
  CHECK(mode_counts(1000, 1) == std::array<std::int64_t, 3>{1000, 1, 1});
  CHECK(mode_counts(1000, 2) == std::array<std::int64_t, 3>{32, 32, 1});
  CHECK(mode_counts(1000, 3) == std::array<std::int64_t, 3>{10, 10, 10});
}

TEST_CASE("nine-cell sweep at 1e-6") {
  for (int type = 1; type <= 3; ++type)
    for (int dim = 1; dim <= 3; ++dim) {
      BenchSpec s;
      s.type = type;
      s.dim = dim;
      s.m = 1000;
      s.n = 1000;
      const auto rows = run_sweep(s);
      REQUIRE(rows.size() == 1);
      CAPTURE(type);
      CAPTURE(dim);
      CHECK(rows[0].status == 0);
      CHECK(rows[0].ref == "direct");
      CHECK(rows[0].err <= 1e-5);
      const auto& r = rows[0];
      CHECK(r.sort + r.spread + r.interp + r.fft + r.correct <= 1.05 * r.wall);
    }
}

TEST_CASE("sweep rows are deterministic apart from timings") {
  BenchSpec s;
  s.type = 2;
  s.dim = 2;
  s.m = 2000;
  s.n = 400;
  s.tolerances = {1e-3, 1e-9};
  const auto a = run_sweep(s), b = run_sweep(s);
  REQUIRE(a.size() == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].err == b[i].err);
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].n1 == 20);
  }
}

TEST_CASE("errored rows are reported and the sweep continues") {
  BenchSpec s;
  s.type = 1;
  s.dim = 1;
  s.tolerances = {1e-20, 1e-4};
  const auto rows = run_sweep(s);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status == 1);
  CHECK_FALSE(rows[0].message.empty());
  CHECK(std::isnan(rows[0].err));
  CHECK(rows[1].status == 0);
}

TEST_CASE("invalid specs are rejected") {
  BenchSpec s;
  s.reps = 2;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s.reps = 3;
  s.dist = Dist::sph;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  CHECK_THROWS_AS(parse_dist("cube"), std::invalid_argument);
}

TEST_CASE("CSV and JSON lines round-trip") {
  BenchSpec s;
  s.type = 3;
  s.dim = 2;
  s.m = 500;
  s.n = 300;
  s.tolerances = {1e-20, 1e-5, 1e-11};
  s.threads = {1, 2};
  auto rows = run_sweep(s);
  rows[0].message = "quoted \"text\", with comma";
  std::stringstream csv;
  write_csv(csv, rows);
  CHECK(csv.str().rfind(kSchemaHeader, 0) == 0);
  const auto back = read_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows_equal(rows[i], back[i]));

  std::stringstream js;
  write_jsonl(js, rows);
  const auto back2 = read_jsonl(js);
  REQUIRE(back2.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows_equal(rows[i], back2[i]));
}

TEST_CASE("more threads do not slow a spread-heavy task") {
  const int cores = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  BenchSpec s;
  s.type = 1;
  s.dim = 3;
  s.dist = Dist::rand;
  s.m = 300000;
  s.n = 27000;
  s.tolerances = {1e-6};
  s.threads.clear();
  for (int t : {1, 2, 4})
    if (t <= cores) s.threads.push_back(t);
  s.reps = 3;
  const auto rows = run_sweep(s);
  REQUIRE(rows.size() == s.threads.size());
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].wall <= 1.10 * rows[i - 1].wall);
}
