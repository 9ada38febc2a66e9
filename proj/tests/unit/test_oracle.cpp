#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "esnufft/oracle.hpp"
#include "esnufft/transforms.hpp"
#include "test_helpers.hpp"

using namespace esnufft;
using testing_helpers::gaussian;
using testing_helpers::uniform;

TEST_CASE("direct sums of trivial inputs") {
  const std::vector<double> x{0.0};
  const std::vector<cplx> c{1.0};
  const auto f = oracle::direct_type1(1, {x, {}, {}}, c, {9, 1, 1}, 1);
  for (const auto& v : f) CHECK(v == cplx(1.0));
  const auto xs = uniform(20, 1);
  std::vector<cplx> modes(5);
  modes[2] = 1.0;
  const auto cc = oracle::direct_type2(1, {xs, {}, {}}, modes, {5, 1, 1}, -1);
  for (const auto& v : cc) CHECK(v == cplx(1.0));
}

TEST_CASE("direct type 3 at integer targets equals direct type 1 exactly") {
  const auto x = uniform(200, 2), y = uniform(200, 3);
  const auto c = gaussian(200, 4);
  const auto f1 = oracle::direct_type1(2, {x, y, {}}, c, {6, 5, 1}, -1);
  std::vector<double> s, t;
  for (int k2 = -2; k2 <= 2; ++k2)
    for (int k1 = -3; k1 <= 2; ++k1) {
      s.push_back(k1);
      t.push_back(k2);
    }
  const auto f3 = oracle::direct_type3(2, {x, y, {}}, c, {s, t, {}}, -1);
  CHECK(f1 == f3);
}

TEST_CASE("direct type 1 and type 2 are adjoint") {
  const auto x = uniform(150, 5), y = uniform(150, 6), z = uniform(150, 7);
  const auto c = gaussian(150, 8);
  const auto f = gaussian(4 * 5 * 6, 9);
  const oracle::Coords xs{x, y, z};
  const auto ac = oracle::direct_type1(3, xs, c, {4, 5, 6}, 1);
  const auto af = oracle::direct_type2(3, xs, f, {4, 5, 6}, -1);
  cplx lhs = 0.0, rhs = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) lhs += std::conj(f[k]) * ac[k];
  for (std::size_t j = 0; j < c.size(); ++j) rhs += std::conj(af[j]) * c[j];
  CHECK(std::abs(lhs - rhs) <= 1e-14 * std::abs(lhs));
}

TEST_CASE("extended precision subsets agree with the direct sum") {
  const auto x = uniform(500, 10), y = uniform(500, 11);
  const auto c = gaussian(500, 12);
  const auto full = oracle::direct_type1(2, {x, y, {}}, c, {16, 12, 1}, 1);
  const std::vector<std::int64_t> pick{0, 7, 100, 191};
  const auto sub = oracle::direct_type1_subset(2, {x, y, {}}, c, {16, 12, 1}, 1, pick);
  for (std::size_t i = 0; i < pick.size(); ++i)
    CHECK(std::abs(sub[i] - full[pick[i]]) <= 1e-12 * std::abs(full[pick[i]]) + 1e-12);
  const auto full1 = oracle::direct_type1(1, {x, {}, {}}, c, {40, 1, 1}, -1);
  const auto blk = oracle::direct_type1_1d_block(x, c, -20, 40, -1);
  for (int i = 0; i < 40; ++i) CHECK(std::abs(blk[i] - full1[i]) <= 1e-12);
}

TEST_CASE("rel_l2 metric") {
  const std::vector<cplx> a{1.0, cplx(0, 2), 3.0};
  CHECK(oracle::rel_l2(a, a).rel_l2 == 0.0);
  std::vector<cplx> b = a;
  for (auto& v : b) v *= 1.01;
  CHECK(oracle::rel_l2(b, a).rel_l2 == doctest::Approx(0.01));
  const std::vector<cplx> e1{1.0, 0.0}, e2{0.0, 1.0};
  const auto r = oracle::rel_l2(e1, e2);
  CHECK(r.rel_l2 == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.max_abs == 1.0);
  CHECK(r.rounding_floor == doctest::Approx(2 * 1.1e-16));
  CHECK(oracle::rel_l2(e1, e2, 1000).rounding_floor == doctest::Approx(1.1e-13));
  const std::vector<cplx> zero(2);
  CHECK_THROWS_AS(oracle::rel_l2(e1, zero), std::domain_error);
  CHECK_THROWS_AS(oracle::rel_l2(a, e1), std::invalid_argument);
}

TEST_CASE("direct sums guard their work") {
  const std::vector<double> x(20000, 0.0);
  const std::vector<cplx> c(20000, 1.0);
  CHECK_THROWS_AS(oracle::direct_type1(1, {x, {}, {}}, c, {10000, 1, 1}, 1), oracle::GuardError);
}

TEST_CASE("aliasing probe") {
  const std::int64_t n = 32;
  const auto x = uniform(32, 13);
  const auto pts = make_points(x);
  auto probe_at = [&](int w) {
    const double tol = std::pow(10.0, -(w - 1));
    return oracle::aliasing_probe(n, x, 1, [&](std::span<const cplx> c, std::span<cplx> f) {
      TransformOptions o;
      o.tolerance = tol;
      exec_type1(pts, c, make_modes(n), f, o);
    });
  };
  const auto p7 = probe_at(7);
  const auto p8 = probe_at(8);
  for (double v : p7.magnitude) {
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
  }
  CHECK(p7.magnitude.size() == 32 * 32);
  const double ratio = p7.max_error / p8.max_error;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 30.0);

  // Compare with |psi_hat(n - N/2) / psi_hat(N/2)| at the same width.
  const auto params = select_params(1e-6);
  KernelParams fine = params;
  fine.quad_nodes = 400;
  const std::int64_t grid = 64;
  const double alpha = std::numbers::pi * params.width / grid;
  const std::vector<double> ks{static_cast<double>(n / 2), static_cast<double>(grid - n / 2)};
  const auto ft = kernel_ft(fine, alpha, ks);
  const double heur = std::abs(ft[1] / ft[0]);
  CHECK(p7.max_error / heur <= 100.0);
  CHECK(heur / p7.max_error <= 100.0);

  CHECK_THROWS_AS(oracle::aliasing_probe(65, x, 1, {}), oracle::GuardError);
}
