#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "esnufft/errors.hpp"
#include "esnufft/kernel.hpp"

using namespace esnufft;

TEST_CASE("select_params follows the width recipe") {
  auto p = select_params(1e-6);
  CHECK(p.width == 7);
  CHECK(p.beta == doctest::Approx(16.10).epsilon(1e-14));
  p = select_params(1e-12);
  CHECK(p.width == 13);
  CHECK(p.beta == doctest::Approx(29.90).epsilon(1e-14));
  p = select_params(1e-1);
  CHECK(p.width == 2);
  CHECK(p.beta == doctest::Approx(4.60).epsilon(1e-14));
  CHECK(select_params(1e-15).width == 16);
  CHECK(select_params(2e-7).width == 8);
  for (double tol : {1e-1, 1e-3, 1e-7, 1e-11, 1e-15}) {
    p = select_params(tol);
    CHECK(p.quad_nodes >= static_cast<int>(std::ceil(1.5 * p.width + 2)));
    CHECK(p.gamma > 0.0);
    CHECK(p.gamma <= 1.0);
  }
}

TEST_CASE("select_params at sigma 1.25") {
  const auto p = select_params(1e-6, 1.25);
  CHECK(p.sigma == 1.25);
  CHECK(p.gamma == doctest::Approx(0.976));
  CHECK(p.beta == doctest::Approx(0.976 * std::numbers::pi * p.width * 0.6));
  CHECK(p.width > select_params(1e-6).width);
  CHECK(p.width <= kMaxWidth);
}

TEST_CASE("select_params rejects bad input") {
  CHECK_THROWS_AS(select_params(1e-16), Error);
  CHECK_THROWS_AS(select_params(0.5), Error);
  CHECK_THROWS_AS(select_params(std::nan("")), Error);
  try {
    select_params(1e-20);
  } catch (const Error& e) {
    CHECK(e.status() == Status::bad_tolerance);
    CHECK(std::string(e.what()).find("1e-15") != std::string::npos);
  }
  try {
    select_params(1e-6, 3.0);
  } catch (const Error& e) {
    CHECK(e.status() == Status::argument);
  }
}

TEST_CASE("es_eval shape") {
  const double beta = 16.1;
  CHECK(es_eval(0.0, beta) == 1.0);
  CHECK(es_eval(1.0, beta) == doctest::Approx(std::exp(-beta)));
  CHECK(es_eval(-1.0, beta) == doctest::Approx(std::exp(-beta)));
  CHECK(es_eval(1.0001, beta) == 0.0);
  CHECK(es_eval(-3.0, beta) == 0.0);
  double prev = 1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double z = i / 1000.0;
    const double v = es_eval(z, beta);
    CHECK(v <= prev);
    CHECK(v == es_eval(-z, beta));
    prev = v;
  }
}

TEST_CASE("gauss_legendre_half integrates polynomials exactly") {
  const auto r = gauss_legendre_half(8);  // 16-point rule, exact to degree 31
  REQUIRE(r.nodes.size() == 8);
  long double s0 = 0, s30 = 0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    s0 += 2 * r.weights[i];
    s30 += 2 * r.weights[i] * std::pow(r.nodes[i], 30.0L);
  }
  CHECK(static_cast<double>(s0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(static_cast<double>(s30) == doctest::Approx(2.0 / 31.0).epsilon(1e-14));
  CHECK(std::is_sorted(r.nodes.begin(), r.nodes.end()));
}

TEST_CASE("piecewise polynomial structure and accuracy") {
  const PiecewisePoly p2(params_for_width(2));
  CHECK(p2.pieces() == 2);
  CHECK(p2.degree() == 5);
  for (int w = kMinWidth; w <= kMaxWidth; ++w) {
    const auto params = params_for_width(w);
    const PiecewisePoly poly(params);
    CHECK(poly.degree() == w + 3);
    const double bound = std::max(0.5 * width_tolerance(params), 1e-14);
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      const double z = -1.0 + 2.0 * i / 10000.0;
      worst = std::max(worst, std::abs(poly(z) - es_eval(z, params.beta)));
    }
    CAPTURE(w);
    CHECK(worst <= bound);
    CHECK(poly.max_residual() <= bound);
  }
}

TEST_CASE("piecewise polynomial at z = 0 and across piece boundaries") {
  const auto params = params_for_width(7);
  const PiecewisePoly poly(params);
  CHECK(std::abs(poly(0.0) - 1.0) < std::max(0.5 * width_tolerance(params), 1e-14));
  const double bound = std::max(0.5 * width_tolerance(params), 1e-14);
  for (int m = 1; m < poly.pieces(); ++m) {
    const double zb = -1.0 + 2.0 * m / poly.pieces();
    CHECK(std::abs(poly(zb - 1e-12) - poly(zb + 1e-12)) < 2 * bound);
  }
}

TEST_CASE("eval_row matches direct evaluation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int w : {2, 5, 7, 12, 16}) {
    const auto params = params_for_width(w);
    const PiecewisePoly poly(params);
    const double bound = std::max(0.5 * width_tolerance(params), 1e-14);
    std::vector<double> a(w), b(w);
    for (int t = 0; t < 200; ++t) {
      const double xf = u(rng);
      poly.eval_row(xf, a);
      exact_eval_row(params, xf, b);
      for (int m = 0; m < w; ++m) {
        CHECK(std::abs(a[m] - b[m]) <= bound);
        CHECK(b[m] >= 0.0);
        CHECK(b[m] <= 1.0);
        CHECK(b[m] == doctest::Approx(es_eval(2.0 * (xf + m) / w - 1.0, params.beta)));
      }
    }
  }
}

TEST_CASE("row for a point on a grid node is symmetric for odd w") {
  const auto params = params_for_width(7);
  const PiecewisePoly poly(params);
  std::vector<double> r(7);
  poly.eval_row(0.5, r);
  for (int m = 0; m < 7; ++m) CHECK(r[m] == doctest::Approx(r[6 - m]).epsilon(1e-13));
  CHECK(std::abs(r[3] - 1.0) < 0.5 * width_tolerance(params));
}

TEST_CASE("kernel_ft values") {
  const auto p = select_params(1e-6);
  const double alpha = std::numbers::pi * p.width / 200.0;
  std::vector<double> ks{0.0, 13.7, -13.7, 50.0};
  const auto v = kernel_ft(p, alpha, ks);
  CHECK(v[1] == v[2]);
  // alpha * phi_hat(0), phi_hat(0) from adaptive quadrature at 30 digits.
  CHECK(v[0] == doctest::Approx(alpha * 0.609857940842146692).epsilon(1e-9));
  for (double x : v) CHECK(x > 0.0);
}

TEST_CASE("kernel_ft at large beta approaches the asymptotic peak") {
  KernelParams p = params_for_width(13);
  p.beta = 30.0;
  const auto v = kernel_ft(p, 1.0, std::vector<double>{0.0});
  const double r = v[0] * std::sqrt(30.0 / (2.0 * std::numbers::pi));
  CHECK(r == doctest::Approx(0.987365803450118).epsilon(1e-6));
  CHECK(std::abs(r - 1.0) < 0.05);
}

TEST_CASE("kernel_ft self-convergence under node doubling") {
  for (int w = kMinWidth; w <= kMaxWidth; ++w) {
    KernelParams p = params_for_width(w);
    const std::int64_t N = 100;
    const double n = 2.0 * N;
    const double alpha = std::numbers::pi * w / n;
    std::vector<double> ks;
    for (int k = 0; k <= N / 2; ++k) ks.push_back(k);
    const auto a = kernel_ft(p, alpha, ks);
    KernelParams q = p;
    q.quad_nodes *= 2;
    const auto b = kernel_ft(q, alpha, ks);
    double worst = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    CAPTURE(w);
    CHECK(worst / a[0] < width_tolerance(p));
  }
}

TEST_CASE("fseries_correction") {
  const auto p = select_params(1e-6);
  const auto c = fseries_correction(p, 200, 100);
  REQUIRE(c.size() == 100);
  // centered: index 50 is k = 0, index 0 is k = -50
  CHECK(c[50] == doctest::Approx(0.468493179443963184).epsilon(1e-9));
  CHECK(c[75] == doctest::Approx(0.580628153092781394).epsilon(1e-9));
  CHECK(c[0] == doctest::Approx(1.125405397158413220).epsilon(1e-9));
  for (int k = 1; k < 50; ++k) CHECK(c[50 - k] == c[50 + k]);
  CHECK(*std::min_element(c.begin(), c.end()) == c[50]);

  const auto odd = fseries_correction(p, 200, 7);
  REQUIRE(odd.size() == 7);
  CHECK(odd[3] == c[50]);

  CHECK_THROWS_AS(fseries_correction(p, 150, 100), Error);
}

TEST_CASE("fseries_correction agrees with per-mode cosine sums") {
  for (double tol : {1e-2, 1e-6, 1e-10, 1e-15}) {
    const auto p = select_params(tol);
    const std::int64_t N = 1000, n = 2000;
    const auto c = fseries_correction(p, n, N);
    const double alpha = std::numbers::pi * p.width / n;
    const double h = 2.0 * std::numbers::pi / n;
    std::vector<double> ks;
    for (std::int64_t k = -N / 2; k < N / 2; ++k) ks.push_back(static_cast<double>(k));
    const auto ft = kernel_ft(p, alpha, ks);
    double worst = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i)
      worst = std::max(worst, std::abs(c[i] - h / ft[i]) / std::abs(h / ft[i]));
    CHECK(worst < 1e-13);
  }
}
