#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "esnufft/errors.hpp"
#include "esnufft/fft_backend.hpp"

using namespace esnufft;

namespace {

FftPlanKey key1(std::int64_t n, Direction d) {
  GridShape g;
  g.sizes[0] = n;
  return make_plan_key(g, d, 1);
}

std::vector<cplx> gaussian(std::int64_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> c(m);
  for (auto& v : c) v = {g(rng), g(rng)};
  return c;
}

}  // namespace

TEST_CASE("fft of a delta and of a constant") {
  std::vector<cplx> a{1, 0, 0, 0};
  fft_exec(key1(4, Direction::forward), a);
  for (const auto& v : a) CHECK(v == cplx(1.0));
  std::vector<cplx> b{1, 1, 1, 1};
  fft_exec(key1(4, Direction::forward), b);
  CHECK(b[0] == cplx(4.0));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(b[i]) < 1e-15);
}

TEST_CASE("forward fft matches the direct sum with a positive exponent") {
  const int n = 60;
  const auto x = gaussian(n, 1);
  std::vector<cplx> y = x;
  fft_exec(key1(n, Direction::forward), y);
  double num = 0.0, den = 0.0;
  for (int k = 0; k < n; ++k) {
    std::complex<long double> s = 0;
    for (int l = 0; l < n; ++l) {
      const long double ph = 2.0L * std::numbers::pi_v<long double> * l * k / n;
      s += std::complex<long double>(x[l].real(), x[l].imag()) *
           std::complex<long double>(std::cos(ph), std::sin(ph));
    }
    const cplx ref(static_cast<double>(s.real()), static_cast<double>(s.imag()));
    num += std::norm(y[k] - ref);
    den += std::norm(ref);
  }
  CHECK(std::sqrt(num / den) <= 1e-13);
}

TEST_CASE("forward then backward is n times the identity") {
  GridShape g;
  g.dim = 3;
  g.sizes = {12, 10, 9};
  const auto x = gaussian(g.total(), 2);
  auto y = x;
  fft_exec(make_plan_key(g, Direction::forward, 1), y);
  fft_exec(make_plan_key(g, Direction::backward, 1), y);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += std::norm(y[i] / double(g.total()) - x[i]);
    den += std::norm(x[i]);
  }
  CHECK(std::sqrt(num / den) <= 1e-13);
}

TEST_CASE("2D fft has dimension 1 fastest") {
  GridShape g;
  g.dim = 2;
  g.sizes = {4, 3, 1};
  std::vector<cplx> a(12);
  a[1] = 1.0;  // l1 = 1, l2 = 0
  fft_exec(make_plan_key(g, Direction::forward, 1), a);
  for (int k2 = 0; k2 < 3; ++k2)
    for (int k1 = 0; k1 < 4; ++k1) {
      const cplx want = std::polar(1.0, 2 * std::numbers::pi * k1 / 4);
      CHECK(std::abs(a[k1 + 4 * k2] - want) < 1e-15);
    }
}

TEST_CASE("size mismatch is rejected") {
  std::vector<cplx> a(5);
  try {
    fft_exec(key1(4, Direction::forward), a);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.status() == Status::size);
  }
}

TEST_CASE("plan cache reuses plans") {
  const auto before = fft_cached_plans();
  std::vector<cplx> a(256);
  const auto k = key1(256, Direction::backward);
  fft_exec(k, a);
  const auto after_first = fft_cached_plans();
  for (int i = 0; i < 10; ++i) fft_exec(k, a);
  CHECK(fft_cached_plans() == after_first);
  CHECK(after_first <= before + 1);

  using Clock = std::chrono::steady_clock;
  const std::vector<cplx> src = gaussian(256, 3);
  std::vector<cplx> b(256);
  auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    b = src;
    fft_exec(k, b);
  }
  const double cached = std::chrono::duration<double>(Clock::now() - t0).count();
  t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    b = src;
    fft_exec_uncached(k, b);
  }
  const double uncached = std::chrono::duration<double>(Clock::now() - t0).count();
  CHECK(uncached >= 10.0 * cached);
}
