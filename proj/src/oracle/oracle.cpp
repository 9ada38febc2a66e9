#include "esnufft/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace esnufft::oracle {
namespace {

void guard(double m, double n) {
  if (m * n > kMaxWork) throw GuardError("direct summation guard: M * N above 1e8");
}

std::int64_t first_mode(std::int64_t n) { return -(n / 2); }

std::array<std::vector<double>, 3> integer_freqs(int dim, const std::array<std::int64_t, 3>& N) {
  const std::int64_t total = N[0] * N[1] * N[2];
  std::array<std::vector<double>, 3> s;
  for (int d = 0; d < dim; ++d) s[d].resize(total);
  for (std::int64_t i = 0; i < total; ++i) {
    std::int64_t r = i;
    for (int d = 0; d < dim; ++d) {
      s[d][i] = static_cast<double>(first_mode(N[d]) + r % N[d]);
      r /= N[d];
    }
  }
  return s;
}

}  // namespace

std::vector<cplx> direct_type3(int dim, const Coords& x, std::span<const cplx> c,
                               const Coords& s, int isign) {
  const auto m = static_cast<std::int64_t>(c.size());
  const auto n = static_cast<std::int64_t>(s[0].size());
  guard(static_cast<double>(m), static_cast<double>(n));
  const long double sgn = isign < 0 ? -1.0L : 1.0L;
  std::vector<cplx> f(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < n; ++k) {
    double re = 0.0;
    double im = 0.0;
    for (std::int64_t j = 0; j < m; ++j) {
      long double ph = 0.0L;
      for (int d = 0; d < dim; ++d)
        ph += static_cast<long double>(s[d][k]) * static_cast<long double>(x[d][j]);
      ph *= sgn;
      const double cr = static_cast<double>(cosl(ph));
      const double ci = static_cast<double>(sinl(ph));
      re += c[j].real() * cr - c[j].imag() * ci;
      im += c[j].real() * ci + c[j].imag() * cr;
    }
    f[k] = {re, im};
  }
  return f;
}

std::vector<cplx> direct_type1(int dim, const Coords& x, std::span<const cplx> c,
                               const std::array<std::int64_t, 3>& N, int isign) {
  guard(static_cast<double>(c.size()), static_cast<double>(N[0] * N[1] * N[2]));
  const auto s = integer_freqs(dim, N);
  return direct_type3(dim, x, c, {std::span<const double>(s[0]), s[1], s[2]}, isign);
}

std::vector<cplx> direct_type2(int dim, const Coords& x, std::span<const cplx> f,
                               const std::array<std::int64_t, 3>& N, int isign) {
  const auto m = static_cast<std::int64_t>(x[0].size());
  const auto n = static_cast<std::int64_t>(f.size());
  guard(static_cast<double>(m), static_cast<double>(n));
  const auto s = integer_freqs(dim, N);
  const long double sgn = isign < 0 ? -1.0L : 1.0L;
  std::vector<cplx> c(m);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < m; ++j) {
    double re = 0.0;
    double im = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
      long double ph = 0.0L;
      for (int d = 0; d < dim; ++d)
        ph += static_cast<long double>(s[d][k]) * static_cast<long double>(x[d][j]);
      ph *= sgn;
      const double cr = static_cast<double>(cosl(ph));
      const double ci = static_cast<double>(sinl(ph));
      re += f[k].real() * cr - f[k].imag() * ci;
      im += f[k].real() * ci + f[k].imag() * cr;
    }
    c[j] = {re, im};
  }
  return c;
}

std::vector<cplx> direct_type1_subset(int dim, const Coords& x, std::span<const cplx> c,
                                      const std::array<std::int64_t, 3>& N, int isign,
                                      std::span<const std::int64_t> flat_modes) {
  const auto m = static_cast<std::int64_t>(c.size());
  const auto nk = static_cast<std::int64_t>(flat_modes.size());
  const long double sgn = isign < 0 ? -1.0L : 1.0L;
  std::vector<cplx> f(nk);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < nk; ++i) {
    long double k[3] = {0, 0, 0};
    std::int64_t r = flat_modes[i];
    for (int d = 0; d < dim; ++d) {
      k[d] = static_cast<long double>(first_mode(N[d]) + r % N[d]);
      r /= N[d];
    }
    long double re = 0.0L;
    long double im = 0.0L;
    for (std::int64_t j = 0; j < m; ++j) {
      long double ph = 0.0L;
      for (int d = 0; d < dim; ++d) ph += k[d] * static_cast<long double>(x[d][j]);
      ph *= sgn;
      const long double cr = cosl(ph);
      const long double ci = sinl(ph);
      re += c[j].real() * cr - c[j].imag() * ci;
      im += c[j].real() * ci + c[j].imag() * cr;
    }
    f[i] = {static_cast<double>(re), static_cast<double>(im)};
  }
  return f;
}

std::vector<cplx> direct_type1_1d_block(std::span<const double> x, std::span<const cplx> c,
                                        std::int64_t k0, std::int64_t count, int isign) {
  using lcplx = std::complex<long double>;
  const auto m = static_cast<std::int64_t>(c.size());
  const long double sgn = isign < 0 ? -1.0L : 1.0L;
  std::vector<lcplx> acc(count);
#pragma omp parallel
  {
    std::vector<lcplx> local(count);
#pragma omp for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
      const long double xj = sgn * static_cast<long double>(x[j]);
      const long double ph0 = static_cast<long double>(k0) * xj;
      lcplx e(cosl(ph0), sinl(ph0));
      const lcplx step(cosl(xj), sinl(xj));
      const lcplx cj(c[j].real(), c[j].imag());
      for (std::int64_t i = 0; i < count; ++i) {
        local[i] += cj * e;
        e *= step;
      }
    }
#pragma omp critical(esnufft_oracle_block)
    for (std::int64_t i = 0; i < count; ++i) acc[i] += local[i];
  }
  std::vector<cplx> f(count);
  for (std::int64_t i = 0; i < count; ++i)
    f[i] = {static_cast<double>(acc[i].real()), static_cast<double>(acc[i].imag())};
  return f;
}

ErrorReport rel_l2(std::span<const cplx> approx, std::span<const cplx> exact,
                   std::int64_t n_max) {
  if (approx.size() != exact.size()) throw std::invalid_argument("rel_l2: length mismatch");
  long double num = 0.0L;
  long double den = 0.0L;
  double max_abs = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double e = std::abs(approx[i] - exact[i]);
    num += static_cast<long double>(e) * e;
    den += static_cast<long double>(std::norm(exact[i]));
    max_abs = std::max(max_abs, e);
  }
  if (den == 0.0L) throw std::domain_error("rel_l2: reference vector is zero");
  ErrorReport r;
  r.rel_l2 = static_cast<double>(std::sqrt(num / den));
  r.max_abs = max_abs;
  const auto n = n_max > 0 ? n_max : static_cast<std::int64_t>(exact.size());
  r.rounding_floor = static_cast<double>(n) * 1.1e-16;
  return r;
}

AliasingProbe aliasing_probe(std::int64_t N, std::span<const double> x, int isign,
                             const Type1Fn& fast) {
  const auto m = static_cast<std::int64_t>(x.size());
  if (N < 1 || N > 64 || m < 1 || m > 64)
    throw GuardError("aliasing probe limited to N, M <= 64");
  AliasingProbe p;
  p.modes = N;
  p.points = m;
  p.magnitude.resize(N * m);
  std::vector<cplx> e(m);
  std::vector<cplx> f(N);
  for (std::int64_t j = 0; j < m; ++j) {
    std::fill(e.begin(), e.end(), cplx{});
    e[j] = 1.0;
    fast(e, f);
    const auto ref = direct_type1(1, {x, {}, {}}, e, {N, 1, 1}, isign);
    for (std::int64_t k = 0; k < N; ++k) {
      const double v = std::abs(f[k] - ref[k]);
      p.magnitude[j * N + k] = v;
      p.max_error = std::max(p.max_error, v);
    }
  }
  return p;
}

}  // namespace esnufft::oracle
