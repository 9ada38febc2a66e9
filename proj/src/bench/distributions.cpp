#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "esnufft/bench.hpp"

namespace esnufft::bench {

Dist parse_dist(const std::string& name) {
  if (name == "rand") return Dist::rand;
  if (name == "disc") return Dist::disc;
  if (name == "sph") return Dist::sph;
  throw std::invalid_argument("unknown distribution '" + name + "' (rand, disc, sph)");
}

const char* dist_name(Dist d) noexcept {
  switch (d) {
    case Dist::rand: return "rand";
    case Dist::disc: return "disc";
    case Dist::sph: return "sph";
  }
  return "?";
}

std::vector<double> gauss_legendre_nodes(int n) {
  if (n < 1) throw std::invalid_argument("need at least one Gauss-Legendre node");
  gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(n);
  if (!t) throw std::runtime_error("gsl_integration_glfixed_table_alloc failed");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    double xi = 0.0, wi = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, i, &xi, &wi, t);
    x[i] = xi;
  }
  gsl_integration_glfixed_table_free(t);
  std::sort(x.begin(), x.end());
  return x;
}

PointCloud gen_points(Dist dist, std::int64_t m, int dim, std::uint64_t seed) {
  constexpr double pi = std::numbers::pi;
  if (m < 1) throw std::invalid_argument("M must be positive");
  if (dim < 1 || dim > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  PointCloud p;
  p.dim = dim;
  switch (dist) {
    case Dist::rand: {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u(-pi, pi);
      for (int d = 0; d < dim; ++d) p.x[d].resize(m);
      for (std::int64_t j = 0; j < m; ++j)
        for (int d = 0; d < dim; ++d) p.x[d][j] = u(rng);
      return p;
    }
    case Dist::disc: {
      if (dim != 2) throw std::invalid_argument("disc distribution needs dimension 2");
      const int nr = std::max(1, static_cast<int>(std::lround(std::sqrt(double(m)))));
      const int na = nr;
      const auto t = gauss_legendre_nodes(nr);
      for (int r = 0; r < nr; ++r) {
        const double rad = 0.5 * pi * (1.0 + t[r]);
        for (int a = 0; a < na; ++a) {
          const double th = 2.0 * pi * a / na;
          p.x[0].push_back(rad * std::cos(th));
          p.x[1].push_back(rad * std::sin(th));
        }
      }
      return p;
    }
    case Dist::sph: {
      if (dim != 3) throw std::invalid_argument("sph distribution needs dimension 3");
      const int nr = std::max(1, static_cast<int>(std::lround(0.5 * std::sqrt(double(m)))));
      const int nt = std::max(1, static_cast<int>(std::lround(std::sqrt(double(m) / (2.0 * nr)))));
      const int np = 2 * nt;
      const auto tr = gauss_legendre_nodes(nr);
      const auto tc = gauss_legendre_nodes(nt);
      for (int r = 0; r < nr; ++r) {
        const double rad = 0.5 * pi * (1.0 + tr[r]);
        for (int i = 0; i < nt; ++i) {
          const double ct = tc[i];
          const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
          for (int k = 0; k < np; ++k) {
            const double ph = 2.0 * pi * k / np;
            p.x[0].push_back(rad * st * std::cos(ph));
            p.x[1].push_back(rad * st * std::sin(ph));
            p.x[2].push_back(rad * ct);
          }
        }
      }
      return p;
    }
  }
  throw std::invalid_argument("unknown distribution");
}

std::vector<cplx> gen_strengths(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> c(n);
  for (auto& v : c) {
    const double re = g(rng);
    v = {re, g(rng)};
  }
  return c;
}

std::array<std::int64_t, 3> mode_counts(std::int64_t n, int dim) {
  std::array<std::int64_t, 3> k{1, 1, 1};
  const auto per = std::max<std::int64_t>(1, std::llround(std::pow(double(n), 1.0 / dim)));
  for (int d = 0; d < dim; ++d) k[d] = per;
  return k;
}

}  // namespace esnufft::bench
