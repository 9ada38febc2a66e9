#include "esnufft/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "esnufft/errors.hpp"
#include "esnufft/fft_backend.hpp"

namespace esnufft {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::int64_t wrap(std::int64_t i, std::int64_t n) noexcept {
  i %= n;
  return i < 0 ? i + n : i;
}

void check_options(const TransformOptions& opts) {
  if (opts.isign != 1 && opts.isign != -1)
    throw Error(Status::argument, "isign must be +1 or -1");
}

void check_strengths(std::span<const cplx> c, std::int64_t m, const char* what) {
  if (static_cast<std::int64_t>(c.size()) != m) {
    std::ostringstream os;
    os << what << " length " << c.size() << " does not match " << m;
    throw Error(Status::size, os.str());
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!std::isfinite(c[j].real()) || !std::isfinite(c[j].imag())) {
      std::ostringstream os;
      os << "non-finite " << what << " at index " << j;
      throw Error(Status::data, os.str());
    }
  }
}

void check_modes(const ModeIndexSet& modes, const NuPointSet& points) {
  if (modes.dim != points.dim) throw Error(Status::argument, "mode and point dimensions differ");
  for (int i = 0; i < 3; ++i)
    if (modes.counts[i] < 1) throw Error(Status::size, "mode counts must be positive");
}

// Grid index in FFT order for each centered mode, per axis.
std::array<std::vector<std::int64_t>, 3> mode_slots(const ModeIndexSet& modes,
                                                    const GridShape& g) {
  std::array<std::vector<std::int64_t>, 3> s;
  for (int d = 0; d < 3; ++d) {
    const std::int64_t nk = modes.counts[d];
    s[d].resize(nk);
    for (std::int64_t i = 0; i < nk; ++i) s[d][i] = wrap(ModeIndexSet::first(nk) + i, g.sizes[d]);
  }
  return s;
}

std::array<std::vector<double>, 3> corrections(const ModeIndexSet& modes, const GridShape& g,
                                               const KernelParams& params) {
  std::array<std::vector<double>, 3> c;
  for (int d = 0; d < 3; ++d)
    c[d] = d < modes.dim ? fseries_correction(params, g.sizes[d], modes.counts[d])
                         : std::vector<double>{1.0};
  return c;
}

void report(const char* name, const StageTimings& t) {
  std::fprintf(stderr,
               "esnufft %s: sort %.3g s, spread %.3g s, interp %.3g s, fft %.3g s, "
               "correct %.3g s, total %.3g s\n",
               name, t.sort, t.spread, t.interp, t.fft, t.correct, t.total);
}

void finish(const TransformOptions& opts, const StageTimings& t, const char* name) {
  if (opts.timings) *opts.timings = t;
  if (opts.debug_timing) report(name, t);
}

}  // namespace

void exec_type1(const NuPointSet& points, std::span<const cplx> strengths,
                const ModeIndexSet& modes, std::span<cplx> out, const TransformOptions& opts) {
  const auto t_start = Clock::now();
  StageTimings tm;
  check_options(opts);
  const KernelParams params = select_params(opts.tolerance, opts.sigma);
  check_modes(modes, points);
  if (static_cast<std::int64_t>(out.size()) != modes.total())
    throw Error(Status::size, "output length does not match the mode count");
  validate_points(points, opts.check_bounds);
  check_strengths(strengths, points.count, "strength");

  const int threads = resolve_threads(opts.threads);
  const GridShape shape = fine_grid_sizes(modes, params);
  FineGrid grid(shape);

  auto t0 = Clock::now();
  const BinSortPermutation order = bin_sort(points, shape, threads);
  tm.sort = since(t0);

  t0 = Clock::now();
  SpreadOptions so;
  so.threads = threads;
  so.exact_kernel = opts.use_exact_kernel;
  so.conjugate = opts.isign < 0;
  so.stats = opts.spread_stats;
  const KernelRows kernel(params, opts.use_exact_kernel);
  spread(points, strengths, grid, kernel, so, &order);
  tm.spread = since(t0);

  t0 = Clock::now();
  fft_exec(make_plan_key(shape, Direction::forward, threads), grid.values);
  tm.fft = since(t0);

  t0 = Clock::now();
  const auto corr = corrections(modes, shape, params);
  const auto slot = mode_slots(modes, shape);
  const std::int64_t n1 = shape.sizes[0], n2 = shape.sizes[1];
  const std::int64_t k1 = modes.counts[0], k2 = modes.counts[1], k3 = modes.counts[2];
  const bool conj = opts.isign < 0;
#pragma omp parallel for collapse(2) num_threads(threads) schedule(static)
  for (std::int64_t i3 = 0; i3 < k3; ++i3) {
    for (std::int64_t i2 = 0; i2 < k2; ++i2) {
      const double c23 = corr[1][i2] * corr[2][i3];
      const cplx* src = grid.values.data() + n1 * (slot[1][i2] + n2 * slot[2][i3]);
      cplx* dst = out.data() + k1 * (i2 + k2 * i3);
      for (std::int64_t i1 = 0; i1 < k1; ++i1) {
        const cplx v = src[slot[0][i1]] * (corr[0][i1] * c23);
        dst[i1] = conj ? std::conj(v) : v;
      }
    }
  }
  tm.correct = since(t0);
  tm.total = since(t_start);
  finish(opts, tm, "type 1");
}

ModeArray exec_type1(const NuPointSet& points, std::span<const cplx> strengths,
                     const ModeIndexSet& modes, const TransformOptions& opts) {
  ModeArray f{modes, std::vector<cplx>(modes.total())};
  exec_type1(points, strengths, modes, f.values, opts);
  return f;
}

void exec_type2(const ModeIndexSet& modes, std::span<const cplx> coeffs,
                const NuPointSet& points, std::span<cplx> out, const TransformOptions& opts) {
  const auto t_start = Clock::now();
  StageTimings tm;
  check_options(opts);
  const KernelParams params = select_params(opts.tolerance, opts.sigma);
  check_modes(modes, points);
  if (static_cast<std::int64_t>(out.size()) != points.count)
    throw Error(Status::size, "output length does not match the point count");
  validate_points(points, opts.check_bounds);
  check_strengths(coeffs, modes.total(), "coefficient");

  const int threads = resolve_threads(opts.threads);
  const GridShape shape = fine_grid_sizes(modes, params);
  FineGrid grid(shape);

  auto t0 = Clock::now();
  const auto corr = corrections(modes, shape, params);
  const auto slot = mode_slots(modes, shape);
  const std::int64_t n1 = shape.sizes[0], n2 = shape.sizes[1];
  const std::int64_t k1 = modes.counts[0], k2 = modes.counts[1], k3 = modes.counts[2];
  const bool conj = opts.isign < 0;
#pragma omp parallel for collapse(2) num_threads(threads) schedule(static)
  for (std::int64_t i3 = 0; i3 < k3; ++i3) {
    for (std::int64_t i2 = 0; i2 < k2; ++i2) {
      const double c23 = corr[1][i2] * corr[2][i3];
      cplx* dst = grid.values.data() + n1 * (slot[1][i2] + n2 * slot[2][i3]);
      const cplx* src = coeffs.data() + k1 * (i2 + k2 * i3);
      for (std::int64_t i1 = 0; i1 < k1; ++i1) {
        const cplx v = conj ? std::conj(src[i1]) : src[i1];
        dst[slot[0][i1]] = v * (corr[0][i1] * c23);
      }
    }
  }
  tm.correct = since(t0);

  t0 = Clock::now();
  fft_exec(make_plan_key(shape, Direction::forward, threads), grid.values);
  tm.fft = since(t0);

  t0 = Clock::now();
  const BinSortPermutation order = bin_sort(points, shape, threads);
  tm.sort = since(t0);

  t0 = Clock::now();
  SpreadOptions so;
  so.threads = threads;
  so.exact_kernel = opts.use_exact_kernel;
  so.conjugate = conj;
  const KernelRows kernel(params, opts.use_exact_kernel);
  interp(grid, points, out, kernel, so, &order);
  tm.interp = since(t0);
  tm.total = since(t_start);
  finish(opts, tm, "type 2");
}

std::vector<cplx> exec_type2(const ModeArray& f, const NuPointSet& points,
                             const TransformOptions& opts) {
  std::vector<cplx> c(points.count);
  exec_type2(f.modes, f.values, points, c, opts);
  return c;
}

Type3Axis plan_type3_axis(double X, double S, const KernelParams& params) {
  const double w = params.width;
  const double sigma = params.sigma;
  const double want = std::ceil(2.0 * sigma / std::numbers::pi * X * S + w);
  if (!(want < 4.0e18)) throw Error(Status::resource, "type 3 grid size overflows");
  Type3Axis a;
  a.n = next_smooth(std::max(static_cast<std::int64_t>(want), std::int64_t{2} * params.width));
  const double n = static_cast<double>(a.n);
  if (S > 0.0)
    a.gamma = n / (2.0 * sigma * S);
  else if (X > 0.0)
    a.gamma = X / (std::numbers::pi * (1.0 - w / n));
  else
    a.gamma = 1.0;
  return a;
}

Type3Geometry plan_type3_geometry(int dim, const std::array<double, 3>& X,
                                  const std::array<double, 3>& S, const KernelParams& params,
                                  std::int64_t max_grid) {
  Type3Geometry g;
  g.dim = dim;
  g.X = X;
  g.S = S;
  double cells = 1.0;
  for (int d = 0; d < dim; ++d) {
    const Type3Axis a = plan_type3_axis(X[d], S[d], params);
    g.n[d] = a.n;
    g.gamma[d] = a.gamma;
    cells *= static_cast<double>(a.n);
  }
  if (cells > static_cast<double>(max_grid)) {
    std::ostringstream os;
    os << "type 3 fine grid needs " << cells << " values, above the cap of " << max_grid
       << "; the space-frequency product is too large, use direct summation";
    throw Error(Status::resource, os.str());
  }
  return g;
}

ShiftResult center_shift(std::span<const double> coords, CenterShift mode) {
  ShiftResult r;
  if (coords.empty()) return r;
  const auto [lo, hi] = std::minmax_element(coords.begin(), coords.end());
  const double before = std::max(std::abs(*lo), std::abs(*hi));
  const double mid = 0.5 * (*lo + *hi);
  const double after = std::max(std::abs(*lo - mid), std::abs(*hi - mid));
  bool apply = mode == CenterShift::always;
  if (mode == CenterShift::automatic) apply = before > 2.0 * after && mid != 0.0;
  if (apply) {
    r.shift = mid;
    r.half_width = after;
    r.applied = true;
  } else {
    r.half_width = before;
  }
  return r;
}

void exec_type3(const NuPointSet& points, std::span<const cplx> strengths,
                const NuPointSet& targets, std::span<cplx> out, const TransformOptions& opts) {
  const auto t_start = Clock::now();
  StageTimings tm;
  check_options(opts);
  const KernelParams params = select_params(opts.tolerance, opts.sigma);
  if (targets.dim != points.dim)
    throw Error(Status::argument, "source and target dimensions differ");
  if (static_cast<std::int64_t>(out.size()) != targets.count)
    throw Error(Status::size, "output length does not match the target count");
  validate_points(points, false);
  validate_points(targets, false);
  check_strengths(strengths, points.count, "strength");
  const int dim = points.dim;
  const std::int64_t m = points.count;
  const std::int64_t nt = targets.count;
  const int threads = resolve_threads(opts.threads);
  const bool conj = opts.isign < 0;

  std::array<double, 3> X{0, 0, 0}, S{0, 0, 0}, x0{0, 0, 0}, s0{0, 0, 0};
  for (int d = 0; d < dim; ++d) {
    const ShiftResult xs = center_shift(points.coords[d], opts.center_shift);
    const ShiftResult ss = center_shift(targets.coords[d], opts.center_shift);
    X[d] = xs.half_width;
    x0[d] = xs.shift;
    S[d] = ss.half_width;
    s0[d] = ss.shift;
  }
  Type3Geometry geo = plan_type3_geometry(dim, X, S, params, opts.type3_max_grid);
  geo.x0 = x0;
  geo.s0 = s0;

  // Shifted, dilated sources and pre-phased strengths.
  std::array<std::vector<double>, 3> xr;
  for (int d = 0; d < dim; ++d) xr[d].resize(m);
  std::vector<cplx> cw(m);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t j = 0; j < m; ++j) {
    long double ph = 0.0L;
    for (int d = 0; d < dim; ++d) {
      const double xs = points.coords[d][j] - x0[d];
      ph += static_cast<long double>(s0[d]) * xs;
      xr[d][j] = xs / geo.gamma[d];
    }
    const cplx c = conj ? std::conj(strengths[j]) : strengths[j];
    cw[j] = s0 == std::array<double, 3>{0, 0, 0}
                ? c
                : c * cplx(static_cast<double>(std::cos(ph)), static_cast<double>(std::sin(ph)));
  }
  const NuPointSet src = make_points(xr[0], dim > 1 ? std::span<const double>(xr[1]) : std::span<const double>{},
                                     dim > 2 ? std::span<const double>(xr[2]) : std::span<const double>{});

  GridShape shape;
  shape.dim = dim;
  shape.sizes = geo.n;
  FineGrid grid(shape);

  auto t0 = Clock::now();
  const BinSortPermutation order = bin_sort(src, shape, threads);
  tm.sort = since(t0);

  t0 = Clock::now();
  SpreadOptions so;
  so.threads = threads;
  so.exact_kernel = opts.use_exact_kernel;
  so.stats = opts.spread_stats;
  const KernelRows kernel(params, opts.use_exact_kernel);
  spread(src, cw, grid, kernel, so, &order);
  tm.spread = since(t0);

  // Reorder the grid into centered mode order for the inner type 2.
  t0 = Clock::now();
  const ModeIndexSet inner_modes = make_modes(geo.n[0], geo.n[1], geo.n[2], dim);
  std::vector<cplx> coeffs(inner_modes.total());
  {
    const auto slot = mode_slots(inner_modes, shape);
    const std::int64_t n1 = geo.n[0], n2 = geo.n[1], n3 = geo.n[2];
#pragma omp parallel for collapse(2) num_threads(threads) schedule(static)
    for (std::int64_t i3 = 0; i3 < n3; ++i3)
      for (std::int64_t i2 = 0; i2 < n2; ++i2) {
        const cplx* s = grid.values.data() + n1 * (slot[1][i2] + n2 * slot[2][i3]);
        cplx* dst = coeffs.data() + n1 * (i2 + n2 * i3);
        for (std::int64_t i1 = 0; i1 < n1; ++i1) dst[i1] = s[slot[0][i1]];
      }
  }
  grid = FineGrid();

  std::array<std::vector<double>, 3> sr;
  std::array<std::vector<double>, 3> ks;
  for (int d = 0; d < dim; ++d) {
    sr[d].resize(nt);
    ks[d].resize(nt);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(geo.n[d]);
    for (std::int64_t k = 0; k < nt; ++k) {
      const double sk = targets.coords[d][k] - s0[d];
      ks[d][k] = geo.gamma[d] * sk;
      sr[d][k] = h * ks[d][k];
    }
  }
  tm.correct += since(t0);

  const NuPointSet tgt = make_points(sr[0], dim > 1 ? std::span<const double>(sr[1]) : std::span<const double>{},
                                     dim > 2 ? std::span<const double>(sr[2]) : std::span<const double>{});
  TransformOptions inner = opts;
  inner.isign = +1;
  inner.check_bounds = false;
  inner.debug_timing = false;
  StageTimings inner_tm;
  inner.timings = &inner_tm;
  inner.spread_stats = nullptr;
  exec_type2(inner_modes, coeffs, tgt, out, inner);
  tm.sort += inner_tm.sort;
  tm.interp += inner_tm.interp;
  tm.fft += inner_tm.fft;
  tm.correct += inner_tm.correct;

  // Deconvolve by the kernel transform at the (dilated) targets and post-phase.
  t0 = Clock::now();
  std::array<std::vector<double>, 3> ft;
  for (int d = 0; d < dim; ++d) {
    const double alpha = std::numbers::pi * params.width / static_cast<double>(geo.n[d]);
    ft[d] = kernel_ft(params, alpha, ks[d]);
  }
  const bool post = x0 != std::array<double, 3>{0, 0, 0};
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t k = 0; k < nt; ++k) {
    double p = 1.0;
    long double ph = 0.0L;
    for (int d = 0; d < dim; ++d) {
      p *= (2.0 * std::numbers::pi / static_cast<double>(geo.n[d])) / ft[d][k];
      ph += static_cast<long double>(targets.coords[d][k]) * x0[d];
    }
    cplx v = out[k] * p;
    if (post) v *= cplx(static_cast<double>(std::cos(ph)), static_cast<double>(std::sin(ph)));
    out[k] = conj ? std::conj(v) : v;
  }
  tm.correct += since(t0);
  tm.total = since(t_start);
  finish(opts, tm, "type 3");
}

std::vector<cplx> exec_type3(const NuPointSet& points, std::span<const cplx> strengths,
                             const NuPointSet& targets, const TransformOptions& opts) {
  std::vector<cplx> f(targets.count);
  exec_type3(points, strengths, targets, f, opts);
  return f;
}

}  // namespace esnufft
