#include "esnufft/spreadinterp.hpp"

#include <omp.h>
#include <time.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace esnufft {
namespace {

double thread_cpu_seconds() noexcept {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

inline std::int64_t wrap(std::int64_t i, std::int64_t n) noexcept {
  i %= n;
  return i < 0 ? i + n : i;
}

// Per-point kernel data shared by spreading and interpolation so that both
// use bit-identical kernel values.
struct PointStencil {
  std::array<std::int64_t, 3> start{0, 0, 0};
  std::array<std::array<double, kMaxWidth>, 3> ker{};
};

inline void make_stencil(const NuPointSet& pts, std::int64_t j, const GridShape& g,
                         const KernelRows& kr, PointStencil& s) noexcept {
  const int w = kr.params().width;
  for (int d = 0; d < pts.dim; ++d) {
    const Window win = kernel_window(fold_rescale(pts.coords[d][j], g.sizes[d]), w);
    s.start[d] = win.start;
    kr.row(win.frac, std::span<double>(s.ker[d].data(), w));
  }
}

void spread_cuboid(const NuPointSet& pts, std::span<const cplx> strengths,
                   std::span<const std::int64_t> order, const Subproblem& sub,
                   const GridShape& g, const KernelRows& kr, bool conjugate,
                   std::vector<double>& buf) {
  const int w = kr.params().width;
  const std::int64_t s1 = sub.size[0];
  const std::int64_t s12 = sub.size[0] * sub.size[1];
  buf.assign(2 * sub.size[0] * sub.size[1] * sub.size[2], 0.0);
  double* out = buf.data();
  PointStencil st;
  for (std::int64_t i = sub.begin; i < sub.end; ++i) {
    const std::int64_t j = order[i];
    make_stencil(pts, j, g, kr, st);
    const double re = strengths[j].real();
    const double im = conjugate ? -strengths[j].imag() : strengths[j].imag();
    const std::int64_t i1 = st.start[0] - sub.offset[0];
    const double* k1 = st.ker[0].data();
    if (pts.dim == 1) {
      double* o = out + 2 * i1;
      for (int a = 0; a < w; ++a) {
        o[2 * a] += re * k1[a];
        o[2 * a + 1] += im * k1[a];
      }
      continue;
    }
    const std::int64_t i2 = st.start[1] - sub.offset[1];
    const std::int64_t i3 = pts.dim == 3 ? st.start[2] - sub.offset[2] : 0;
    const int w3 = pts.dim == 3 ? w : 1;
    for (int c = 0; c < w3; ++c) {
      const double k3 = pts.dim == 3 ? st.ker[2][c] : 1.0;
      for (int b = 0; b < w; ++b) {
        const double k23 = k3 * st.ker[1][b];
        const double r = re * k23;
        const double m = im * k23;
        double* o = out + 2 * (i1 + s1 * (i2 + b) + s12 * (i3 + c));
        for (int a = 0; a < w; ++a) {
          o[2 * a] += r * k1[a];
          o[2 * a + 1] += m * k1[a];
        }
      }
    }
  }
}

void add_wrapped(const Subproblem& sub, const std::vector<double>& buf, FineGrid& grid) {
  const auto& n = grid.shape.sizes;
  std::vector<std::int64_t> xs(sub.size[0]);
  for (std::int64_t a = 0; a < sub.size[0]; ++a) xs[a] = wrap(sub.offset[0] + a, n[0]);
  auto* g = reinterpret_cast<double*>(grid.values.data());
  const double* b = buf.data();
  for (std::int64_t c = 0; c < sub.size[2]; ++c) {
    const std::int64_t gz = wrap(sub.offset[2] + c, n[2]);
    for (std::int64_t r = 0; r < sub.size[1]; ++r) {
      const std::int64_t gy = wrap(sub.offset[1] + r, n[1]);
      double* row = g + 2 * n[0] * (gy + n[1] * gz);
      const double* src = b + 2 * sub.size[0] * (r + sub.size[1] * c);
      for (std::int64_t a = 0; a < sub.size[0]; ++a) {
        row[2 * xs[a]] += src[2 * a];
        row[2 * xs[a] + 1] += src[2 * a + 1];
      }
    }
  }
}

}  // namespace

int resolve_threads(int requested) noexcept {
  return requested > 0 ? requested : std::max(1, omp_get_max_threads());
}

KernelRows::KernelRows(const KernelParams& params, bool exact) : params_(params) {
  if (!exact) poly_.emplace(params);
}

void KernelRows::row(double x_frac, std::span<double> out) const noexcept {
  if (poly_)
    poly_->eval_row(x_frac, out);
  else
    exact_eval_row(params_, x_frac, out);
}

Window kernel_window(double u, int width) noexcept {
  const double half = 0.5 * width;
  const double start = std::ceil(u - half);
  return {static_cast<std::int64_t>(start), start - u + half};
}

std::vector<Subproblem> partition_subproblems(const NuPointSet& points,
                                              std::span<const std::int64_t> order,
                                              const GridShape& grid, int width,
                                              std::int64_t max_size) {
  std::vector<Subproblem> subs;
  const std::int64_t m = static_cast<std::int64_t>(order.size());
  max_size = std::max<std::int64_t>(1, max_size);
  for (std::int64_t b = 0; b < m; b += max_size) {
    Subproblem s;
    s.begin = b;
    s.end = std::min(m, b + max_size);
    for (int d = 0; d < 3; ++d) {
      if (d >= points.dim) {
        s.offset[d] = 0;
        s.size[d] = 1;
        continue;
      }
      std::int64_t lo = std::numeric_limits<std::int64_t>::max();
      std::int64_t hi = std::numeric_limits<std::int64_t>::min();
      for (std::int64_t i = s.begin; i < s.end; ++i) {
        const auto start =
            kernel_window(fold_rescale(points.coords[d][order[i]], grid.sizes[d]), width).start;
        lo = std::min(lo, start);
        hi = std::max(hi, start);
      }
      s.offset[d] = lo;
      s.size[d] = hi - lo + width;
    }
    subs.push_back(s);
  }
  return subs;
}

void spread(const NuPointSet& points, std::span<const cplx> strengths, FineGrid& grid,
            const KernelRows& kernel, const SpreadOptions& opts,
            const BinSortPermutation* order) {
  std::fill(grid.values.begin(), grid.values.end(), cplx{});
  const std::int64_t m = points.count;
  const int threads = resolve_threads(opts.threads);
  if (opts.stats) {
    opts.stats->subproblems = 0;
    opts.stats->thread_busy_seconds.assign(threads, 0.0);
  }
  if (m == 0) return;

  BinSortPermutation local;
  if (!order) {
    local = bin_sort(points, grid.shape, threads);
    order = &local;
  }
  // With several threads, cut finer than the cap so every thread gets work.
  std::int64_t max_size = opts.max_subproblem;
  if (threads > 1)
    max_size = std::min(max_size, std::max<std::int64_t>(1, (m + 4 * threads - 1) / (4 * threads)));
  const auto subs = partition_subproblems(points, order->order, grid.shape,
                                          kernel.params().width, max_size);
  std::vector<double> busy(threads, 0.0);
  const auto nsub = static_cast<std::int64_t>(subs.size());

#pragma omp parallel num_threads(threads)
  {
    std::vector<double> buf;
    const int t = omp_get_thread_num();
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < nsub; ++s) {
      const double t0 = thread_cpu_seconds();
      spread_cuboid(points, strengths, order->order, subs[s], grid.shape, kernel,
                    opts.conjugate, buf);
#pragma omp critical(esnufft_spread_addback)
      add_wrapped(subs[s], buf, grid);
      busy[t] += thread_cpu_seconds() - t0;
    }
  }
  if (opts.stats) {
    opts.stats->subproblems = nsub;
    opts.stats->thread_busy_seconds = busy;
  }
}

void interp(const FineGrid& grid, const NuPointSet& points, std::span<cplx> out,
            const KernelRows& kernel, const SpreadOptions& opts,
            const BinSortPermutation* order) {
  const std::int64_t m = points.count;
  if (m == 0) return;
  const int threads = resolve_threads(opts.threads);
  BinSortPermutation local;
  if (!order) {
    local = bin_sort(points, grid.shape, threads);
    order = &local;
  }
  const int w = kernel.params().width;
  const auto& n = grid.shape.sizes;
  const auto* g = reinterpret_cast<const double*>(grid.values.data());
  const int dim = points.dim;
  const std::span<const std::int64_t> ord = order->order;

#pragma omp parallel num_threads(threads)
  {
    PointStencil st;
    std::array<std::array<std::int64_t, kMaxWidth>, 3> idx{};
#pragma omp for schedule(dynamic, 4096)
    for (std::int64_t i = 0; i < m; ++i) {
      const std::int64_t j = ord[i];
      make_stencil(points, j, grid.shape, kernel, st);
      for (int d = 0; d < dim; ++d)
        for (int a = 0; a < w; ++a) idx[d][a] = wrap(st.start[d] + a, n[d]);
      double re = 0.0;
      double im = 0.0;
      const double* k1 = st.ker[0].data();
      if (dim == 1) {
        for (int a = 0; a < w; ++a) {
          re += g[2 * idx[0][a]] * k1[a];
          im += g[2 * idx[0][a] + 1] * k1[a];
        }
      } else {
        const int w3 = dim == 3 ? w : 1;
        for (int c = 0; c < w3; ++c) {
          const double k3 = dim == 3 ? st.ker[2][c] : 1.0;
          const std::int64_t zoff = dim == 3 ? idx[2][c] * n[1] : 0;
          for (int b = 0; b < w; ++b) {
            const double* row = g + 2 * n[0] * (idx[1][b] + zoff);
            double rr = 0.0;
            double ri = 0.0;
            for (int a = 0; a < w; ++a) {
              rr += row[2 * idx[0][a]] * k1[a];
              ri += row[2 * idx[0][a] + 1] * k1[a];
            }
            const double k23 = k3 * st.ker[1][b];
            re += rr * k23;
            im += ri * k23;
          }
        }
      }
      out[j] = cplx(re, opts.conjugate ? -im : im);
    }
  }
}

}  // namespace esnufft
