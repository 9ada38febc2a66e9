#include "esnufft/grid.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "esnufft/errors.hpp"

namespace esnufft {

ModeIndexSet make_modes(std::int64_t n1, std::int64_t n2, std::int64_t n3, int dim) {
  ModeIndexSet m;
  m.dim = dim > 0 ? dim : (n3 > 1 ? 3 : (n2 > 1 ? 2 : 1));
  m.counts = {n1, n2, n3};
  for (int i = 0; i < 3; ++i) {
    if (m.counts[i] < 1) throw Error(Status::size, "mode counts must be positive");
    if (i >= m.dim && m.counts[i] != 1)
      throw Error(Status::size, "mode count set on an unused dimension");
  }
  return m;
}

double FineGrid::spacing(int axis) const noexcept {
  return 2.0 * std::numbers::pi / static_cast<double>(shape.sizes[axis]);
}

std::int64_t next_smooth(std::int64_t lower_bound) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  if (lower_bound < 1) throw Error(Status::size, "grid size lower bound must be >= 1");
  if (lower_bound > kLimit) {
    std::ostringstream os;
    os << "grid size " << lower_bound << " too large";
    throw Error(Status::size, os.str());
  }
  // Every candidate examined is < 2 * lower_bound <= 2^63, which fits unsigned.
  const auto target = static_cast<std::uint64_t>(lower_bound);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t p5 = 1;; p5 *= 5) {
    for (std::uint64_t p3 = p5;; p3 *= 3) {
      std::uint64_t v = p3;
      while (v < target) v *= 2;
      best = std::min(best, v);
      if (p3 >= target) break;
    }
    if (p5 >= target) break;
  }
  return static_cast<std::int64_t>(best);
}

GridShape fine_grid_sizes(const ModeIndexSet& modes, const KernelParams& params) {
  GridShape g;
  g.dim = modes.dim;
  for (int i = 0; i < modes.dim; ++i) {
    const double want = std::ceil(params.sigma * static_cast<double>(modes.counts[i]));
    if (!(want < 4.0e18)) throw Error(Status::size, "fine grid size overflows");
    const auto lower = std::max(static_cast<std::int64_t>(want),
                                static_cast<std::int64_t>(2 * params.width));
    g.sizes[i] = next_smooth(lower);
  }
  return g;
}

BinSortPermutation bin_sort(const NuPointSet& points, const GridShape& grid,
                            int threads_hint) {
  BinSortPermutation out;
  out.box_size = kBoxSize;
  const std::int64_t m = points.count;
  for (int i = 0; i < grid.dim; ++i)
    out.bins[i] = (grid.sizes[i] + kBoxSize[i] - 1) / kBoxSize[i];
  const std::int64_t nbins = out.bins[0] * out.bins[1] * out.bins[2];

  out.bin_of.resize(m);
  out.order.resize(m);
  const int dim = grid.dim;
  auto bin_index = [&](std::int64_t j) {
    std::int64_t b = 0;
    for (int i = dim - 1; i >= 0; --i) {
      const double u = fold_rescale(points.coords[i][j], grid.sizes[i]);
      auto bi = static_cast<std::int64_t>(u / static_cast<double>(kBoxSize[i]));
      bi = std::min(bi, out.bins[i] - 1);
      b = b * out.bins[i] + bi;
    }
    return b;
  };

  int threads = std::max(1, threads_hint);
  if (m < grid.total() / 10 || m < 2 * threads) threads = 1;

  if (threads == 1) {
    std::vector<std::int64_t> start(nbins + 1, 0);
    for (std::int64_t j = 0; j < m; ++j) {
      out.bin_of[j] = bin_index(j);
      ++start[out.bin_of[j] + 1];
    }
    for (std::int64_t b = 0; b < nbins; ++b) start[b + 1] += start[b];
    for (std::int64_t j = 0; j < m; ++j) out.order[start[out.bin_of[j]]++] = j;
    return out;
  }

  // Each thread owns a contiguous chunk of points; placing chunk t after
  // chunks 0..t-1 inside every bin keeps the result identical to the serial sort.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(threads) * nbins, 0);
  auto chunk_begin = [&](int t) { return m * t / threads; };
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    std::int64_t* c = counts.data() + static_cast<std::size_t>(t) * nbins;
    for (std::int64_t j = chunk_begin(t); j < chunk_begin(t + 1); ++j) {
      const std::int64_t b = bin_index(j);
      out.bin_of[j] = b;
      ++c[b];
    }
  }
  std::int64_t running = 0;
  for (std::int64_t b = 0; b < nbins; ++b) {
    for (int t = 0; t < threads; ++t) {
      std::int64_t& c = counts[static_cast<std::size_t>(t) * nbins + b];
      const std::int64_t n = c;
      c = running;
      running += n;
    }
  }
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    std::int64_t* pos = counts.data() + static_cast<std::size_t>(t) * nbins;
    for (std::int64_t j = chunk_begin(t); j < chunk_begin(t + 1); ++j)
      out.order[pos[out.bin_of[j]]++] = j;
  }
  return out;
}

}  // namespace esnufft
