#pragma once

// Spreading of weighted, periodized kernels from nonuniform points onto a
// fine grid, and its exact adjoint, interpolation.
//
// Spreading is load balanced by cutting the bin-sorted points into
// subproblems of at most kMaxSubproblem points. Each subproblem is spread into
// a private cuboid padded by w/2 per side (no index wrapping), and the cuboid
// is then added into the periodic grid inside a single critical section.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "esnufft/grid.hpp"
#include "esnufft/kernel.hpp"
#include "esnufft/points.hpp"

namespace esnufft {

inline constexpr std::int64_t kMaxSubproblem = 10000;

struct SpreadStats {
  std::int64_t subproblems = 0;
  std::vector<double> thread_busy_seconds;  // thread CPU time per worker
};

struct SpreadOptions {
  int threads = 0;                   // 0: all available
  bool exact_kernel = false;         // exp/sqrt instead of the polynomial
  bool conjugate = false;            // use conj(strengths) / return conj(values)
  std::int64_t max_subproblem = kMaxSubproblem;
  SpreadStats* stats = nullptr;
};

int resolve_threads(int requested) noexcept;

// Evaluates rows of w kernel values, by polynomial or directly.
class KernelRows {
 public:
  KernelRows(const KernelParams& params, bool exact);
  const KernelParams& params() const noexcept { return params_; }
  void row(double x_frac, std::span<double> out) const noexcept;

 private:
  KernelParams params_;
  std::optional<PiecewisePoly> poly_;
};

// First grid index of the w-point window for grid coordinate u, and the
// fractional offset of that index from u + w/2 (in [0, 1)).
struct Window {
  std::int64_t start;
  double frac;
};
Window kernel_window(double u, int width) noexcept;

struct Subproblem {
  std::int64_t begin = 0;  // slice [begin, end) of the sorted order
  std::int64_t end = 0;
  std::array<std::int64_t, 3> offset{0, 0, 0};  // may be negative or beyond n
  std::array<std::int64_t, 3> size{1, 1, 1};
};

// Greedy consecutive slices of at most max_size sorted points, each with the
// cuboid covering every point's kernel footprint.
std::vector<Subproblem> partition_subproblems(const NuPointSet& points,
                                              std::span<const std::int64_t> order,
                                              const GridShape& grid, int width,
                                              std::int64_t max_size = kMaxSubproblem);

// b_l = sum_j c_j psi~(l h - x_j). Zeroes the grid first. When order is null
// the points are bin sorted internally.
void spread(const NuPointSet& points, std::span<const cplx> strengths, FineGrid& grid,
            const KernelRows& kernel, const SpreadOptions& opts = {},
            const BinSortPermutation* order = nullptr);

// c_j = sum_l b_l psi~(l h - x_j), written into out (length M).
void interp(const FineGrid& grid, const NuPointSet& points, std::span<cplx> out,
            const KernelRows& kernel, const SpreadOptions& opts = {},
            const BinSortPermutation* order = nullptr);

}  // namespace esnufft
