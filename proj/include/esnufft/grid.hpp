#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "esnufft/kernel.hpp"
#include "esnufft/points.hpp"

namespace esnufft {

using cplx = std::complex<double>;

// Centered mode indices per dimension: -N/2..N/2-1 (even N) or
// -(N-1)/2..(N-1)/2 (odd N). Storage is row-major with dimension 1 fastest.
struct ModeIndexSet {
  int dim = 1;
  std::array<std::int64_t, 3> counts{1, 1, 1};

  std::int64_t total() const noexcept { return counts[0] * counts[1] * counts[2]; }
  static std::int64_t first(std::int64_t n) noexcept { return -(n / 2); }
  static std::int64_t last(std::int64_t n) noexcept { return (n - 1) / 2; }
};

ModeIndexSet make_modes(std::int64_t n1, std::int64_t n2 = 1, std::int64_t n3 = 1, int dim = 0);

// Dimension and per-axis sizes of a uniform grid (unused axes are 1).
struct GridShape {
  int dim = 1;
  std::array<std::int64_t, 3> sizes{1, 1, 1};
  std::int64_t total() const noexcept { return sizes[0] * sizes[1] * sizes[2]; }
};

struct FineGrid {
  GridShape shape;
  std::vector<cplx> values;

  FineGrid() = default;
  explicit FineGrid(const GridShape& s) : shape(s), values(s.total()) {}
  double spacing(int axis) const noexcept;
};

// Least 2^a 3^b 5^c >= lower_bound. Throws Status::size on overflow.
std::int64_t next_smooth(std::int64_t lower_bound);

// n_i = next_smooth(max(ceil(sigma N_i), 2w)) on the used axes.
GridShape fine_grid_sizes(const ModeIndexSet& modes, const KernelParams& params);

// Incomplete histogram sort of points into boxes of 16 x 4 x 4 grid cells.
struct BinSortPermutation {
  std::vector<std::int64_t> order;
  std::array<std::int64_t, 3> box_size{16, 4, 4};
  std::array<std::int64_t, 3> bins{1, 1, 1};
  std::vector<std::int64_t> bin_of;  // bin index per original point
};

inline constexpr std::array<std::int64_t, 3> kBoxSize{16, 4, 4};

// Groups points by box in box order (x fastest). Runs single-threaded when
// threads_hint <= 1 or M < grid.total() / 10. Within a bin the input order is
// kept in both modes.
BinSortPermutation bin_sort(const NuPointSet& points, const GridShape& grid,
                            int threads_hint);

}  // namespace esnufft
