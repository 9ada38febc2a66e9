#pragma once

// Thin seam over a complex-to-complex multidimensional FFT with plan reuse.
//
// Sign convention: Direction::forward applies e^{+2 pi i l k / n}, backward
// applies e^{-2 pi i l k / n}. Nothing is normalized.

#include <array>
#include <cstdint>
#include <span>

#include "esnufft/grid.hpp"

namespace esnufft {

enum class Direction { forward, backward };

struct FftPlanKey {
  int dim = 1;
  std::array<std::int64_t, 3> sizes{1, 1, 1};  // dimension 1 fastest in memory
  Direction direction = Direction::forward;
  int threads = 1;

  auto operator<=>(const FftPlanKey&) const = default;
};

FftPlanKey make_plan_key(const GridShape& shape, Direction dir, int threads);

// In-place transform using a cached plan. Throws Status::size when data does
// not hold exactly prod(sizes) values.
void fft_exec(const FftPlanKey& key, std::span<cplx> data);

// Plans, executes and destroys a plan; for measuring what the cache saves.
void fft_exec_uncached(const FftPlanKey& key, std::span<cplx> data);

// Number of distinct plans currently cached.
std::size_t fft_cached_plans();

}  // namespace esnufft
