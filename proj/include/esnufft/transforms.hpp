#pragma once

// The nine transforms (types 1-3 in dimensions 1-3).
//
//   type 1:  f_k = sum_j c_j exp(isign i k.x_j),   k in the centered set K_N
//   type 2:  c_j = sum_k f_k exp(isign i k.x_j)
//   type 3:  f_k = sum_j c_j exp(isign i s_k.x_j), s_k arbitrary reals
//
// Mode arrays are stored in centered row-major order, dimension 1 fastest.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "esnufft/grid.hpp"
#include "esnufft/kernel.hpp"
#include "esnufft/points.hpp"
#include "esnufft/spreadinterp.hpp"

namespace esnufft {

enum class CenterShift { automatic, always, never };

// Wall-clock seconds per stage of the last call. Type 3 folds its inner
// type 2 into the same fields.
struct StageTimings {
  double sort = 0.0;
  double spread = 0.0;
  double interp = 0.0;
  double fft = 0.0;
  double correct = 0.0;
  double total = 0.0;
};

inline constexpr std::int64_t kDefaultType3MaxGrid = std::int64_t{1} << 31;

struct TransformOptions {
  double tolerance = 1e-6;
  int isign = +1;
  double sigma = 2.0;
  int threads = 0;  // 0: all available
  bool check_bounds = false;
  bool use_exact_kernel = false;
  bool debug_timing = false;  // print stage timings to stderr
  CenterShift center_shift = CenterShift::automatic;
  std::int64_t type3_max_grid = kDefaultType3MaxGrid;  // complex values
  StageTimings* timings = nullptr;
  SpreadStats* spread_stats = nullptr;
};

struct ModeArray {
  ModeIndexSet modes;
  std::vector<cplx> values;
};

void exec_type1(const NuPointSet& points, std::span<const cplx> strengths,
                const ModeIndexSet& modes, std::span<cplx> out, const TransformOptions& opts);
ModeArray exec_type1(const NuPointSet& points, std::span<const cplx> strengths,
                     const ModeIndexSet& modes, const TransformOptions& opts);

void exec_type2(const ModeIndexSet& modes, std::span<const cplx> coeffs,
                const NuPointSet& points, std::span<cplx> out, const TransformOptions& opts);
std::vector<cplx> exec_type2(const ModeArray& f, const NuPointSet& points,
                             const TransformOptions& opts);

// targets holds the frequencies s_k (same dimension as points).
void exec_type3(const NuPointSet& points, std::span<const cplx> strengths,
                const NuPointSet& targets, std::span<cplx> out, const TransformOptions& opts);
std::vector<cplx> exec_type3(const NuPointSet& points, std::span<const cplx> strengths,
                             const NuPointSet& targets, const TransformOptions& opts);

struct Type3Axis {
  std::int64_t n = 1;  // fine grid size
  double gamma = 1.0;  // dilation of the sources
};

// n = next_smooth(max(ceil((2 sigma / pi) X S + w), 2w)), gamma = n / (2 sigma S),
// so that X / gamma <= pi (1 - w/n) and gamma S <= n / (2 sigma).
Type3Axis plan_type3_axis(double X, double S, const KernelParams& params);

struct Type3Geometry {
  int dim = 1;
  std::array<double, 3> X{0, 0, 0};
  std::array<double, 3> S{0, 0, 0};
  std::array<double, 3> x0{0, 0, 0};
  std::array<double, 3> s0{0, 0, 0};
  std::array<double, 3> gamma{1, 1, 1};
  std::array<std::int64_t, 3> n{1, 1, 1};
};

// Throws Status::resource when prod(n) exceeds max_grid.
Type3Geometry plan_type3_geometry(int dim, const std::array<double, 3>& X,
                                  const std::array<double, 3>& S, const KernelParams& params,
                                  std::int64_t max_grid = kDefaultType3MaxGrid);

struct ShiftResult {
  double shift = 0.0;       // midpoint of [min, max], or 0 when not applied
  double half_width = 0.0;  // max |coordinate - shift|
  bool applied = false;
};

// Automatic mode shifts only when this shrinks max |coordinate| by more than 2x.
ShiftResult center_shift(std::span<const double> coords, CenterShift mode);

}  // namespace esnufft
