#pragma once

// Brute-force references and error metrics. This module shares no code with
// the fast transforms.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace esnufft::oracle {

using cplx = std::complex<double>;
using Coords = std::array<std::span<const double>, 3>;  // unused axes empty

inline constexpr double kMaxWork = 1e8;  // M * N guard for the direct sums

class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// f_k = sum_j c_j exp(isign i s_k . x_j), accumulated in ascending j with the
// phase formed in extended precision.
std::vector<cplx> direct_type3(int dim, const Coords& x, std::span<const cplx> c,
                               const Coords& s, int isign);

// Type 1 over the centered index set of counts N (dimension 1 fastest).
// Evaluated as direct_type3 at the integer frequencies.
std::vector<cplx> direct_type1(int dim, const Coords& x, std::span<const cplx> c,
                               const std::array<std::int64_t, 3>& N, int isign);

// c_j = sum_k f_k exp(isign i k . x_j), ascending k.
std::vector<cplx> direct_type2(int dim, const Coords& x, std::span<const cplx> f,
                               const std::array<std::int64_t, 3>& N, int isign);

// Type 1 at selected flat mode indices only, accumulated in long double.
// Not subject to the work guard; cost is M * modes.size().
std::vector<cplx> direct_type1_subset(int dim, const Coords& x, std::span<const cplx> c,
                                      const std::array<std::int64_t, 3>& N, int isign,
                                      std::span<const std::int64_t> flat_modes);

// 1D type 1 at the consecutive frequencies k0, k0+1, ..., k0+count-1, in long
// double, stepping each exponential by multiplication.
std::vector<cplx> direct_type1_1d_block(std::span<const double> x, std::span<const cplx> c,
                                        std::int64_t k0, std::int64_t count, int isign);

struct ErrorReport {
  double rel_l2 = 0.0;
  double max_abs = 0.0;
  double rounding_floor = 0.0;  // N_max * 1.1e-16
};

// Throws std::domain_error for an all-zero reference and
// std::invalid_argument for a length mismatch.
ErrorReport rel_l2(std::span<const cplx> approx, std::span<const cplx> exact,
                   std::int64_t n_max = 0);

// Computes a 1D type 1 with N modes from strengths of length M.
using Type1Fn = std::function<void(std::span<const cplx> c, std::span<cplx> f)>;

struct AliasingProbe {
  std::int64_t modes = 0;
  std::int64_t points = 0;
  std::vector<double> magnitude;  // |E_kj|, column j at offset j * modes
  double max_error = 0.0;
};

// Column j is fast(e_j) - direct(e_j). Requires N, M <= 64.
AliasingProbe aliasing_probe(std::int64_t N, std::span<const double> x, int isign,
                             const Type1Fn& fast);

}  // namespace esnufft::oracle
