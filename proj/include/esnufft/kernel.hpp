#pragma once

// "Exponential of semicircle" spreading kernel
//
//   phi(z) = exp(beta * (sqrt(1 - z^2) - 1))   for |z| <= 1,   0 otherwise,
//
// together with its parameter recipe, a piecewise-polynomial fast evaluator
// and its Fourier transform computed by Gauss-Legendre quadrature.
//
// All objects here are immutable after construction and safe to share
// read-only between threads.

#include <cstdint>
#include <span>
#include <vector>

namespace esnufft {

inline constexpr int kMinWidth = 2;
inline constexpr int kMaxWidth = 16;
inline constexpr double kMinTolerance = 1e-15;
inline constexpr double kMaxTolerance = 1e-1;

struct KernelParams {
  int width = 0;        // w: grid points covered per dimension
  double beta = 0.0;    // ES shape parameter
  double sigma = 2.0;   // upsampling factor, 2 or 5/4
  double gamma = 0.0;   // safety factor, beta / (pi w (1 - 1/(2 sigma)))
  int quad_nodes = 0;   // positive Gauss-Legendre nodes used for the FT
};

// Kernel parameters for a requested relative tolerance. Throws
// Status::bad_tolerance outside [1e-15, 1e-1] and Status::argument for
// an unsupported sigma.
KernelParams select_params(double tolerance, double sigma = 2.0);

// Parameters for an explicit width, with beta from the same recipe
// select_params would use at that width.
KernelParams params_for_width(int width, double sigma = 2.0);

// Nominal aliasing tolerance that a given width is designed for.
double width_tolerance(const KernelParams& params);

// Direct evaluation; exactly 0 outside [-1, 1].
double es_eval(double z, double beta) noexcept;

// Positive half of a 2p-point Gauss-Legendre rule on [-1, 1], by Newton
// iteration on the Legendre recurrence in extended precision.
struct GaussLegendreHalf {
  std::vector<double> nodes;  // ascending, in (0, 1)
  std::vector<double> weights;
};
GaussLegendreHalf gauss_legendre_half(int positive_nodes);

// w pieces of degree w+3 covering [-1, 1]. Piece m approximates the kernel on
// [-1 + 2m/w, -1 + 2(m+1)/w] in a local variable t in [-1, 1].
class PiecewisePoly {
 public:
  explicit PiecewisePoly(const KernelParams& params);

  int pieces() const noexcept { return width_; }
  int degree() const noexcept { return degree_; }

  // Kernel values at the w ordinates z_m = 2 (x_frac + m) / w - 1,
  // m = 0..w-1, where x_frac in [0, 1) is the offset of the first ordinate
  // from the window start. out.size() must be >= w.
  void eval_row(double x_frac, std::span<double> out) const noexcept;

  // Single-point evaluation at kernel coordinate z (0 outside [-1, 1]).
  double operator()(double z) const noexcept;

  // Largest deviation from es_eval found on the dense check at construction.
  double max_residual() const noexcept { return max_residual_; }

  // Monomial coefficients of piece m, lowest order first.
  std::vector<double> coefficients(int piece) const;

 private:
  int width_;
  int degree_;
  double beta_;
  // coeffs_[k * width_ + m] is the t^k coefficient of piece m, so a Horner
  // step touches all pieces with unit stride.
  std::vector<double> coeffs_;
  double max_residual_ = 0.0;
};

// Same row as PiecewisePoly::eval_row, using exp/sqrt directly.
void exact_eval_row(const KernelParams& params, double x_frac,
                    std::span<double> out) noexcept;

// Fourier transform of the kernel rescaled to support [-alpha, alpha]:
//   psi_hat(k) ~= 2 alpha sum_j w_j phi(q_j) cos(alpha k q_j)
// over params.quad_nodes positive nodes.
std::vector<double> kernel_ft(const KernelParams& params, double alpha,
                              std::span<const double> ks);

// Correction factors p_k = h / psi_hat(k) = 2 / (w phi_hat(alpha k)) for k in
// the centered index set of size modes, on a fine grid of size n. Output is
// in centered order (k = -floor(modes/2) first). Uses phase winding: one
// complex exponential per quadrature node, then a recurrence over k.
std::vector<double> fseries_correction(const KernelParams& params,
                                       std::int64_t n, std::int64_t modes);

}  // namespace esnufft
