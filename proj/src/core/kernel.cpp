#include "esnufft/kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "esnufft/errors.hpp"

namespace esnufft {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSafetyFactor = 0.976;  // gamma used for sigma != 2
constexpr double kBetaPerWidthSigma2 = 2.30;

// Exponential decay rate of the aliasing bound per unit width (natural log,
// divided by pi) for upsampling sigma and safety factor gamma.
double aliasing_rate(double sigma, double gamma) {
  return gamma * std::sqrt(1.0 - 1.0 / sigma -
                           (1.0 / (gamma * gamma) - 1.0) / (4.0 * sigma * sigma));
}

// How many times faster the width must grow at sigma than at sigma = 2 to
// keep the same number of digits per unit width.
double width_scale(double sigma) {
  if (sigma == 2.0) return 1.0;
  const double gamma2 = kBetaPerWidthSigma2 / (kPi * 0.75);
  return aliasing_rate(sigma, kSafetyFactor) / aliasing_rate(2.0, gamma2);
}

bool supported_sigma(double sigma) { return sigma == 2.0 || sigma == 1.25; }

double beta_for(int width, double sigma) {
  if (sigma == 2.0) return kBetaPerWidthSigma2 * width;
  return kSafetyFactor * kPi * width * (1.0 - 1.0 / (2.0 * sigma));
}

KernelParams make_params(int width, double sigma) {
  KernelParams p;
  p.width = width;
  p.sigma = sigma;
  p.beta = beta_for(width, sigma);
  p.gamma = p.beta / (kPi * width * (1.0 - 1.0 / (2.0 * sigma)));
  p.quad_nodes = (3 * width + 4 + 1) / 2;  // ceil(1.5 w + 2)
  return p;
}

long double es_eval_ld(long double z, long double beta) {
  if (std::fabs(z) > 1.0L) return 0.0L;
  return std::exp(beta * (std::sqrt(1.0L - z * z) - 1.0L));
}

}  // namespace

KernelParams select_params(double tolerance, double sigma) {
  if (!(tolerance >= kMinTolerance && tolerance <= kMaxTolerance)) {
    std::ostringstream os;
    os << "tolerance " << tolerance << " outside valid interval ["
       << kMinTolerance << ", " << kMaxTolerance << "]";
    throw Error(Status::bad_tolerance, os.str());
  }
  if (!supported_sigma(sigma)) {
    std::ostringstream os;
    os << "upsampling factor " << sigma << " not supported (use 2 or 1.25)";
    throw Error(Status::argument, os.str());
  }
  // The small offset keeps exact powers of ten from rounding up a width.
  const double digits = -std::log10(tolerance);
  int width = static_cast<int>(std::ceil(digits / width_scale(sigma) - 1e-9)) + 1;
  width = std::clamp(width, kMinWidth, kMaxWidth);
  return make_params(width, sigma);
}

KernelParams params_for_width(int width, double sigma) {
  if (width < kMinWidth || width > kMaxWidth) {
    throw Error(Status::argument, "kernel width " + std::to_string(width) +
                                      " outside [2, 16]");
  }
  if (!supported_sigma(sigma)) {
    throw Error(Status::argument, "unsupported upsampling factor");
  }
  return make_params(width, sigma);
}

double width_tolerance(const KernelParams& params) {
  return std::pow(10.0, -(params.width - 1) * width_scale(params.sigma));
}

double es_eval(double z, double beta) noexcept {
  if (std::fabs(z) > 1.0) return 0.0;
  return std::exp(beta * (std::sqrt(1.0 - z * z) - 1.0));
}

GaussLegendreHalf gauss_legendre_half(int positive_nodes) {
  if (positive_nodes < 1) {
    throw Error(Status::argument, "need at least one quadrature node");
  }
  const int n = 2 * positive_nodes;
  const long double pi = std::numbers::pi_v<long double>;
  auto legendre = [n](long double x, long double& dp) {
    long double p0 = 1.0L;
    long double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0L);
    return p1;
  };
  GaussLegendreHalf rule;
  for (int i = positive_nodes; i >= 1; --i) {
    long double x = std::cos(pi * (i - 0.25L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      const long double dx = legendre(x, dp) / dp;
      x -= dx;
      if (std::fabs(dx) <= 1e-18L) break;
    }
    legendre(x, dp);
    rule.nodes.push_back(static_cast<double>(x));
    rule.weights.push_back(static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp)));
  }
  return rule;
}

PiecewisePoly::PiecewisePoly(const KernelParams& params)
    : width_(params.width), degree_(params.width + 3), beta_(params.beta) {
  using Cplx = std::complex<double>;
  const int ncoef = degree_ + 1;
  const int npts = 2 * ncoef;
  coeffs_.assign(static_cast<std::size_t>(ncoef) * width_, 0.0);

  // Collocation points evenly spaced (half-step offset) around the boundary
  // of the square [-1, 1] x [-i, i] in the local variable.
  std::vector<Cplx> local(npts);
  for (int j = 0; j < npts; ++j) {
    const double s = 8.0 * (j + 0.5) / npts;
    if (s < 2.0)
      local[j] = {-1.0 + s, -1.0};
    else if (s < 4.0)
      local[j] = {1.0, s - 3.0};
    else if (s < 6.0)
      local[j] = {1.0 - (s - 4.0), 1.0};
    else
      local[j] = {-1.0, -(s - 7.0)};
  }
  Eigen::MatrixXcd vander(npts, ncoef);
  for (int j = 0; j < npts; ++j) {
    Cplx pw = 1.0;
    for (int k = 0; k < ncoef; ++k) {
      vander(j, k) = pw;
      pw *= local[j];
    }
  }
  const auto qr = vander.colPivHouseholderQr();
  const double half = 1.0 / width_;
  for (int m = 0; m < width_; ++m) {
    const double center = -1.0 + (2.0 * m + 1.0) / width_;
    Eigen::VectorXcd rhs(npts);
    for (int j = 0; j < npts; ++j) {
      const Cplx z = center + half * local[j];
      rhs(j) = std::exp(beta_ * (std::sqrt(1.0 - z * z) - 1.0));
    }
    const Eigen::VectorXcd c = qr.solve(rhs);
    for (int k = 0; k < ncoef; ++k) coeffs_[k * width_ + m] = c(k).real();
  }

  constexpr int kChecksPerPiece = 64;
  for (int m = 0; m < width_; ++m) {
    const double center = -1.0 + (2.0 * m + 1.0) / width_;
    for (int s = 0; s <= kChecksPerPiece; ++s) {
      const double t = -1.0 + 2.0 * s / kChecksPerPiece;
      double acc = coeffs_[degree_ * width_ + m];
      for (int k = degree_ - 1; k >= 0; --k) acc = acc * t + coeffs_[k * width_ + m];
      const double err = std::fabs(acc - es_eval(center + half * t, beta_));
      max_residual_ = std::max(max_residual_, err);
    }
  }
  const double limit = std::max(width_tolerance(params), 1e-13);
  if (!(max_residual_ <= limit)) {
    std::ostringstream os;
    os << "piecewise polynomial fit for w=" << width_
       << " has max residual " << max_residual_ << " (limit " << limit << ")";
    throw Error(Status::internal, os.str());
  }
}

void PiecewisePoly::eval_row(double x_frac, std::span<double> out) const noexcept {
  const double t = 2.0 * x_frac - 1.0;
  const int w = width_;
  const double* c = coeffs_.data();
  double* o = out.data();
  for (int m = 0; m < w; ++m) o[m] = c[degree_ * w + m];
  for (int k = degree_ - 1; k >= 0; --k) {
    const double* ck = c + k * w;
    for (int m = 0; m < w; ++m) o[m] = o[m] * t + ck[m];
  }
}

double PiecewisePoly::operator()(double z) const noexcept {
  if (std::fabs(z) > 1.0) return 0.0;
  int m = static_cast<int>(std::floor((z + 1.0) * width_ / 2.0));
  m = std::clamp(m, 0, width_ - 1);
  const double center = -1.0 + (2.0 * m + 1.0) / width_;
  const double t = (z - center) * width_;
  double acc = coeffs_[degree_ * width_ + m];
  for (int k = degree_ - 1; k >= 0; --k) acc = acc * t + coeffs_[k * width_ + m];
  return acc;
}

std::vector<double> PiecewisePoly::coefficients(int piece) const {
  std::vector<double> c(degree_ + 1);
  for (int k = 0; k <= degree_; ++k) c[k] = coeffs_[k * width_ + piece];
  return c;
}

void exact_eval_row(const KernelParams& params, double x_frac,
                    std::span<double> out) noexcept {
  const int w = params.width;
  const double scale = 2.0 / w;
  for (int m = 0; m < w; ++m) out[m] = es_eval(scale * (x_frac + m) - 1.0, params.beta);
}

std::vector<double> kernel_ft(const KernelParams& params, double alpha,
                              std::span<const double> ks) {
  const auto rule = gauss_legendre_half(params.quad_nodes);
  const std::size_t p = rule.nodes.size();
  std::vector<long double> amp(p);
  for (std::size_t j = 0; j < p; ++j)
    amp[j] = rule.weights[j] * es_eval_ld(rule.nodes[j], params.beta);

  std::vector<double> out(ks.size());
  const long double a = alpha;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    long double sum = 0.0L;
    for (std::size_t j = 0; j < p; ++j)
      sum += amp[j] * std::cos(a * static_cast<long double>(ks[i]) * rule.nodes[j]);
    out[i] = static_cast<double>(2.0L * a * sum);
  }
  return out;
}

std::vector<double> fseries_correction(const KernelParams& params, std::int64_t n,
                                       std::int64_t modes) {
  if (modes < 1) throw Error(Status::size, "mode count must be positive");
  const auto min_n = std::max<std::int64_t>(
      static_cast<std::int64_t>(std::ceil(params.sigma * modes - 1e-9)), 2 * params.width);
  if (n < min_n) {
    std::ostringstream os;
    os << "fine grid size " << n << " below required " << min_n;
    throw Error(Status::size, os.str());
  }
  const auto rule = gauss_legendre_half(params.quad_nodes);
  const std::size_t p = rule.nodes.size();
  const long double alpha = std::numbers::pi_v<long double> * params.width / n;

  const std::int64_t kmax = modes / 2;
  std::vector<long double> acc(kmax + 1, 0.0L);
  for (std::size_t j = 0; j < p; ++j) {
    const long double amp = rule.weights[j] * es_eval_ld(rule.nodes[j], params.beta);
    const std::complex<long double> step = std::polar(1.0L, alpha * rule.nodes[j]);
    std::complex<long double> phase = 1.0L;
    for (std::int64_t k = 0; k <= kmax; ++k) {
      acc[k] += amp * phase.real();
      phase *= step;
    }
  }

  // p_k = 2 / (w phi_hat(alpha k)), phi_hat = 2 * acc.
  std::vector<double> corr(modes);
  const std::int64_t kmin = -(modes / 2);
  for (std::int64_t i = 0; i < modes; ++i) {
    const std::int64_t k = std::abs(kmin + i);
    if (!(acc[k] > 0.0L)) {
      throw Error(Status::internal,
                  "kernel Fourier transform not positive at k=" + std::to_string(k));
    }
    corr[i] = static_cast<double>(1.0L / (params.width * acc[k]));
  }
  return corr;
}

}  // namespace esnufft
