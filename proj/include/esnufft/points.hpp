#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace esnufft {

// Non-owning view of M nonuniform coordinates in d = 1..3 dimensions.
// Periodic transforms accept radians in [-3pi, 3pi] and fold them into one
// period; unused dimensions have empty spans.
struct NuPointSet {
  int dim = 1;
  std::int64_t count = 0;
  std::array<std::span<const double>, 3> coords{};

  std::span<const double> axis(int i) const { return coords[i]; }
};

NuPointSet make_points(std::span<const double> x, std::span<const double> y = {},
                       std::span<const double> z = {});

// Throws Status::data on a non-finite coordinate (naming the index) and, when
// check_bounds is set, Status::bounds for a coordinate outside [-3pi, 3pi].
void validate_points(const NuPointSet& points, bool check_bounds);

// Fold x (radians) into [0, 2pi) and rescale to grid units [0, n).
// Inputs within one period of [0, 2pi) fold by exact +-2pi shifts; anything
// further out falls back to fmod.
inline double fold_rescale(double x, std::int64_t n) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (x < 0.0) {
    x += two_pi;
    if (x < 0.0) x += two_pi;
  } else if (x >= two_pi) {
    x -= two_pi;
    if (x >= two_pi) x -= two_pi;
  }
  if (!(x >= 0.0 && x < two_pi)) {
    x = std::fmod(x, two_pi);
    if (x < 0.0) x += two_pi;
    if (x >= two_pi) x = 0.0;
  }
  const double nd = static_cast<double>(n);
  double u = x * (nd / two_pi);
  if (u >= nd) u -= nd;
  return u;
}

}  // namespace esnufft
