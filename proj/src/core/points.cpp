#include "esnufft/points.hpp"

#include <sstream>

#include "esnufft/errors.hpp"

namespace esnufft {

NuPointSet make_points(std::span<const double> x, std::span<const double> y,
                       std::span<const double> z) {
  NuPointSet p;
  p.dim = z.empty() ? (y.empty() ? 1 : 2) : 3;
  p.count = static_cast<std::int64_t>(x.size());
  p.coords = {x, y, z};
  if ((p.dim >= 2 && y.size() != x.size()) || (p.dim == 3 && z.size() != x.size()))
    throw Error(Status::size, "coordinate arrays have different lengths");
  return p;
}

void validate_points(const NuPointSet& points, bool check_bounds) {
  constexpr double limit = 3.0 * std::numbers::pi;
  for (int d = 0; d < points.dim; ++d) {
    const auto ax = points.axis(d);
    if (static_cast<std::int64_t>(ax.size()) != points.count)
      throw Error(Status::size, "coordinate array length does not match point count");
    for (std::int64_t j = 0; j < points.count; ++j) {
      const double v = ax[j];
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "non-finite coordinate at index " << j << " (dimension " << d + 1 << ")";
        throw Error(Status::data, os.str());
      }
      if (check_bounds && (v < -limit || v > limit)) {
        std::ostringstream os;
        os << "coordinate " << v << " at index " << j << " (dimension " << d + 1
           << ") outside [-3pi, 3pi]";
        throw Error(Status::bounds, os.str());
      }
    }
  }
}

}  // namespace esnufft
