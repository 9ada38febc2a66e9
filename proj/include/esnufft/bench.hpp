#pragma once

// Benchmark harness: the point distributions, sweeps over tolerance and
// thread count, and CSV / JSON-lines tables. Transforms go through the C API.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace esnufft::bench {

using cplx = std::complex<double>;

enum class Dist { rand, disc, sph };

Dist parse_dist(const std::string& name);  // throws std::invalid_argument
const char* dist_name(Dist d) noexcept;

struct PointCloud {
  int dim = 1;
  std::array<std::vector<double>, 3> x;
  std::int64_t count() const noexcept { return static_cast<std::int64_t>(x[0].size()); }
};

// rand: iid uniform in [-pi, pi)^d. disc (d = 2): round(sqrt M) Gauss-Legendre
// radii on [0, pi] times round(sqrt M) equispaced angles. sph (d = 3):
// round(sqrt(M)/2) Gauss-Legendre radii on [0, pi], each carrying a sphere grid
// of nt Gauss-Legendre polar nodes (in cos theta) times 2 nt equispaced
// azimuths, nt = round(sqrt(M / (2 * radii))). The returned count may differ
// from M. Throws std::invalid_argument for disc with d != 2 or sph with d != 3.
PointCloud gen_points(Dist dist, std::int64_t m, int dim, std::uint64_t seed);

// Gauss-Legendre nodes on [-1, 1], ascending.
std::vector<double> gauss_legendre_nodes(int n);

// Complex standard normal entries.
std::vector<cplx> gen_strengths(std::int64_t n, std::uint64_t seed);

// Per-axis mode counts for a total of about n modes: round(n^(1/d)) each.
std::array<std::int64_t, 3> mode_counts(std::int64_t n, int dim);

struct BenchSpec {
  int type = 1;
  int dim = 1;
  Dist dist = Dist::rand;
  std::int64_t m = 1000;
  std::int64_t n = 1000;  // total modes, or targets for type 3
  std::vector<double> tolerances{1e-6};
  std::vector<int> threads{1};
  int reps = 3;
  std::uint64_t seed = 1;
  bool exact_kernel = false;
  bool check_bounds = false;
};

// Throws std::invalid_argument for an invalid spec.
void validate(const BenchSpec& spec);

struct Row {
  int type = 1;
  int dim = 1;
  std::string dist;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t n1 = 1, n2 = 1, n3 = 1;
  double tol = 0.0;
  int threads = 1;
  int reps = 0;
  double wall = 0.0;  // best of reps, measured around the call
  double sort = 0.0, spread = 0.0, interp = 0.0, fft = 0.0, correct = 0.0, total = 0.0;
  double err = 0.0;   // NaN when no reference was computed
  std::string ref;    // "direct", "self" or "none"
  int status = 0;
  std::string message;
};

bool rows_equal(const Row& a, const Row& b);  // NaN == NaN for err

using Progress = std::function<void(const Row&)>;
std::vector<Row> run_sweep(const BenchSpec& spec, const Progress& progress = {});

inline constexpr const char* kSchemaHeader = "# esnufft-bench schema v1";

void write_csv(std::ostream& os, const std::vector<Row>& rows);
std::vector<Row> read_csv(std::istream& is);  // throws std::runtime_error
void write_jsonl(std::ostream& os, const std::vector<Row>& rows);
std::vector<Row> read_jsonl(std::istream& is);

}  // namespace esnufft::bench
