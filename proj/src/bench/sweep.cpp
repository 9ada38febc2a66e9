#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "esnufft/bench.hpp"
#include "esnufft/esnufft.h"
#include "esnufft/oracle.hpp"

namespace esnufft::bench {
namespace {

constexpr double kSelfReferenceTol = 1e-14;

struct Problem {
  int type = 1;
  int dim = 1;
  PointCloud src;
  std::array<std::int64_t, 3> modes{1, 1, 1};
  std::array<std::vector<double>, 3> targets;
  std::vector<cplx> input;
  std::int64_t out_len = 0;
};

const double* axis(const std::array<std::vector<double>, 3>& a, int d) {
  return a[d].empty() ? nullptr : a[d].data();
}

int call(const Problem& p, double tol, const esnufft_opts& opts, std::vector<cplx>& out) {
  const auto m = p.src.count();
  const double* x = axis(p.src.x, 0);
  const double* y = axis(p.src.x, 1);
  const double* z = axis(p.src.x, 2);
  const auto* in = reinterpret_cast<const double*>(p.input.data());
  auto* o = reinterpret_cast<double*>(out.data());
  const auto& n = p.modes;
  switch (p.type * 10 + p.dim) {
    case 11: return esnufft1d1(m, x, in, +1, tol, n[0], o, &opts);
    case 12: return esnufft2d1(m, x, y, in, +1, tol, n[0], n[1], o, &opts);
    case 13: return esnufft3d1(m, x, y, z, in, +1, tol, n[0], n[1], n[2], o, &opts);
    case 21: return esnufft1d2(m, x, o, +1, tol, n[0], in, &opts);
    case 22: return esnufft2d2(m, x, y, o, +1, tol, n[0], n[1], in, &opts);
    case 23: return esnufft3d2(m, x, y, z, o, +1, tol, n[0], n[1], n[2], in, &opts);
    case 31: {
      const auto nt = p.out_len;
      return esnufft1d3(m, x, in, +1, tol, nt, axis(p.targets, 0), o, &opts);
    }
    case 32:
      return esnufft2d3(m, x, y, in, +1, tol, p.out_len, axis(p.targets, 0),
                        axis(p.targets, 1), o, &opts);
    case 33:
      return esnufft3d3(m, x, y, z, in, +1, tol, p.out_len, axis(p.targets, 0),
                        axis(p.targets, 1), axis(p.targets, 2), o, &opts);
  }
  return ESNUFFT_ERR_ARGUMENT;
}

// Reference output: direct sums within the guard, else a tight self-reference.
std::vector<cplx> reference(const Problem& p, std::string& kind) {
  const double work = double(p.src.count()) * double(p.out_len);
  if (work <= oracle::kMaxWork) {
    kind = "direct";
    const oracle::Coords x{p.src.x[0], p.src.x[1], p.src.x[2]};
    if (p.type == 1) return oracle::direct_type1(p.dim, x, p.input, p.modes, +1);
    if (p.type == 2) return oracle::direct_type2(p.dim, x, p.input, p.modes, +1);
    const oracle::Coords s{p.targets[0], p.targets[1], p.targets[2]};
    return oracle::direct_type3(p.dim, x, p.input, s, +1);
  }
  esnufft_opts o;
  esnufft_default_opts(&o);
  std::vector<cplx> out(p.out_len);
  if (call(p, kSelfReferenceTol, o, out) != ESNUFFT_OK) {
    kind = "none";
    return {};
  }
  kind = "self";
  return out;
}

}  // namespace

void validate(const BenchSpec& s) {
  if (s.type < 1 || s.type > 3) throw std::invalid_argument("type must be 1, 2 or 3");
  if (s.dim < 1 || s.dim > 3) throw std::invalid_argument("dim must be 1, 2 or 3");
  if (s.m < 1) throw std::invalid_argument("M must be positive");
  if (s.n < 1) throw std::invalid_argument("N must be positive");
  if (s.reps < 3) throw std::invalid_argument("reps must be at least 3");
  if (s.tolerances.empty()) throw std::invalid_argument("need at least one tolerance");
  if (s.threads.empty()) throw std::invalid_argument("need at least one thread count");
  for (int t : s.threads)
    if (t < 1) throw std::invalid_argument("thread counts must be positive");
  if (s.dist == Dist::disc && s.dim != 2) throw std::invalid_argument("disc needs --dim 2");
  if (s.dist == Dist::sph && s.dim != 3) throw std::invalid_argument("sph needs --dim 3");
}

std::vector<Row> run_sweep(const BenchSpec& spec, const Progress& progress) {
  validate(spec);
  Problem p;
  p.type = spec.type;
  p.dim = spec.dim;
  p.src = gen_points(spec.dist, spec.m, spec.dim, spec.seed);
  p.modes = mode_counts(spec.n, spec.dim);
  const std::int64_t nmodes = p.modes[0] * p.modes[1] * p.modes[2];
  if (spec.type == 3) {
    std::mt19937_64 rng(spec.seed + 2);
    for (int d = 0; d < spec.dim; ++d) {
      const double half = 0.5 * static_cast<double>(p.modes[d]);
      std::uniform_real_distribution<double> u(-half, half);
      p.targets[d].resize(spec.n);
      for (auto& v : p.targets[d]) v = u(rng);
    }
    p.out_len = spec.n;
  } else {
    p.out_len = spec.type == 1 ? nmodes : p.src.count();
  }
  p.input = gen_strengths(spec.type == 2 ? nmodes : p.src.count(), spec.seed + 1);

  std::string ref_kind;
  bool ref_done = false;
  std::vector<cplx> ref;

  std::vector<Row> rows;
  std::vector<cplx> out(p.out_len);
  for (double tol : spec.tolerances) {
    for (int threads : spec.threads) {
      Row r;
      r.type = spec.type;
      r.dim = spec.dim;
      r.dist = dist_name(spec.dist);
      r.m = p.src.count();
      r.n = spec.type == 3 ? spec.n : nmodes;
      r.n1 = p.modes[0];
      r.n2 = p.modes[1];
      r.n3 = p.modes[2];
      r.tol = tol;
      r.threads = threads;
      r.reps = spec.reps;
      r.err = std::numeric_limits<double>::quiet_NaN();
      r.ref = "none";
      esnufft_timing tm{};
      esnufft_opts o;
      esnufft_default_opts(&o);
      o.threads = threads;
      o.exact_kernel = spec.exact_kernel;
      o.check_bounds = spec.check_bounds;
      o.timing = &tm;
      r.wall = std::numeric_limits<double>::infinity();
      for (int rep = 0; rep < spec.reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const int st = call(p, tol, o, out);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (st != ESNUFFT_OK) {
          r.status = st;
          r.message = esnufft_last_error();
          break;
        }
        if (wall < r.wall) {
          r.wall = wall;
          r.sort = tm.sort;
          r.spread = tm.spread;
          r.interp = tm.interp;
          r.fft = tm.fft;
          r.correct = tm.correct;
          r.total = tm.total;
        }
      }
      if (r.status != ESNUFFT_OK) {
        r.wall = 0.0;
      } else {
        if (!ref_done) {
          ref = reference(p, ref_kind);
          ref_done = true;
        }
        if (!ref.empty()) {
          r.ref = ref_kind;
          r.err = oracle::rel_l2(out, ref).rel_l2;
        }
      }
      if (progress) progress(r);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

bool rows_equal(const Row& a, const Row& b) {
  const bool err_eq = (std::isnan(a.err) && std::isnan(b.err)) || a.err == b.err;
  return a.type == b.type && a.dim == b.dim && a.dist == b.dist && a.m == b.m && a.n == b.n &&
         a.n1 == b.n1 && a.n2 == b.n2 && a.n3 == b.n3 && a.tol == b.tol &&
         a.threads == b.threads && a.reps == b.reps && a.wall == b.wall && a.sort == b.sort &&
         a.spread == b.spread && a.interp == b.interp && a.fft == b.fft &&
         a.correct == b.correct && a.total == b.total && err_eq && a.ref == b.ref &&
         a.status == b.status && a.message == b.message;
}

}  // namespace esnufft::bench
