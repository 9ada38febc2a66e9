#include "esnufft/esnufft.h"

#include <complex>
#include <new>
#include <span>
#include <string>

#include "esnufft/errors.hpp"
#include "esnufft/transforms.hpp"

namespace {

using esnufft::cplx;
using esnufft::Error;
using esnufft::Status;

thread_local std::string last_error;

template <class F>
int try_(F&& f) {
  last_error.clear();
  try {
    f();
    return ESNUFFT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<int>(e.status());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ESNUFFT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ESNUFFT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return ESNUFFT_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw Error(Status::argument, std::string("null pointer for ") + name);
}

void need_count(int64_t v, const char* name) {
  if (v < 0) throw Error(Status::size, std::string(name) + " must be non-negative");
}

esnufft::TransformOptions convert(const esnufft_opts* o, int isign, double tol) {
  esnufft_opts d;
  esnufft_default_opts(&d);
  if (!o) o = &d;
  esnufft::TransformOptions t;
  t.tolerance = tol;
  t.isign = isign;
  t.sigma = o->upsampfac;
  t.threads = o->threads;
  t.check_bounds = o->check_bounds != 0;
  t.use_exact_kernel = o->exact_kernel != 0;
  t.debug_timing = o->debug != 0;
  if (o->threads < 0) throw Error(Status::argument, "threads must be >= 0");
  switch (o->type3_shift) {
    case -1: t.center_shift = esnufft::CenterShift::never; break;
    case 0: t.center_shift = esnufft::CenterShift::automatic; break;
    case 1: t.center_shift = esnufft::CenterShift::always; break;
    default: throw Error(Status::argument, "type3_shift must be -1, 0 or 1");
  }
  if (o->type3_max_grid < 1) throw Error(Status::argument, "type3_max_grid must be positive");
  t.type3_max_grid = o->type3_max_grid;
  return t;
}

void store_timing(const esnufft_opts* o, const esnufft::StageTimings& s) {
  if (o && o->timing) *o->timing = {s.sort, s.spread, s.interp, s.fft, s.correct, s.total};
}

std::span<const double> coords(const double* p, int64_t m) { return {p, static_cast<size_t>(m)}; }
std::span<const cplx> cvec(const double* p, int64_t n) {
  return {reinterpret_cast<const cplx*>(p), static_cast<size_t>(n)};
}
std::span<cplx> cvec(double* p, int64_t n) {
  return {reinterpret_cast<cplx*>(p), static_cast<size_t>(n)};
}

int type1(int dim, int64_t M, const double* x, const double* y, const double* z,
          const double* c, int isign, double tol, int64_t N1, int64_t N2, int64_t N3, double* f,
          const esnufft_opts* opts) {
  return try_([&] {
    need_count(M, "M");
    const double* axes[3] = {x, y, z};
    for (int d = 0; d < dim; ++d) need(axes[d], "coordinates");
    need(c, "strengths");
    need(f, "output");
    auto t = convert(opts, isign, tol);
    esnufft::StageTimings tm;
    t.timings = &tm;
    const auto pts = esnufft::make_points(coords(x, M), dim > 1 ? coords(y, M) : std::span<const double>{},
                                          dim > 2 ? coords(z, M) : std::span<const double>{});
    const auto modes = esnufft::make_modes(N1, N2, N3, dim);
    esnufft::exec_type1(pts, cvec(c, M), modes, cvec(f, modes.total()), t);
    store_timing(opts, tm);
  });
}

int type2(int dim, int64_t M, const double* x, const double* y, const double* z, double* c,
          int isign, double tol, int64_t N1, int64_t N2, int64_t N3, const double* f,
          const esnufft_opts* opts) {
  return try_([&] {
    need_count(M, "M");
    const double* axes[3] = {x, y, z};
    for (int d = 0; d < dim; ++d) need(axes[d], "coordinates");
    need(c, "output");
    need(f, "coefficients");
    auto t = convert(opts, isign, tol);
    esnufft::StageTimings tm;
    t.timings = &tm;
    const auto pts = esnufft::make_points(coords(x, M), dim > 1 ? coords(y, M) : std::span<const double>{},
                                          dim > 2 ? coords(z, M) : std::span<const double>{});
    const auto modes = esnufft::make_modes(N1, N2, N3, dim);
    esnufft::exec_type2(modes, cvec(f, modes.total()), pts, cvec(c, M), t);
    store_timing(opts, tm);
  });
}

int type3(int dim, int64_t M, const double* x, const double* y, const double* z,
          const double* c, int isign, double tol, int64_t N, const double* s, const double* t_,
          const double* u, double* f, const esnufft_opts* opts) {
  return try_([&] {
    need_count(M, "M");
    need_count(N, "N");
    const double* axes[3] = {x, y, z};
    const double* freqs[3] = {s, t_, u};
    for (int d = 0; d < dim; ++d) {
      need(axes[d], "coordinates");
      need(freqs[d], "target frequencies");
    }
    need(c, "strengths");
    need(f, "output");
    auto t = convert(opts, isign, tol);
    esnufft::StageTimings tm;
    t.timings = &tm;
    const auto pts = esnufft::make_points(coords(x, M), dim > 1 ? coords(y, M) : std::span<const double>{},
                                          dim > 2 ? coords(z, M) : std::span<const double>{});
    const auto tgt = esnufft::make_points(coords(s, N), dim > 1 ? coords(t_, N) : std::span<const double>{},
                                          dim > 2 ? coords(u, N) : std::span<const double>{});
    esnufft::exec_type3(pts, cvec(c, M), tgt, cvec(f, N), t);
    store_timing(opts, tm);
  });
}

}  // namespace

extern "C" {

void esnufft_default_opts(esnufft_opts* opts) {
  if (!opts) return;
  opts->threads = 0;
  opts->check_bounds = 0;
  opts->exact_kernel = 0;
  opts->debug = 0;
  opts->upsampfac = 2.0;
  opts->type3_shift = 0;
  opts->type3_max_grid = esnufft::kDefaultType3MaxGrid;
  opts->timing = nullptr;
}

const char* esnufft_last_error(void) { return last_error.c_str(); }

const char* esnufft_status_string(int status) {
  if (status < 0 || status > ESNUFFT_ERR_INTERNAL) return "unknown status";
  return esnufft::status_name(static_cast<Status>(status));
}

int esnufft1d1(int64_t M, const double* x, const double* c, int isign, double tol, int64_t N1,
               double* f, const esnufft_opts* opts) {
  return type1(1, M, x, nullptr, nullptr, c, isign, tol, N1, 1, 1, f, opts);
}
int esnufft2d1(int64_t M, const double* x, const double* y, const double* c, int isign,
               double tol, int64_t N1, int64_t N2, double* f, const esnufft_opts* opts) {
  return type1(2, M, x, y, nullptr, c, isign, tol, N1, N2, 1, f, opts);
}
int esnufft3d1(int64_t M, const double* x, const double* y, const double* z, const double* c,
               int isign, double tol, int64_t N1, int64_t N2, int64_t N3, double* f,
               const esnufft_opts* opts) {
  return type1(3, M, x, y, z, c, isign, tol, N1, N2, N3, f, opts);
}

int esnufft1d2(int64_t M, const double* x, double* c, int isign, double tol, int64_t N1,
               const double* f, const esnufft_opts* opts) {
  return type2(1, M, x, nullptr, nullptr, c, isign, tol, N1, 1, 1, f, opts);
}
int esnufft2d2(int64_t M, const double* x, const double* y, double* c, int isign, double tol,
               int64_t N1, int64_t N2, const double* f, const esnufft_opts* opts) {
  return type2(2, M, x, y, nullptr, c, isign, tol, N1, N2, 1, f, opts);
}
int esnufft3d2(int64_t M, const double* x, const double* y, const double* z, double* c,
               int isign, double tol, int64_t N1, int64_t N2, int64_t N3, const double* f,
               const esnufft_opts* opts) {
  return type2(3, M, x, y, z, c, isign, tol, N1, N2, N3, f, opts);
}

int esnufft1d3(int64_t M, const double* x, const double* c, int isign, double tol, int64_t N,
               const double* s, double* f, const esnufft_opts* opts) {
  return type3(1, M, x, nullptr, nullptr, c, isign, tol, N, s, nullptr, nullptr, f, opts);
}
int esnufft2d3(int64_t M, const double* x, const double* y, const double* c, int isign,
               double tol, int64_t N, const double* s, const double* t, double* f,
               const esnufft_opts* opts) {
  return type3(2, M, x, y, nullptr, c, isign, tol, N, s, t, nullptr, f, opts);
}
int esnufft3d3(int64_t M, const double* x, const double* y, const double* z, const double* c,
               int isign, double tol, int64_t N, const double* s, const double* t,
               const double* u, double* f, const esnufft_opts* opts) {
  return type3(3, M, x, y, z, c, isign, tol, N, s, t, u, f, opts);
}

}  // extern "C"
