#include "esnufft/fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <sstream>

#include "esnufft/errors.hpp"

namespace esnufft {
namespace {

// The planner is not thread safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanEntry {
  fftw_plan plan = nullptr;
};

struct PlanCache {
  std::map<std::pair<FftPlanKey, int>, PlanEntry> plans;
  ~PlanCache() {
    for (auto& [k, e] : plans) fftw_destroy_plan(e.plan);
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void init_threads_once() {
  static const bool done = [] {
    fftw_init_threads();
    return true;
  }();
  (void)done;
}

std::int64_t total(const FftPlanKey& key) {
  std::int64_t t = 1;
  for (int i = 0; i < key.dim; ++i) t *= key.sizes[i];
  return t;
}

void check(const FftPlanKey& key, std::span<cplx> data) {
  if (key.dim < 1 || key.dim > 3) throw Error(Status::argument, "fft dimension must be 1..3");
  if (static_cast<std::int64_t>(data.size()) != total(key)) {
    std::ostringstream os;
    os << "fft data length " << data.size() << " does not match plan size " << total(key);
    throw Error(Status::size, os.str());
  }
}

// Caller holds planner_mutex.
fftw_plan make_plan(const FftPlanKey& key, fftw_complex* data, unsigned flags) {
  init_threads_once();
  fftw_plan_with_nthreads(key.threads);
  int n[3];
  for (int i = 0; i < key.dim; ++i) n[i] = static_cast<int>(key.sizes[key.dim - 1 - i]);
  const int sign = key.direction == Direction::forward ? FFTW_BACKWARD : FFTW_FORWARD;
  fftw_plan p = fftw_plan_dft(key.dim, n, data, data, sign, flags);
  if (!p) throw Error(Status::internal, "fft planning failed");
  return p;
}

}  // namespace

FftPlanKey make_plan_key(const GridShape& shape, Direction dir, int threads) {
  FftPlanKey k;
  k.dim = shape.dim;
  k.sizes = shape.sizes;
  k.direction = dir;
  k.threads = threads < 1 ? 1 : threads;
  return k;
}

void fft_exec(const FftPlanKey& key, std::span<cplx> data) {
  check(key, data);
  if (data.empty()) return;
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  const int align = fftw_alignment_of(reinterpret_cast<double*>(p));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    auto& slot = cache().plans[{key, align}];
    if (!slot.plan) slot.plan = make_plan(key, p, FFTW_ESTIMATE);
    plan = slot.plan;
  }
  fftw_execute_dft(plan, p, p);
}

void fft_exec_uncached(const FftPlanKey& key, std::span<cplx> data) {
  check(key, data);
  if (data.empty()) return;
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = make_plan(key, p, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

std::size_t fft_cached_plans() {
  std::lock_guard lock(planner_mutex());
  return cache().plans.size();
}

}  // namespace esnufft
