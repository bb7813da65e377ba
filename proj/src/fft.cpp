#include "rschur/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace rschur {
namespace {

// FFTW planning is not thread-safe, execution with the new-array interface
// is. Plans are created once per (length, direction) and never destroyed
// before exit.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, bool inverse) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, inverse);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::vector<Complex> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, bool>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

std::vector<Complex> dft(std::span<const Complex> x, bool inverse) {
  std::vector<Complex> out(x.size());
  if (x.empty()) return out;
  const int n = static_cast<int>(x.size());
  // fftw_execute_dft takes a non-const input pointer but does not write to it
  // for out-of-place plans.
  auto* in = const_cast<Complex*>(x.data());
  fftw_execute_dft(plan_cache().get(n, inverse), reinterpret_cast<fftw_complex*>(in),
                   reinterpret_cast<fftw_complex*>(out.data()));
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : out) v *= scale;
  }
  return out;
}

void dft_inplace(std::vector<Complex>& x, bool inverse) { x = dft(x, inverse); }

}  // namespace rschur
