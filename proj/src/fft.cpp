#include "frictionless/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace frictionless {

namespace {

// The FFTW planner is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan make_plan(int dimension, std::size_t n, int sign) {
  const auto total = dimension == 1 ? n : n * n;
  std::vector<std::complex<double>> scratch(total);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  const int ni = static_cast<int>(n);
  return dimension == 1 ? fftw_plan_dft_1d(ni, buf, buf, sign, flags)
                        : fftw_plan_dft_2d(ni, ni, buf, buf, sign, flags);
}

}  // namespace

FftPlan::FftPlan(int dimension, std::size_t points_per_axis) {
  if (dimension != 1 && dimension != 2) throw std::invalid_argument("FftPlan: dimension must be 1 or 2");
  size_ = dimension == 1 ? points_per_axis : points_per_axis * points_per_axis;
  std::lock_guard lock(planner_mutex());
  forward_ = make_plan(dimension, points_per_axis, FFTW_FORWARD);
  inverse_ = make_plan(dimension, points_per_axis, FFTW_BACKWARD);
  if (!forward_ || !inverse_) {
    release();
    throw std::runtime_error("FftPlan: FFTW planning failed");
  }
}

FftPlan::~FftPlan() { release(); }

FftPlan::FftPlan(FftPlan&& other) noexcept
    : forward_(std::exchange(other.forward_, nullptr)),
      inverse_(std::exchange(other.inverse_, nullptr)),
      size_(other.size_) {}

FftPlan& FftPlan::operator=(FftPlan&& other) noexcept {
  if (this != &other) {
    release();
    forward_ = std::exchange(other.forward_, nullptr);
    inverse_ = std::exchange(other.inverse_, nullptr);
    size_ = other.size_;
  }
  return *this;
}

void FftPlan::release() {
  if (!forward_ && !inverse_) return;
  std::lock_guard lock(planner_mutex());
  if (forward_) fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  if (inverse_) fftw_destroy_plan(static_cast<fftw_plan>(inverse_));
  forward_ = inverse_ = nullptr;
}

void FftPlan::forward(std::span<std::complex<double>> data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(forward_), p, p);
}

void FftPlan::inverse(std::span<std::complex<double>> data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(inverse_), p, p);
}

}  // namespace frictionless
