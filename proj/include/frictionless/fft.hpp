#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace frictionless {

// In-place complex DFT on a 1D line or a square 2D array (row-major), backed by
// FFTW. Transforms are unnormalized; forward uses exp(-ikx).
class FftPlan {
 public:
  FftPlan(int dimension, std::size_t points_per_axis);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  FftPlan(FftPlan&& other) noexcept;
  FftPlan& operator=(FftPlan&& other) noexcept;

  void forward(std::span<std::complex<double>> data) const;
  void inverse(std::span<std::complex<double>> data) const;

  std::size_t size() const { return size_; }

 private:
  void release();

  void* forward_ = nullptr;
  void* inverse_ = nullptr;
  std::size_t size_ = 0;
};

}  // namespace frictionless
