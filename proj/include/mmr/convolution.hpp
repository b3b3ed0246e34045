#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "mmr/grid.hpp"

namespace mmr {

enum class ConvolutionPath { kFft, kDirect };

// Boundary handling shared by both paths: half-sample symmetric reflection
// (edge sample repeated), periodic with period 2n.
std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) noexcept;

// Serial spatial reference:
//   out(i, j) = sum_{a,b} k(a, b) * v_ext(i + a - kh/2, j + b - kw/2)
// O(w*h*kw*kh). Kept as the oracle for the FFT path.
ImagePlane convolve_direct(const ImagePlane& v, const ImagePlane& kernel);

// Frequency-domain convolution with a fixed kernel and plane shape. The
// kernel spectrum is computed once; apply() is const and safe to call from
// several threads at once.
class SurroundFilter {
 public:
  SurroundFilter(const ImagePlane& kernel, std::size_t plane_width,
                 std::size_t plane_height);
  ~SurroundFilter();
  SurroundFilter(SurroundFilter&&) noexcept;
  SurroundFilter& operator=(SurroundFilter&&) noexcept;
  SurroundFilter(const SurroundFilter&) = delete;
  SurroundFilter& operator=(const SurroundFilter&) = delete;

  ImagePlane apply(const ImagePlane& v) const;

  std::size_t plane_width() const noexcept { return plane_w_; }
  std::size_t plane_height() const noexcept { return plane_h_; }

 private:
  struct Plans;

  std::size_t plane_w_, plane_h_;
  std::size_t kernel_w_, kernel_h_;
  std::size_t fft_w_, fft_h_;
  std::vector<std::complex<double>> spectrum_;
  std::unique_ptr<Plans> plans_;
};

// One-shot FFT convolution (builds a SurroundFilter internally).
ImagePlane convolve_fft(const ImagePlane& v, const ImagePlane& kernel);

ImagePlane convolve(const ImagePlane& v, const ImagePlane& kernel,
                    ConvolutionPath path);

// Smallest 2^a 3^b 5^c >= n.
std::size_t good_fft_size(std::size_t n) noexcept;

}  // namespace mmr
