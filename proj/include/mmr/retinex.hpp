#pragma once

#include <array>
#include <cstddef>
#include <memory>

#include "mmr/convolution.hpp"
#include "mmr/grid.hpp"

namespace mmr {

struct EnhanceConfig {
  double d_max = 255.0;
  std::array<double, 3> weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  // Surround sigma for scale n is sigma_ratios[n] * level side.
  std::array<double, 3> sigma_ratios{0.06, 0.31, 0.98};
  double log_offset = 1.0;

  // Throws Error(kInvalidConfig) on weights not summing to 1, negative
  // weights, non-increasing or non-positive sigma ratios, or a non-positive
  // offset / d_max.
  void validate() const;
};

// Linear stretch of p onto [0, d_max]. A constant plane yields all zeros and
// a diagnostic.
ImagePlane contrast_stretch(const ImagePlane& p, double d_max);

// size x size samples of exp(-(x^2 + y^2) / 2 sigma^2) on the grid
// x_i = i - (size - 1) / 2, normalized to unit sum.
ImagePlane gaussian_kernel(std::size_t size, double sigma);

// Three surround kernels for one pyramid level, with their FFT spectra.
// Immutable once built; share freely across threads.
class GaussianKernelSet {
 public:
  GaussianKernelSet(std::size_t size, const std::array<double, 3>& sigmas);

  static GaussianKernelSet for_level(std::size_t side, const EnhanceConfig& cfg);

  std::size_t size() const noexcept { return size_; }
  const std::array<double, 3>& sigmas() const noexcept { return sigmas_; }
  const ImagePlane& kernel(std::size_t n) const { return kernels_.at(n); }
  const SurroundFilter& filter(std::size_t n) const { return *filters_.at(n); }

 private:
  std::size_t size_;
  std::array<double, 3> sigmas_;
  std::array<ImagePlane, 3> kernels_;
  std::array<std::shared_ptr<const SurroundFilter>, 3> filters_;
};

// log2(v + offset) - log2((g * v) + offset), reflective boundary.
ImagePlane ssr(const ImagePlane& v, const ImagePlane& g, double log_offset,
               ConvolutionPath path = ConvolutionPath::kFft);

// Same, reusing a prebuilt FFT filter.
ImagePlane ssr(const ImagePlane& v, const SurroundFilter& g, double log_offset);

ImagePlane msr(const ImagePlane& v, const GaussianKernelSet& ks,
               const EnhanceConfig& cfg,
               ConvolutionPath path = ConvolutionPath::kFft);

// Min-max stretch of the signed MSR output back to [0, d_max].
ImagePlane normalize_msr(const ImagePlane& r, double d_max);

// contrast_stretch -> msr -> normalize_msr for one square level.
ImagePlane enhance_level(const ImagePlane& v, const EnhanceConfig& cfg,
                         ConvolutionPath path = ConvolutionPath::kFft);
ImagePlane enhance_level(const ImagePlane& v, const GaussianKernelSet& ks,
                         const EnhanceConfig& cfg,
                         ConvolutionPath path = ConvolutionPath::kFft);

}  // namespace mmr
