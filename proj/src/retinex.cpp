#include "mmr/retinex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmr/diagnostics.hpp"
#include "mmr/error.hpp"

namespace mmr {

void EnhanceConfig::validate() const {
  if (!(d_max > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "d_max must be positive");
  }
  if (!(log_offset > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "log_offset must be positive");
  }
  double sum = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0)) {
      throw Error(ErrorCode::kInvalidConfig, "MSR weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidConfig, "MSR weights must sum to 1");
  }
  if (!(sigma_ratios[0] > 0.0) || !(sigma_ratios[0] < sigma_ratios[1]) ||
      !(sigma_ratios[1] < sigma_ratios[2])) {
    throw Error(ErrorCode::kInvalidConfig,
                "sigma ratios must be positive and strictly increasing");
  }
}

ImagePlane contrast_stretch(const ImagePlane& p, double d_max) {
  if (p.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "contrast_stretch: empty plane");
  }
  const auto [lo_it, hi_it] = std::minmax_element(p.values().begin(), p.values().end());
  const double lo = *lo_it, hi = *hi_it;
  ImagePlane out(p.width(), p.height(), 0.0);
  if (!(hi > lo)) {
    emit_diagnostic("constant plane in contrast stretch; returning zeros");
    return out;
  }
  const double scale = d_max / (hi - lo);
  auto dst = out.values();
  const auto src = p.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = scale * (src[i] - lo);
  // Pin the extremes so min -> 0 and max -> d_max hold exactly.
  dst[lo_it - src.begin()] = 0.0;
  dst[hi_it - src.begin()] = d_max;
  return out;
}

ImagePlane gaussian_kernel(std::size_t size, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidSigma,
                "gaussian sigma must be positive, got " + std::to_string(sigma));
  }
  if (size == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "gaussian kernel size must be >= 1");
  }
  const double center = (static_cast<double>(size) - 1.0) / 2.0;
  const double denom = 2.0 * sigma * sigma;

  std::vector<double> sq(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double x = static_cast<double>(i) - center;
    sq[i] = x * x;
  }

  ImagePlane k(size, size);
  double sum = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double e = std::exp(-(sq[i] + sq[j]) / denom);
      k(i, j) = e;
      sum += e;
    }
  }
  for (double& x : k.values()) x /= sum;
  return k;
}

GaussianKernelSet::GaussianKernelSet(std::size_t size,
                                     const std::array<double, 3>& sigmas)
    : size_(size), sigmas_(sigmas) {
  for (std::size_t n = 0; n < 3; ++n) {
    kernels_[n] = gaussian_kernel(size, sigmas[n]);
    filters_[n] = std::make_shared<const SurroundFilter>(kernels_[n], size, size);
  }
}

GaussianKernelSet GaussianKernelSet::for_level(std::size_t side,
                                               const EnhanceConfig& cfg) {
  const double s = static_cast<double>(side);
  return GaussianKernelSet(side, {cfg.sigma_ratios[0] * s,
                                  cfg.sigma_ratios[1] * s,
                                  cfg.sigma_ratios[2] * s});
}

namespace {

ImagePlane log_ratio(const ImagePlane& v, const ImagePlane& surround,
                     double log_offset) {
  ImagePlane out(v.width(), v.height());
  const auto src = v.values(), sur = surround.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    // v >= 0 and the kernel is positive, so a negative surround is FFT
    // round-off.
    const double s = std::max(sur[i], 0.0);
    dst[i] = std::log2(src[i] + log_offset) - std::log2(s + log_offset);
  }
  return out;
}

}  // namespace

ImagePlane ssr(const ImagePlane& v, const ImagePlane& g, double log_offset,
               ConvolutionPath path) {
  return log_ratio(v, convolve(v, g, path), log_offset);
}

ImagePlane ssr(const ImagePlane& v, const SurroundFilter& g, double log_offset) {
  return log_ratio(v, g.apply(v), log_offset);
}

ImagePlane msr(const ImagePlane& v, const GaussianKernelSet& ks,
               const EnhanceConfig& cfg, ConvolutionPath path) {
  if (!v.square() || v.width() != ks.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "msr: kernel size " + std::to_string(ks.size()) +
                    " does not match plane " + std::to_string(v.width()) + "x" +
                    std::to_string(v.height()));
  }
  ImagePlane out(v.width(), v.height(), 0.0);
  for (std::size_t n = 0; n < 3; ++n) {
    if (cfg.weights[n] == 0.0) continue;
    const ImagePlane term = path == ConvolutionPath::kFft
                                ? ssr(v, ks.filter(n), cfg.log_offset)
                                : ssr(v, ks.kernel(n), cfg.log_offset, path);
    auto dst = out.values();
    const auto src = term.values();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += cfg.weights[n] * src[i];
  }
  return out;
}

ImagePlane normalize_msr(const ImagePlane& r, double d_max) {
  return contrast_stretch(r, d_max);
}

ImagePlane enhance_level(const ImagePlane& v, const EnhanceConfig& cfg,
                         ConvolutionPath path) {
  return enhance_level(v, GaussianKernelSet::for_level(v.width(), cfg), cfg, path);
}

ImagePlane enhance_level(const ImagePlane& v, const GaussianKernelSet& ks,
                         const EnhanceConfig& cfg, ConvolutionPath path) {
  if (!v.square()) {
    throw Error(ErrorCode::kUnsupportedGeometry,
                "enhance_level requires a square plane");
  }
  const ImagePlane stretched = contrast_stretch(v, cfg.d_max);
  return normalize_msr(msr(stretched, ks, cfg, path), cfg.d_max);
}

}  // namespace mmr
