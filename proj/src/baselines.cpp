#include "mmr/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "mmr/error.hpp"

namespace mmr {

std::uint8_t quantize(double x) noexcept {
  return static_cast<std::uint8_t>(std::clamp(std::floor(x + 0.5), 0.0, 255.0));
}

Histogram histogram(const ImagePlane& p) {
  Histogram h;
  for (const double x : p.values()) ++h.bins[quantize(x)];
  h.total = p.size();
  return h;
}

ImagePlane histogram_equalize(const ImagePlane& p) {
  const Histogram h = histogram(p);
  std::array<double, 256> lut{};
  if (h.total > 0) {
    std::uint64_t running = 0;
    for (std::size_t k = 0; k < 256; ++k) {
      running += h.bins[k];
      const double cdf = static_cast<double>(running) / static_cast<double>(h.total);
      lut[k] = std::floor(255.0 * cdf + 0.5);
    }
  }
  ImagePlane out(p.width(), p.height());
  const auto src = p.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = lut[quantize(src[i])];
  return out;
}

HsvImage plain_msr_enhance(const HsvImage& img, const EnhanceConfig& cfg,
                           ConvolutionPath path) {
  if (!img.v.square() || img.v.empty()) {
    throw Error(ErrorCode::kUnsupportedGeometry,
                "plain MSR needs a square image, got " +
                    std::to_string(img.width()) + "x" + std::to_string(img.height()));
  }
  HsvImage out = img;
  out.v = enhance_level(img.v, cfg, path);
  return out;
}

RgbImage plain_msr_enhance(const RgbImage& img, const EnhanceConfig& cfg,
                           ConvolutionPath path) {
  return hsv_to_rgb(plain_msr_enhance(rgb_to_hsv(img), cfg, path));
}

}  // namespace mmr
