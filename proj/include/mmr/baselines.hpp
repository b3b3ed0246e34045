#pragma once

#include <array>
#include <cstdint>

#include "mmr/colorspace.hpp"
#include "mmr/grid.hpp"
#include "mmr/retinex.hpp"

namespace mmr {

struct Histogram {
  std::array<std::uint64_t, 256> bins{};
  std::uint64_t total = 0;
};

// Samples are rounded half-up and clamped to [0, 255] before binning.
std::uint8_t quantize(double x) noexcept;
Histogram histogram(const ImagePlane& p);

// Global equalization: out = round_half_up(255 * CDF(in)). No minimum-CDF
// rescaling, so a constant plane maps to 255.
ImagePlane histogram_equalize(const ImagePlane& p);

// Full-resolution enhance_level on V; H and S pass through untouched.
HsvImage plain_msr_enhance(const HsvImage& img, const EnhanceConfig& cfg,
                           ConvolutionPath path = ConvolutionPath::kFft);
RgbImage plain_msr_enhance(const RgbImage& img, const EnhanceConfig& cfg,
                           ConvolutionPath path = ConvolutionPath::kFft);

}  // namespace mmr
