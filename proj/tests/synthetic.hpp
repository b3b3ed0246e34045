#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "mmr/colorspace.hpp"

namespace mmr::testing {

// Low-contrast tinted scene: a smooth ramp, a patch of fine texture, a soft
// blob and mild Gaussian noise. Values stay well inside [0, 255].
inline RgbImage synthetic_low_contrast(std::size_t side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.5);

  const double base = 70.0 + 40.0 * unit(rng);
  const double span = 25.0 + 20.0 * unit(rng);
  const double angle = 2.0 * std::numbers::pi * unit(rng);
  const double period = 2.0 + 3.0 * unit(rng);
  const double texture_amp = 4.0 + 4.0 * unit(rng);
  const double blob_r = side * (0.5 + 0.3 * unit(rng));
  const double blob_c = side * (0.3 + 0.4 * unit(rng));
  const double tint_g = 0.75 + 0.2 * unit(rng), tint_b = 0.6 + 0.3 * unit(rng);

  RgbImage img(side, side);
  const double s = static_cast<double>(side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const double x = c / s, y = r / s;
      double v = base + span * (std::cos(angle) * x + std::sin(angle) * y);
      const bool in_patch = x > 0.2 && x < 0.7 && y > 0.25 && y < 0.75;
      if (in_patch) {
        v += texture_amp * std::sin(2.0 * std::numbers::pi * c / period) *
             std::cos(2.0 * std::numbers::pi * r / (period + 1.0));
      }
      const double dr = r - blob_r, dc = c - blob_c;
      v += 12.0 * std::exp(-(dr * dr + dc * dc) / (2.0 * (s / 10) * (s / 10)));
      v = std::clamp(v + noise(rng), 1.0, 254.0);
      img.r(r, c) = v;
      img.g(r, c) = tint_g * v;
      img.b(r, c) = tint_b * v;
    }
  }
  return img;
}

// MRI-like slice: a low-contrast elliptical object (ramp, fine texture in its
// core, mild Gaussian noise) on an exactly black background.
inline RgbImage synthetic_mri_slice(std::size_t side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.5);

  const double base = 60.0 + 40.0 * unit(rng);
  const double span = 25.0 + 20.0 * unit(rng);
  const double angle = 2.0 * std::numbers::pi * unit(rng);
  const double period = 2.0 + 3.0 * unit(rng);
  const double texture_amp = 4.0 + 4.0 * unit(rng);
  const double radius = 0.3 + 0.12 * unit(rng);
  const double cx = 0.45 + 0.1 * unit(rng), cy = 0.45 + 0.1 * unit(rng);

  RgbImage img(side, side);
  const double s = static_cast<double>(side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const double x = c / s, y = r / s;
      const double d = std::hypot(x - cx, (y - cy) / 0.8);
      double v = 0.0;
      if (d < radius) {
        v = base + span * (std::cos(angle) * x + std::sin(angle) * y);
        if (d < 0.6 * radius) {
          v += texture_amp * std::sin(2.0 * std::numbers::pi * c / period) *
               std::cos(2.0 * std::numbers::pi * r / (period + 1.0));
        }
        v = std::clamp(v + noise(rng), 0.0, 254.0);
      }
      img.r(r, c) = v;
      img.g(r, c) = 0.9 * v;
      img.b(r, c) = 0.8 * v;
    }
  }
  return img;
}

}  // namespace mmr::testing
