#pragma once

#include "mmr/grid.hpp"

namespace mmr {

// Three planes, samples in [0, 255].
struct RgbImage {
  ImagePlane r, g, b;

  RgbImage() = default;
  RgbImage(std::size_t width, std::size_t height)
      : r(width, height), g(width, height), b(width, height) {}
  RgbImage(ImagePlane red, ImagePlane green, ImagePlane blue);

  std::size_t width() const noexcept { return r.width(); }
  std::size_t height() const noexcept { return r.height(); }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

// Hexcone HSV. h in degrees [0, 360), s in [0, 1], v in [0, 255].
struct HsvImage {
  ImagePlane h, s, v;

  std::size_t width() const noexcept { return v.width(); }
  std::size_t height() const noexcept { return v.height(); }

  friend bool operator==(const HsvImage&, const HsvImage&) = default;
};

struct Rgb {
  double r, g, b;
};
struct Hsv {
  double h, s, v;
};

// Per-pixel hexcone conversion. V = max(R, G, B); hue and saturation are 0 for
// achromatic pixels.
Hsv rgb_to_hsv(Rgb p) noexcept;
Rgb hsv_to_rgb(Hsv p) noexcept;

HsvImage rgb_to_hsv(const RgbImage& img);
// Output clamped to [0, 255].
RgbImage hsv_to_rgb(const HsvImage& img);

}  // namespace mmr
