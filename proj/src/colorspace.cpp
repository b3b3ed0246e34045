#include "mmr/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "mmr/error.hpp"

namespace mmr {

RgbImage::RgbImage(ImagePlane red, ImagePlane green, ImagePlane blue)
    : r(std::move(red)), g(std::move(green)), b(std::move(blue)) {
  if (!r.same_shape(g) || !r.same_shape(b)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "RGB planes must share identical dimensions");
  }
}

Hsv rgb_to_hsv(Rgb p) noexcept {
  const double mx = std::max({p.r, p.g, p.b});
  const double mn = std::min({p.r, p.g, p.b});
  const double delta = mx - mn;

  Hsv out{0.0, 0.0, mx};
  if (mx <= 0.0 || delta <= 0.0) return out;

  out.s = delta / mx;
  double h;
  if (mx == p.r) {
    h = (p.g - p.b) / delta;
  } else if (mx == p.g) {
    h = 2.0 + (p.b - p.r) / delta;
  } else {
    h = 4.0 + (p.r - p.g) / delta;
  }
  h *= 60.0;
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  out.h = h;
  return out;
}

Rgb hsv_to_rgb(Hsv p) noexcept {
  const double v = p.v;
  if (p.s <= 0.0) return {v, v, v};

  double h = std::fmod(p.h, 360.0);
  if (h < 0.0) h += 360.0;
  h /= 60.0;
  const int sector = std::min(static_cast<int>(h), 5);
  const double f = h - sector;
  const double lo = v * (1.0 - p.s);
  const double falling = v * (1.0 - p.s * f);
  const double rising = v * (1.0 - p.s * (1.0 - f));

  switch (sector) {
    case 0: return {v, rising, lo};
    case 1: return {falling, v, lo};
    case 2: return {lo, v, rising};
    case 3: return {lo, falling, v};
    case 4: return {rising, lo, v};
    default: return {v, lo, falling};
  }
}

HsvImage rgb_to_hsv(const RgbImage& img) {
  const std::size_t w = img.width(), hgt = img.height();
  HsvImage out{ImagePlane(w, hgt), ImagePlane(w, hgt), ImagePlane(w, hgt)};
  const auto r = img.r.values(), g = img.g.values(), b = img.b.values();
  auto oh = out.h.values(), os = out.s.values(), ov = out.v.values();
  const auto n = static_cast<std::ptrdiff_t>(r.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Hsv px = rgb_to_hsv(Rgb{r[i], g[i], b[i]});
    oh[i] = px.h;
    os[i] = px.s;
    ov[i] = px.v;
  }
  return out;
}

RgbImage hsv_to_rgb(const HsvImage& img) {
  if (!img.v.same_shape(img.h) || !img.v.same_shape(img.s)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "HSV planes must share identical dimensions");
  }
  RgbImage out(img.width(), img.height());
  const auto h = img.h.values(), s = img.s.values(), v = img.v.values();
  auto r = out.r.values(), g = out.g.values(), b = out.b.values();
  const auto n = static_cast<std::ptrdiff_t>(v.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Rgb px = hsv_to_rgb(Hsv{h[i], s[i], v[i]});
    r[i] = std::clamp(px.r, 0.0, 255.0);
    g[i] = std::clamp(px.g, 0.0, 255.0);
    b[i] = std::clamp(px.b, 0.0, 255.0);
  }
  return out;
}

}  // namespace mmr
