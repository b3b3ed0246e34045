#include <string>

#include "mmr/convolution.hpp"
#include "mmr/error.hpp"

namespace mmr {

std::ptrdiff_t reflect_index(std::ptrdiff_t i, std::ptrdiff_t n) noexcept {
  const std::ptrdiff_t period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

namespace detail {

// Reflect-padded copy of v, sized (w + kw - 1) x (h + kh - 1), with
// ext(0, 0) = v(-kh/2, -kw/2).
ImagePlane reflect_pad(const ImagePlane& v, std::size_t kw, std::size_t kh) {
  const auto w = static_cast<std::ptrdiff_t>(v.width());
  const auto h = static_cast<std::ptrdiff_t>(v.height());
  const auto ox = static_cast<std::ptrdiff_t>(kw / 2);
  const auto oy = static_cast<std::ptrdiff_t>(kh / 2);
  ImagePlane ext(v.width() + kw - 1, v.height() + kh - 1);
  for (std::size_t y = 0; y < ext.height(); ++y) {
    const auto sy = reflect_index(static_cast<std::ptrdiff_t>(y) - oy, h);
    for (std::size_t x = 0; x < ext.width(); ++x) {
      ext(y, x) = v(sy, reflect_index(static_cast<std::ptrdiff_t>(x) - ox, w));
    }
  }
  return ext;
}

}  // namespace detail

ImagePlane convolve_direct(const ImagePlane& v, const ImagePlane& kernel) {
  if (v.empty() || kernel.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "empty plane or kernel");
  }
  const std::size_t kw = kernel.width(), kh = kernel.height();
  const ImagePlane ext = detail::reflect_pad(v, kw, kh);

  ImagePlane out(v.width(), v.height());
  for (std::size_t i = 0; i < v.height(); ++i) {
    for (std::size_t j = 0; j < v.width(); ++j) {
      double acc = 0.0;
      for (std::size_t a = 0; a < kh; ++a) {
        const auto krow = kernel.row(a);
        const auto erow = ext.row(i + a).subspan(j, kw);
        for (std::size_t b = 0; b < kw; ++b) acc += krow[b] * erow[b];
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace mmr
