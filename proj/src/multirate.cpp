#include "mmr/multirate.hpp"

#include <string>

#include "mmr/error.hpp"

namespace mmr {

std::string_view to_string(ScaleLevel level) {
  switch (level) {
    case ScaleLevel::kTiny: return "tiny";
    case ScaleLevel::kSmall: return "small";
    case ScaleLevel::kMedium: return "medium";
    case ScaleLevel::kFine: return "fine";
    case ScaleLevel::kNormal: return "normal";
  }
  return "unknown";
}

ScaleLevel ScalePyramid::label(std::size_t index) const noexcept {
  // Count back from the normal scale so shallow pyramids keep the right names.
  const std::size_t from_top = levels.size() - 1 - index;
  return static_cast<ScaleLevel>(kPyramidLevels - 1 - from_top);
}

ImagePlane decimate(const ImagePlane& p, std::size_t factor,
                    DecimationMethod method) {
  if (factor == 0 || p.width() % factor != 0 || p.height() % factor != 0) {
    throw Error(ErrorCode::kIndivisibleDimensions,
                "plane " + std::to_string(p.width()) + "x" +
                    std::to_string(p.height()) + " is not divisible by " +
                    std::to_string(factor));
  }
  if (factor == 1) return p;

  const std::size_t ow = p.width() / factor, oh = p.height() / factor;
  ImagePlane out(ow, oh);
  const double inv_area = 1.0 / static_cast<double>(factor * factor);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(oh); ++r) {
    for (std::size_t c = 0; c < ow; ++c) {
      if (method == DecimationMethod::kNearestNeighbor) {
        out(r, c) = p(r * factor, c * factor);
        continue;
      }
      double sum = 0.0;
      for (std::size_t i = 0; i < factor; ++i) {
        for (const double x : p.row(r * factor + i).subspan(c * factor, factor)) {
          sum += x;
        }
      }
      out(r, c) = sum * inv_area;
    }
  }
  return out;
}

ScalePyramid build_pyramid(const ImagePlane& v, std::size_t depth,
                           DecimationMethod method) {
  if (depth == 0 || depth > kPyramidLevels) {
    throw Error(ErrorCode::kInvalidConfig,
                "pyramid depth must be in [1, 5], got " + std::to_string(depth));
  }
  const std::size_t coarsest = std::size_t{1} << (depth - 1);
  if (!v.square() || v.empty() || v.width() % coarsest != 0) {
    throw Error(ErrorCode::kNonSquareOrIndivisible,
                "pyramid input must be square with side divisible by " +
                    std::to_string(coarsest) + ", got " +
                    std::to_string(v.width()) + "x" + std::to_string(v.height()));
  }

  ScalePyramid pyr;
  pyr.levels.resize(depth);
  const auto n = static_cast<std::ptrdiff_t>(depth);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::size_t factor = std::size_t{1} << (depth - 1 - i);
    pyr.levels[i] = decimate(v, factor, method);
  }
  return pyr;
}

std::pair<ImagePlane, HoleMask> expand_zero_insert(const ImagePlane& p) {
  const std::size_t ow = p.width() * 2, oh = p.height() * 2;
  ImagePlane out(ow, oh, 0.0);
  HoleMask holes(ow, oh, 1);
  for (std::size_t r = 0; r < p.height(); ++r) {
    for (std::size_t c = 0; c < p.width(); ++c) {
      out(2 * r, 2 * c) = p(r, c);
      holes(2 * r, 2 * c) = 0;
    }
  }
  return {std::move(out), std::move(holes)};
}

}  // namespace mmr
