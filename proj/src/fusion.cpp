#include "mmr/fusion.hpp"

#include <algorithm>
#include <string>

#include "mmr/error.hpp"

namespace mmr {

std::string_view to_string(MergeMode mode) {
  switch (mode) {
    case MergeMode::kMask: return "mask";
    case MergeMode::kZeroTest: return "zero-test";
    case MergeMode::kNaiveAverage: return "naive";
  }
  return "unknown";
}

std::optional<MergeMode> parse_merge_mode(std::string_view text) {
  if (text == "mask") return MergeMode::kMask;
  if (text == "zero-test" || text == "zero_test") return MergeMode::kZeroTest;
  if (text == "naive" || text == "naive_average") return MergeMode::kNaiveAverage;
  return std::nullopt;
}

ImagePlane merge_pair(const ImagePlane& lower_expanded, const HoleMask& holes,
                      const ImagePlane& upper, MergeMode mode) {
  if (!lower_expanded.same_shape(upper) || !lower_expanded.same_shape(holes)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "merge_pair: lower " + std::to_string(lower_expanded.width()) +
                    "x" + std::to_string(lower_expanded.height()) +
                    " vs upper " + std::to_string(upper.width()) + "x" +
                    std::to_string(upper.height()));
  }
  ImagePlane out(upper.width(), upper.height());
  const auto lo = lower_expanded.values(), up = upper.values();
  const auto mask = holes.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    bool hole = false;
    switch (mode) {
      case MergeMode::kMask: hole = mask[i] != 0; break;
      case MergeMode::kZeroTest: hole = lo[i] == 0.0; break;
      case MergeMode::kNaiveAverage: break;
    }
    dst[i] = hole ? up[i] : (lo[i] + up[i]) / 2.0;
  }
  return out;
}

std::size_t count_black_spots(const ImagePlane& merged, const HoleMask& holes,
                              const ImagePlane& upper) {
  std::size_t count = 0;
  const auto m = merged.values(), up = upper.values();
  const auto mask = holes.values();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (mask[i] != 0 && up[i] > 0.0 && m[i] == up[i] / 2.0) ++count;
  }
  return count;
}

Reconstruction reconstruct_traced(const ScalePyramid& enhanced, MergeMode mode) {
  if (enhanced.levels.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "reconstruct: empty pyramid");
  }
  Reconstruction result;
  ImagePlane current = enhanced.levels.front();
  for (std::size_t i = 1; i < enhanced.levels.size(); ++i) {
    const ImagePlane& upper = enhanced.levels[i];
    auto [expanded, holes] = expand_zero_insert(current);
    current = merge_pair(expanded, holes, upper, mode);
    result.black_spots += count_black_spots(current, holes, upper);
  }
  for (double& x : current.values()) x = std::clamp(x, 0.0, 255.0);
  result.plane = std::move(current);
  return result;
}

}  // namespace mmr
