#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "mmr/grid.hpp"

namespace mmr {

enum class ScaleLevel { kTiny, kSmall, kMedium, kFine, kNormal };

inline constexpr std::size_t kPyramidLevels = 5;

std::string_view to_string(ScaleLevel level);

enum class DecimationMethod {
  kBlockMean,        // mean of each factor x factor block
  kNearestNeighbor,  // top-left sample of each block (ablation only)
};

// Levels ordered coarse to fine; the last one is always the normal scale.
// A default-depth pyramid holds tiny (S/16) .. normal (S).
struct ScalePyramid {
  std::vector<ImagePlane> levels;

  std::size_t depth() const noexcept { return levels.size(); }
  ScaleLevel label(std::size_t index) const noexcept;
  const ImagePlane& normal() const { return levels.back(); }
};

ImagePlane decimate(const ImagePlane& p, std::size_t factor,
                    DecimationMethod method = DecimationMethod::kBlockMean);

// Input must be square with side divisible by 2^(depth-1); depth in [1, 5].
// Each level is decimated directly from the input.
ScalePyramid build_pyramid(
    const ImagePlane& v, std::size_t depth = kPyramidLevels,
    DecimationMethod method = DecimationMethod::kBlockMean);

// 2x zero-insertion expander. Original samples land on even (row, col)
// positions; every other position is exactly 0 and flagged in the mask.
std::pair<ImagePlane, HoleMask> expand_zero_insert(const ImagePlane& p);

}  // namespace mmr
