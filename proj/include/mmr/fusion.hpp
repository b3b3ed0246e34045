#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "mmr/grid.hpp"
#include "mmr/multirate.hpp"

namespace mmr {

enum class MergeMode {
  kMask,          // holes come from the expander's mask
  kZeroTest,      // a position is a hole iff the expanded lower sample is 0
  kNaiveAverage,  // average everywhere; inserted zeros darken the result
};

std::string_view to_string(MergeMode mode);
std::optional<MergeMode> parse_merge_mode(std::string_view text);

// Holes take the upper sample; everything else is the mean of lower and upper.
// Under kNaiveAverage every position is averaged.
ImagePlane merge_pair(const ImagePlane& lower_expanded, const HoleMask& holes,
                      const ImagePlane& upper, MergeMode mode);

// Number of expander holes where the merge produced upper/2 with upper > 0,
// i.e. an inserted zero was averaged in.
std::size_t count_black_spots(const ImagePlane& merged, const HoleMask& holes,
                              const ImagePlane& upper);

struct Reconstruction {
  ImagePlane plane;
  std::size_t black_spots = 0;  // summed over all cascade stages
};

// Coarse-to-fine cascade: each merged level is expanded and merged with the
// next enhanced level. The final plane is clamped to [0, 255].
Reconstruction reconstruct_traced(const ScalePyramid& enhanced, MergeMode mode);

inline ImagePlane reconstruct(const ScalePyramid& enhanced, MergeMode mode) {
  return reconstruct_traced(enhanced, mode).plane;
}

}  // namespace mmr
