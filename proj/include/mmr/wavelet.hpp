#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmr/grid.hpp"

namespace mmr {

enum class WaveletFamily { kHaar, kDb2 };

std::string_view to_string(WaveletFamily family);
// Throws Error(kUnknownFamily) for anything but "haar" / "db2".
WaveletFamily parse_wavelet_family(std::string_view name);

// Orthonormal analysis lowpass taps (sum = sqrt(2)).
std::span<const double> lowpass_taps(WaveletFamily family);

// Single-level quadrants. lh responds to horizontal edges (lowpass along x,
// highpass along y), hl to vertical edges.
struct Subbands {
  ImagePlane ll, lh, hl, hh;
};

// Separable one-level analysis with periodic extension. Sides must be even.
Subbands dwt2(const ImagePlane& p, WaveletFamily family = WaveletFamily::kDb2);
ImagePlane idwt2(const Subbands& bands, WaveletFamily family = WaveletFamily::kDb2);

struct WaveletEnergyReport {
  double awe = 0.0;  // % of energy in LL
  double dwe = 0.0;  // % of energy in LH + HL + HH
  std::string image_id;
  std::string method_id;
};

// Throws Error(kZeroEnergyPlane) for an all-zero plane.
WaveletEnergyReport wavelet_energy(const ImagePlane& p,
                                   WaveletFamily family = WaveletFamily::kDb2);

struct Assessment {
  WaveletEnergyReport original;
  WaveletEnergyReport enhanced;
  bool detail_improved = false;  // dwe_enhanced > dwe_original
  bool global_improved = false;  // awe_enhanced > awe_original
};

Assessment assess(const ImagePlane& original, const ImagePlane& enhanced,
                  WaveletFamily family = WaveletFamily::kDb2);

}  // namespace mmr
