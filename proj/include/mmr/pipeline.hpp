#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmr/colorspace.hpp"
#include "mmr/fusion.hpp"
#include "mmr/multirate.hpp"
#include "mmr/retinex.hpp"
#include "mmr/wavelet.hpp"

namespace mmr {

enum class Method { kProposed, kMsr, kHe, kChao };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

enum class ReportFormat { kJson, kCsv };

struct PipelineConfig {
  Method method = Method::kProposed;
  MergeMode merge_mode = MergeMode::kMask;
  EnhanceConfig enhance;
  WaveletFamily wavelet = WaveletFamily::kDb2;
  ReportFormat report_format = ReportFormat::kCsv;

  DecimationMethod decimation = DecimationMethod::kBlockMean;
  std::size_t pyramid_depth = kPyramidLevels;
  ConvolutionPath convolution = ConvolutionPath::kFft;
  // Enhance pyramid levels concurrently (OpenMP). Off gives the serial
  // reference schedule; results are identical either way.
  bool parallel_levels = true;

  // chao always merges with kNaiveAverage.
  MergeMode effective_merge_mode() const noexcept;
  void validate() const;
};

struct EnhanceResult {
  HsvImage image;
  std::size_t black_spots = 0;
};

// Works on the HSV representation; H and S are returned untouched.
EnhanceResult enhance_hsv(const HsvImage& img, const PipelineConfig& cfg);

// Throws Error(kUnsupportedGeometry) when the proposed/chao method gets a
// non-square image or a side not divisible by 16 (2^(depth-1) in general).
RgbImage enhance_image(const RgbImage& img, const PipelineConfig& cfg);

struct ReportRow {
  std::string image_id;
  std::string method;  // "original" for the reference row
  double awe = 0.0;
  double dwe = 0.0;
  double time_ms = 0.0;
  std::size_t black_spots = 0;
};

struct RunError {
  std::string path;
  std::string message;
};

struct RunReport {
  std::vector<ReportRow> rows;
  std::vector<RunError> errors;
};

// For each readable image: one "original" row, then one row per method.
// Per-file failures are collected in errors and the run continues.
RunReport run_benchmark(const std::vector<std::filesystem::path>& inputs,
                        const std::vector<Method>& methods,
                        const PipelineConfig& cfg);

// Supported image files in dir, sorted by name.
std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir);

std::string to_csv(const RunReport& report);
std::string to_json(const RunReport& report);

}  // namespace mmr
