#include "mmr/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "mmr/baselines.hpp"
#include "mmr/error.hpp"
#include "mmr/image_io.hpp"
#include "json.hpp"

namespace mmr {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kProposed: return "proposed";
    case Method::kMsr: return "msr";
    case Method::kHe: return "he";
    case Method::kChao: return "chao";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "proposed") return Method::kProposed;
  if (text == "msr") return Method::kMsr;
  if (text == "he") return Method::kHe;
  if (text == "chao") return Method::kChao;
  return std::nullopt;
}

MergeMode PipelineConfig::effective_merge_mode() const noexcept {
  return method == Method::kChao ? MergeMode::kNaiveAverage : merge_mode;
}

void PipelineConfig::validate() const {
  enhance.validate();
  if (pyramid_depth == 0 || pyramid_depth > kPyramidLevels) {
    throw Error(ErrorCode::kInvalidConfig, "pyramid depth must be in [1, 5]");
  }
}

namespace {

EnhanceResult enhance_multirate(const HsvImage& img, const PipelineConfig& cfg) {
  const std::size_t coarsest = std::size_t{1} << (cfg.pyramid_depth - 1);
  if (!img.v.square() || img.v.empty() || img.width() % coarsest != 0 ||
      img.width() / coarsest < 1) {
    throw Error(ErrorCode::kUnsupportedGeometry,
                "multirate enhancement needs a square image with side divisible by " +
                    std::to_string(coarsest) + ", got " + std::to_string(img.width()) +
                    "x" + std::to_string(img.height()));
  }
  const ScalePyramid pyramid = build_pyramid(img.v, cfg.pyramid_depth, cfg.decimation);

  ScalePyramid enhanced;
  enhanced.levels.resize(pyramid.depth());
  const auto n = static_cast<std::ptrdiff_t>(pyramid.depth());
  // Finest level first: it dominates the cost.
#pragma omp parallel for schedule(dynamic, 1) if (cfg.parallel_levels)
  for (std::ptrdiff_t k = n - 1; k >= 0; --k) {
    enhanced.levels[k] =
        enhance_level(pyramid.levels[k], cfg.enhance, cfg.convolution);
  }

  const Reconstruction rec = reconstruct_traced(enhanced, cfg.effective_merge_mode());
  EnhanceResult out{img, rec.black_spots};
  out.image.v = rec.plane;
  return out;
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace

EnhanceResult enhance_hsv(const HsvImage& img, const PipelineConfig& cfg) {
  cfg.validate();
  switch (cfg.method) {
    case Method::kProposed:
    case Method::kChao:
      return enhance_multirate(img, cfg);
    case Method::kMsr:
      return {plain_msr_enhance(img, cfg.enhance, cfg.convolution), 0};
    case Method::kHe: {
      EnhanceResult out{img, 0};
      out.image.v = histogram_equalize(img.v);
      return out;
    }
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown method");
}

RgbImage enhance_image(const RgbImage& img, const PipelineConfig& cfg) {
  return hsv_to_rgb(enhance_hsv(rgb_to_hsv(img), cfg).image);
}

std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, dir.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && format_from_extension(entry.path())) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RunReport run_benchmark(const std::vector<std::filesystem::path>& inputs,
                        const std::vector<Method>& methods,
                        const PipelineConfig& cfg) {
  cfg.validate();
  struct PerImage {
    std::vector<ReportRow> rows;
    std::vector<RunError> errors;
  };
  std::vector<PerImage> results(inputs.size());

  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    PerImage& slot = results[i];
    const auto& path = inputs[i];
    const std::string id = path.stem().string();
    try {
      const LoadedImage loaded = read_image(path);
      const HsvImage original = rgb_to_hsv(loaded.image);
      const WaveletEnergyReport base = wavelet_energy(original.v, cfg.wavelet);
      slot.rows.push_back({id, "original", base.awe, base.dwe, 0.0, 0});

      for (const Method m : methods) {
        PipelineConfig run_cfg = cfg;
        run_cfg.method = m;
        try {
          const auto t0 = std::chrono::steady_clock::now();
          const EnhanceResult res = enhance_hsv(original, run_cfg);
          const RgbImage out = quantize_8bit(hsv_to_rgb(res.image));
          const auto t1 = std::chrono::steady_clock::now();

          const WaveletEnergyReport we = wavelet_energy(rgb_to_hsv(out).v, cfg.wavelet);
          if (std::abs(we.awe + we.dwe - 100.0) > 1e-6) {
            slot.errors.push_back({path.string(), std::string(to_string(m)) +
                                                      ": energy partition violated"});
          }
          const double ms =
              std::chrono::duration<double, std::milli>(t1 - t0).count();
          slot.rows.push_back(
              {id, std::string(to_string(m)), we.awe, we.dwe, ms, res.black_spots});
        } catch (const Error& e) {
          slot.errors.push_back(
              {path.string(), std::string(to_string(m)) + ": " + e.what()});
        }
      }
    } catch (const Error& e) {
      slot.errors.push_back({path.string(), e.what()});
    }
  }

  RunReport report;
  for (auto& r : results) {
    std::move(r.rows.begin(), r.rows.end(), std::back_inserter(report.rows));
    std::move(r.errors.begin(), r.errors.end(), std::back_inserter(report.errors));
  }
  return report;
}

std::string to_csv(const RunReport& report) {
  std::ostringstream os;
  os << "image_id,method,awe,dwe,time_ms,black_spots\n";
  for (const auto& r : report.rows) {
    os << r.image_id << ',' << r.method << ',' << fixed(r.awe, 9) << ','
       << fixed(r.dwe, 9) << ',' << fixed(r.time_ms, 3) << ',' << r.black_spots
       << '\n';
  }
  return os.str();
}

std::string to_json(const RunReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"image_id", r.image_id},
                    {"method", r.method},
                    {"awe", r.awe},
                    {"dwe", r.dwe},
                    {"time_ms", r.time_ms},
                    {"black_spots", r.black_spots}});
  }
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : report.errors) {
    errors.push_back({{"path", e.path}, {"message", e.message}});
  }
  return nlohmann::json{{"rows", rows}, {"errors", errors}}.dump(2) + "\n";
}

}  // namespace mmr
