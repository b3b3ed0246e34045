// mmretinex: enhance, assess and benchmark low-contrast images.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 unsupported geometry.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmr/colorspace.hpp"
#include "mmr/error.hpp"
#include "mmr/image_io.hpp"
#include "mmr/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitGeometry = 3;

int exit_code_for(mmr::ErrorCode code) {
  switch (code) {
    case mmr::ErrorCode::kIo:
      return kExitIo;
    case mmr::ErrorCode::kUnsupportedGeometry:
    case mmr::ErrorCode::kNonSquareOrIndivisible:
    case mmr::ErrorCode::kIndivisibleDimensions:
    case mmr::ErrorCode::kOddDimensions:
    case mmr::ErrorCode::kDimensionMismatch:
    case mmr::ErrorCode::kZeroEnergyPlane:
      return kExitGeometry;
    default:
      return kExitUsage;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct CommonOptions {
  std::string sigmas;
  std::string merge = "mask";
  std::string wavelet = "db2";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--sigmas", opts.sigmas,
                  "surround sigma ratios r1,r2,r3 (fraction of level side)");
  cmd->add_option("--merge", opts.merge, "fusion rule")
      ->check(CLI::IsMember({"mask", "zero-test", "naive"}));
  cmd->add_option("--wavelet", opts.wavelet, "wavelet family")
      ->check(CLI::IsMember({"haar", "db2"}));
}

// Throws Error(kInvalidConfig) on malformed values.
mmr::PipelineConfig make_config(const CommonOptions& opts) {
  mmr::PipelineConfig cfg;
  cfg.merge_mode = *mmr::parse_merge_mode(opts.merge);
  cfg.wavelet = mmr::parse_wavelet_family(opts.wavelet);
  if (!opts.sigmas.empty()) {
    const auto parts = split(opts.sigmas, ',');
    if (parts.size() != 3) {
      throw mmr::Error(mmr::ErrorCode::kInvalidConfig,
                       "--sigmas expects three comma-separated ratios");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      try {
        cfg.enhance.sigma_ratios[i] = std::stod(parts[i]);
      } catch (const std::exception&) {
        throw mmr::Error(mmr::ErrorCode::kInvalidConfig,
                         "--sigmas: not a number: '" + parts[i] + "'");
      }
    }
  }
  cfg.validate();
  return cfg;
}

int run_enhance(const std::string& method, const std::string& in,
                const std::string& out, const CommonOptions& opts) {
  mmr::PipelineConfig cfg = make_config(opts);
  cfg.method = *mmr::parse_method(method);

  const mmr::LoadedImage loaded = mmr::read_image(in);
  const mmr::EnhanceResult res =
      mmr::enhance_hsv(mmr::rgb_to_hsv(loaded.image), cfg);
  const mmr::RgbImage result = mmr::hsv_to_rgb(res.image);
  mmr::write_image(out, result, loaded.format, loaded.grayscale);

  std::cout << "method=" << method << " size=" << result.width() << "x"
            << result.height() << " black_spots=" << res.black_spots << '\n';
  return kExitOk;
}

int run_assess(const std::string& original, const std::string& enhanced,
               const CommonOptions& opts) {
  const mmr::WaveletFamily family = mmr::parse_wavelet_family(opts.wavelet);
  const mmr::LoadedImage a = mmr::read_image(original);
  const mmr::LoadedImage b = mmr::read_image(enhanced);
  const mmr::Assessment v = mmr::assess(mmr::rgb_to_hsv(a.image).v,
                                        mmr::rgb_to_hsv(b.image).v, family);
  const nlohmann::json doc = {
      {"wavelet", std::string(mmr::to_string(family))},
      {"original", {{"awe", v.original.awe}, {"dwe", v.original.dwe}}},
      {"enhanced", {{"awe", v.enhanced.awe}, {"dwe", v.enhanced.dwe}}},
      {"detail_improved", v.detail_improved},
      {"global_improved", v.global_improved}};
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int run_bench(const std::string& dir, const std::string& methods_text,
              const std::string& report_format, const std::string& out,
              const CommonOptions& opts) {
  mmr::PipelineConfig cfg = make_config(opts);
  std::vector<mmr::Method> methods;
  for (const auto& name : split(methods_text, ',')) {
    const auto m = mmr::parse_method(name);
    if (!m) {
      throw mmr::Error(mmr::ErrorCode::kInvalidConfig, "unknown method '" + name + "'");
    }
    methods.push_back(*m);
  }
  cfg.report_format =
      report_format == "json" ? mmr::ReportFormat::kJson : mmr::ReportFormat::kCsv;

  const mmr::RunReport report = mmr::run_benchmark(mmr::list_images(dir), methods, cfg);
  for (const auto& e : report.errors) {
    std::cerr << "mmretinex: " << e.path << ": " << e.message << '\n';
  }

  std::ofstream file(out);
  if (!file) throw mmr::Error(mmr::ErrorCode::kIo, out + ": cannot open for writing");
  file << (cfg.report_format == mmr::ReportFormat::kJson ? mmr::to_json(report)
                                                         : mmr::to_csv(report));
  if (!file) throw mmr::Error(mmr::ErrorCode::kIo, out + ": write failed");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multirate multiscale retinex contrast enhancement"};
  app.require_subcommand(1);

  CommonOptions enhance_opts, assess_opts, bench_opts;
  std::string method = "proposed", in, out;
  auto* enhance = app.add_subcommand("enhance", "enhance one image");
  enhance->add_option("--method", method)
      ->check(CLI::IsMember({"proposed", "msr", "he", "chao"}));
  enhance->add_option("--in", in)->required();
  enhance->add_option("--out", out)->required();
  add_common(enhance, enhance_opts);

  std::string original, enhanced;
  auto* assess = app.add_subcommand("assess", "wavelet-energy quality assessment");
  assess->add_option("--original", original)->required();
  assess->add_option("--enhanced", enhanced)->required();
  assess->add_option("--wavelet", assess_opts.wavelet)
      ->check(CLI::IsMember({"haar", "db2"}));

  std::string bench_dir, methods = "proposed,msr,he,chao", report = "csv", bench_out;
  auto* bench = app.add_subcommand("bench", "AWE/DWE report over a directory");
  bench->add_option("--in", bench_dir)->required();
  bench->add_option("--methods", methods, "comma-separated method list");
  bench->add_option("--report", report)->check(CLI::IsMember({"json", "csv"}));
  bench->add_option("--out", bench_out)->required();
  add_common(bench, bench_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enhance) return run_enhance(method, in, out, enhance_opts);
    if (*assess) return run_assess(original, enhanced, assess_opts);
    if (*bench) return run_bench(bench_dir, methods, report, bench_out, bench_opts);
  } catch (const mmr::Error& e) {
    std::cerr << "mmretinex: " << mmr::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}
