#include "mmr/wavelet.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "mmr/error.hpp"

namespace mmr {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

constexpr std::array<double, 2> kHaar{kInvSqrt2, kInvSqrt2};

// Daubechies 4-tap: (1+r3, 3+r3, 3-r3, 1-r3) / (4 sqrt 2).
constexpr std::array<double, 4> kDb2{
    (1.0 + std::numbers::sqrt3) / (4.0 * std::numbers::sqrt2),
    (3.0 + std::numbers::sqrt3) / (4.0 * std::numbers::sqrt2),
    (3.0 - std::numbers::sqrt3) / (4.0 * std::numbers::sqrt2),
    (1.0 - std::numbers::sqrt3) / (4.0 * std::numbers::sqrt2)};

// Quadrature mirror: g[t] = (-1)^t h[L-1-t].
double highpass(std::span<const double> h, std::size_t t) {
  const double v = h[h.size() - 1 - t];
  return (t % 2 == 0) ? v : -v;
}

// x has n samples at the given stride; writes n/2 approximation and n/2
// detail samples.
void analyze(std::span<const double> h, const double* x, std::size_t n,
             std::size_t stride, double* approx, double* detail,
             std::size_t out_stride) {
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) {
    double a = 0.0, d = 0.0;
    for (std::size_t t = 0; t < h.size(); ++t) {
      const double s = x[((2 * k + t) % n) * stride];
      a += h[t] * s;
      d += highpass(h, t) * s;
    }
    approx[k * out_stride] = a;
    detail[k * out_stride] = d;
  }
}

void synthesize(std::span<const double> h, const double* approx,
                const double* detail, std::size_t half, std::size_t in_stride,
                double* x, std::size_t stride) {
  const std::size_t n = 2 * half;
  for (std::size_t i = 0; i < n; ++i) x[i * stride] = 0.0;
  for (std::size_t k = 0; k < half; ++k) {
    const double a = approx[k * in_stride], d = detail[k * in_stride];
    for (std::size_t t = 0; t < h.size(); ++t) {
      x[((2 * k + t) % n) * stride] += h[t] * a + highpass(h, t) * d;
    }
  }
}

double energy(const ImagePlane& p) {
  double e = 0.0;
  for (const double x : p.values()) e += x * x;
  return e;
}

}  // namespace

std::string_view to_string(WaveletFamily family) {
  return family == WaveletFamily::kHaar ? "haar" : "db2";
}

WaveletFamily parse_wavelet_family(std::string_view name) {
  if (name == "haar") return WaveletFamily::kHaar;
  if (name == "db2") return WaveletFamily::kDb2;
  throw Error(ErrorCode::kUnknownFamily,
              "unknown wavelet family '" + std::string(name) + "'");
}

std::span<const double> lowpass_taps(WaveletFamily family) {
  if (family == WaveletFamily::kHaar) return kHaar;
  return kDb2;
}

Subbands dwt2(const ImagePlane& p, WaveletFamily family) {
  if (p.empty() || p.width() % 2 != 0 || p.height() % 2 != 0) {
    throw Error(ErrorCode::kOddDimensions,
                "dwt2 needs even sides, got " + std::to_string(p.width()) + "x" +
                    std::to_string(p.height()));
  }
  const auto h = lowpass_taps(family);
  const std::size_t w = p.width(), ht = p.height();
  const std::size_t hw = w / 2, hh = ht / 2;

  // Along x: left half lowpass, right half highpass.
  ImagePlane rows(w, ht);
  for (std::size_t r = 0; r < ht; ++r) {
    double* dst = rows.row(r).data();
    analyze(h, p.row(r).data(), w, 1, dst, dst + hw, 1);
  }

  Subbands out{ImagePlane(hw, hh), ImagePlane(hw, hh), ImagePlane(hw, hh),
               ImagePlane(hw, hh)};
  std::vector<double> lo(hh), hi(hh);
  for (std::size_t c = 0; c < w; ++c) {
    analyze(h, rows.values().data() + c, ht, w, lo.data(), hi.data(), 1);
    const bool x_low = c < hw;
    const std::size_t oc = x_low ? c : c - hw;
    ImagePlane& y_low = x_low ? out.ll : out.hl;
    ImagePlane& y_high = x_low ? out.lh : out.hh;
    for (std::size_t k = 0; k < hh; ++k) {
      y_low(k, oc) = lo[k];
      y_high(k, oc) = hi[k];
    }
  }
  return out;
}

ImagePlane idwt2(const Subbands& b, WaveletFamily family) {
  if (!b.ll.same_shape(b.lh) || !b.ll.same_shape(b.hl) || !b.ll.same_shape(b.hh)) {
    throw Error(ErrorCode::kDimensionMismatch, "idwt2: subband shapes differ");
  }
  const auto h = lowpass_taps(family);
  const std::size_t hw = b.ll.width(), hh = b.ll.height();
  const std::size_t w = 2 * hw, ht = 2 * hh;

  ImagePlane rows(w, ht);
  std::vector<double> col(ht);
  for (std::size_t c = 0; c < w; ++c) {
    const bool x_low = c < hw;
    const std::size_t oc = x_low ? c : c - hw;
    const ImagePlane& y_low = x_low ? b.ll : b.hl;
    const ImagePlane& y_high = x_low ? b.lh : b.hh;
    synthesize(h, y_low.values().data() + oc, y_high.values().data() + oc, hh,
               hw, col.data(), 1);
    for (std::size_t r = 0; r < ht; ++r) rows(r, c) = col[r];
  }

  ImagePlane out(w, ht);
  for (std::size_t r = 0; r < ht; ++r) {
    const double* src = rows.row(r).data();
    synthesize(h, src, src + hw, hw, 1, out.row(r).data(), 1);
  }
  return out;
}

WaveletEnergyReport wavelet_energy(const ImagePlane& p, WaveletFamily family) {
  const Subbands b = dwt2(p, family);
  const double approx = energy(b.ll);
  const double detail = energy(b.lh) + energy(b.hl) + energy(b.hh);
  const double total = approx + detail;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kZeroEnergyPlane,
                "wavelet energy undefined for an all-zero plane");
  }
  WaveletEnergyReport report;
  report.awe = 100.0 * approx / total;
  report.dwe = 100.0 * detail / total;
  return report;
}

Assessment assess(const ImagePlane& original, const ImagePlane& enhanced,
                  WaveletFamily family) {
  if (!original.same_shape(enhanced)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "assess: original and enhanced differ in size");
  }
  Assessment a;
  a.original = wavelet_energy(original, family);
  a.original.method_id = "original";
  a.enhanced = wavelet_energy(enhanced, family);
  a.enhanced.method_id = "enhanced";
  a.detail_improved = a.enhanced.dwe > a.original.dwe;
  a.global_improved = a.enhanced.awe > a.original.awe;
  return a;
}

}  // namespace mmr
