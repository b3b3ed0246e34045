#include <fftw3.h>

#include <mutex>
#include <string>

#include "mmr/convolution.hpp"
#include "mmr/error.hpp"

namespace mmr {

namespace detail {
ImagePlane reflect_pad(const ImagePlane& v, std::size_t kw, std::size_t kh);
}

namespace {

// FFTW's planner is not re-entrant; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
using RealBuffer = std::unique_ptr<double[], FftwFree>;
using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

RealBuffer alloc_real(std::size_t n) { return RealBuffer(fftw_alloc_real(n)); }
ComplexBuffer alloc_complex(std::size_t n) {
  return ComplexBuffer(fftw_alloc_complex(n));
}

}  // namespace

std::size_t good_fft_size(std::size_t n) noexcept {
  if (n <= 1) return 1;
  for (std::size_t m = n;; ++m) {
    std::size_t r = m;
    for (const std::size_t f : {2, 3, 5}) {
      while (r % f == 0) r /= f;
    }
    if (r == 1) return m;
  }
}

struct SurroundFilter::Plans {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (inverse) fftw_destroy_plan(inverse);
  }
};

SurroundFilter::SurroundFilter(const ImagePlane& kernel,
                               std::size_t plane_width,
                               std::size_t plane_height)
    : plane_w_(plane_width),
      plane_h_(plane_height),
      kernel_w_(kernel.width()),
      kernel_h_(kernel.height()),
      fft_w_(good_fft_size(plane_width + kernel.width() - 1)),
      fft_h_(good_fft_size(plane_height + kernel.height() - 1)),
      plans_(std::make_unique<Plans>()) {
  if (kernel.empty() || plane_width == 0 || plane_height == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "empty plane or kernel");
  }
  const std::size_t n_real = fft_w_ * fft_h_;
  const std::size_t half_w = fft_w_ / 2 + 1;
  const std::size_t n_complex = fft_h_ * half_w;

  RealBuffer real = alloc_real(n_real);
  ComplexBuffer freq = alloc_complex(n_complex);
  {
    std::lock_guard lock(planner_mutex());
    const int nh = static_cast<int>(fft_h_), nw = static_cast<int>(fft_w_);
    plans_->forward =
        fftw_plan_dft_r2c_2d(nh, nw, real.get(), freq.get(), FFTW_ESTIMATE);
    plans_->inverse =
        fftw_plan_dft_c2r_2d(nh, nw, freq.get(), real.get(), FFTW_ESTIMATE);
  }

  // Flipped kernel: correlation with k becomes linear convolution with the
  // flip, read back at offset (kh - 1, kw - 1).
  std::fill_n(real.get(), n_real, 0.0);
  for (std::size_t a = 0; a < kernel_h_; ++a) {
    for (std::size_t b = 0; b < kernel_w_; ++b) {
      real[a * fft_w_ + b] = kernel(kernel_h_ - 1 - a, kernel_w_ - 1 - b);
    }
  }
  fftw_execute_dft_r2c(plans_->forward, real.get(), freq.get());

  const double scale = 1.0 / static_cast<double>(n_real);
  spectrum_.resize(n_complex);
  for (std::size_t i = 0; i < n_complex; ++i) {
    spectrum_[i] = {freq[i][0] * scale, freq[i][1] * scale};
  }
}

SurroundFilter::~SurroundFilter() = default;
SurroundFilter::SurroundFilter(SurroundFilter&&) noexcept = default;
SurroundFilter& SurroundFilter::operator=(SurroundFilter&&) noexcept = default;

ImagePlane SurroundFilter::apply(const ImagePlane& v) const {
  if (v.width() != plane_w_ || v.height() != plane_h_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "surround filter built for " + std::to_string(plane_w_) + "x" +
                    std::to_string(plane_h_) + ", got " +
                    std::to_string(v.width()) + "x" + std::to_string(v.height()));
  }
  const ImagePlane ext = detail::reflect_pad(v, kernel_w_, kernel_h_);

  const std::size_t n_real = fft_w_ * fft_h_;
  const std::size_t n_complex = spectrum_.size();
  RealBuffer real = alloc_real(n_real);
  ComplexBuffer freq = alloc_complex(n_complex);

  std::fill_n(real.get(), n_real, 0.0);
  for (std::size_t y = 0; y < ext.height(); ++y) {
    std::copy(ext.row(y).begin(), ext.row(y).end(), real.get() + y * fft_w_);
  }
  fftw_execute_dft_r2c(plans_->forward, real.get(), freq.get());

  for (std::size_t i = 0; i < n_complex; ++i) {
    const std::complex<double> x{freq[i][0], freq[i][1]};
    const std::complex<double> y = x * spectrum_[i];
    freq[i][0] = y.real();
    freq[i][1] = y.imag();
  }
  fftw_execute_dft_c2r(plans_->inverse, freq.get(), real.get());

  ImagePlane out(plane_w_, plane_h_);
  for (std::size_t i = 0; i < plane_h_; ++i) {
    const double* src = real.get() + (i + kernel_h_ - 1) * fft_w_ + kernel_w_ - 1;
    std::copy(src, src + plane_w_, out.row(i).begin());
  }
  return out;
}

ImagePlane convolve_fft(const ImagePlane& v, const ImagePlane& kernel) {
  return SurroundFilter(kernel, v.width(), v.height()).apply(v);
}

ImagePlane convolve(const ImagePlane& v, const ImagePlane& kernel,
                    ConvolutionPath path) {
  return path == ConvolutionPath::kFft ? convolve_fft(v, kernel)
                                       : convolve_direct(v, kernel);
}

}  // namespace mmr
