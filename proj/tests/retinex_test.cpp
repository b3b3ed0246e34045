#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "mmr/diagnostics.hpp"
#include "mmr/error.hpp"
#include "mmr/retinex.hpp"
#include "test_util.hpp"

namespace mmr {
namespace {

using testing::constant_plane;
using testing::max_abs_diff;
using testing::oracle_convolve;
using testing::oracle_gaussian;
using testing::random_plane;

class RetinexTest : public ::testing::Test {
 protected:
  void SetUp() override {
    set_diagnostic_handler([this](std::string_view m) { messages_.emplace_back(m); });
  }
  void TearDown() override { set_diagnostic_handler({}); }

  std::vector<std::string> messages_;
};

TEST_F(RetinexTest, ContrastStretchThreeValues) {
  const ImagePlane p(3, 1, std::vector<double>{50, 75, 100});
  const ImagePlane out = contrast_stretch(p, 255.0);
  EXPECT_EQ(out(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(out(0, 1), 127.5);
  EXPECT_EQ(out(0, 2), 255.0);
}

TEST_F(RetinexTest, ContrastStretchFixedPoint) {
  ImagePlane p = random_plane(16, 16, 1);
  p(0, 0) = 0.0;
  p(3, 3) = 255.0;
  EXPECT_LT(max_abs_diff(contrast_stretch(p, 255.0), p), 1e-12);
}

TEST_F(RetinexTest, ContrastStretchConstantGivesZerosAndDiagnostic) {
  const ImagePlane out = contrast_stretch(constant_plane(4, 4, 9.0), 255.0);
  for (const double x : out.values()) EXPECT_EQ(x, 0.0);
  ASSERT_EQ(messages_.size(), 1u);
  EXPECT_NE(messages_[0].find("constant"), std::string::npos);
}

TEST(GaussianKernel, UnitSumPositiveAndSymmetric) {
  const EnhanceConfig cfg;
  for (const std::size_t side : {16u, 32u, 64u, 128u, 256u}) {
    for (const double ratio : cfg.sigma_ratios) {
      const ImagePlane k = gaussian_kernel(side, ratio * side);
      EXPECT_NEAR(testing::plane_sum(k), 1.0, 1e-9);
      for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) {
          ASSERT_GT(k(i, j), 0.0);
          ASSERT_EQ(k(i, j), k(side - 1 - i, j));
          ASSERT_EQ(k(i, j), k(i, side - 1 - j));
          ASSERT_EQ(k(i, j), k(j, i));
        }
      }
    }
  }
}

TEST(GaussianKernel, MatchesFormula) {
  for (const std::size_t side : {3u, 8u, 17u}) {
    EXPECT_LT(max_abs_diff(gaussian_kernel(side, 2.5), oracle_gaussian(side, 2.5)),
              1e-15);
  }
}

TEST(GaussianKernel, DegenerateSizes) {
  const ImagePlane one = gaussian_kernel(1, 0.7);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one(0, 0), 1.0);

  // sigma -> infinity flattens the kernel to 1/9.
  const ImagePlane flat = gaussian_kernel(3, 1e6);
  for (const double x : flat.values()) EXPECT_NEAR(x, 1.0 / 9.0, 1e-6);
}

TEST(GaussianKernel, RejectsNonPositiveSigma) {
  for (const double s : {0.0, -1.0, std::nan("")}) {
    try {
      gaussian_kernel(4, s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidSigma);
    }
  }
}

TEST(Ssr, ConstantPlaneIsZero) {
  const ImagePlane v = constant_plane(32, 32, 137.0);
  for (const double sigma : {0.5, 4.0, 30.0}) {
    const ImagePlane g = gaussian_kernel(32, sigma);
    for (const auto path : {ConvolutionPath::kFft, ConvolutionPath::kDirect}) {
      const ImagePlane out = ssr(v, g, 1.0, path);
      for (const double x : out.values()) EXPECT_LT(std::abs(x), 1e-9);
    }
  }
}

TEST(Ssr, ScaleInvariantWithNegligibleOffset) {
  const ImagePlane v = random_plane(16, 16, 3, 10.0, 200.0);
  ImagePlane doubled = v;
  for (double& x : doubled.values()) x *= 2.0;
  const ImagePlane g = gaussian_kernel(16, 3.0);
  EXPECT_LT(max_abs_diff(ssr(v, g, 1e-6), ssr(doubled, g, 1e-6)), 1e-6);
}

TEST(Ssr, BrightPixelOnDarkField) {
  ImagePlane v = constant_plane(8, 8, 10.0);
  v(3, 4) = 250.0;
  const ImagePlane g = gaussian_kernel(8, 1.5);

  // Oracle: brute-force convolution plugged into the log ratio by hand.
  const ImagePlane surround = oracle_convolve(v, g);
  ImagePlane expected(8, 8);
  for (std::size_t i = 0; i < 64; ++i) {
    expected.values()[i] =
        std::log2(v.values()[i] + 1.0) - std::log2(surround.values()[i] + 1.0);
  }
  const ImagePlane out = ssr(v, g, 1.0);
  EXPECT_LT(max_abs_diff(out, expected), 1e-9);
  EXPECT_GT(out(3, 4), 0.0);
  EXPECT_LT(out(3, 3), 0.0);
  EXPECT_LT(out(2, 4), 0.0);
  EXPECT_LT(out(4, 5), 0.0);
}

TEST(Msr, ConstantPlaneIsZero) {
  const EnhanceConfig cfg;
  const auto ks = GaussianKernelSet::for_level(16, cfg);
  const ImagePlane out = msr(constant_plane(16, 16, 80.0), ks, cfg);
  for (const double x : out.values()) {
    EXPECT_LT(std::abs(x), 1e-9);
  }
}

TEST(Msr, DegenerateWeightsEqualSingleScale) {
  EnhanceConfig cfg;
  cfg.weights = {1.0, 0.0, 0.0};
  const auto ks = GaussianKernelSet::for_level(16, cfg);
  const ImagePlane v = random_plane(16, 16, 8);
  EXPECT_EQ(msr(v, ks, cfg), ssr(v, ks.kernel(0), cfg.log_offset));
}

TEST(Msr, EqualWeightsAreMeanOfThreeSsr) {
  const EnhanceConfig cfg;
  const auto ks = GaussianKernelSet::for_level(16, cfg);
  const ImagePlane v = random_plane(16, 16, 21);
  ImagePlane mean(16, 16, 0.0);
  for (std::size_t n = 0; n < 3; ++n) {
    const ImagePlane term = ssr(v, ks.kernel(n), cfg.log_offset);
    for (std::size_t i = 0; i < mean.size(); ++i) mean.values()[i] += term.values()[i] / 3.0;
  }
  EXPECT_LT(max_abs_diff(msr(v, ks, cfg), mean), 1e-12);
}

TEST(Msr, LinearInWeights) {
  EnhanceConfig cfg;
  cfg.weights = {0.2, 0.5, 0.3};
  const auto ks = GaussianKernelSet::for_level(32, cfg);
  const ImagePlane v = random_plane(32, 32, 22);
  ImagePlane expected(32, 32, 0.0);
  for (std::size_t n = 0; n < 3; ++n) {
    const ImagePlane term = ssr(v, ks.kernel(n), cfg.log_offset);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      expected.values()[i] += cfg.weights[n] * term.values()[i];
    }
  }
  EXPECT_LT(max_abs_diff(msr(v, ks, cfg), expected), 1e-12);
}

TEST(Msr, RejectsKernelSizeMismatch) {
  const EnhanceConfig cfg;
  const auto ks = GaussianKernelSet::for_level(16, cfg);
  EXPECT_THROW(msr(ImagePlane(32, 32), ks, cfg), Error);
}

TEST_F(RetinexTest, NormalizeMsr) {
  const ImagePlane r(3, 1, std::vector<double>{-2, 0, 2});
  const ImagePlane out = normalize_msr(r, 255.0);
  EXPECT_EQ(out(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(out(0, 1), 127.5);
  EXPECT_EQ(out(0, 2), 255.0);

  const ImagePlane zeros = normalize_msr(ImagePlane(4, 4, 0.0), 255.0);
  for (const double x : zeros.values()) {
    EXPECT_EQ(x, 0.0);
  }
}

TEST_F(RetinexTest, EnhanceLevelConstantIsZero) {
  const ImagePlane out = enhance_level(constant_plane(16, 16, 50.0), EnhanceConfig{});
  for (const double x : out.values()) {
    EXPECT_EQ(x, 0.0);
  }
}

TEST(EnhanceLevel, TwoToneSpansFullRange) {
  ImagePlane v(16, 16, 60.0);
  for (std::size_t r = 4; r < 12; ++r) {
    for (std::size_t c = 4; c < 12; ++c) v(r, c) = 90.0;
  }
  const ImagePlane out = enhance_level(v, EnhanceConfig{});
  EXPECT_EQ(min_value(out), 0.0);
  EXPECT_EQ(max_value(out), 255.0);
}

TEST(EnhanceLevel, RangeOnRandomPlanes) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ImagePlane out = enhance_level(random_plane(32, 32, seed, 40, 70), EnhanceConfig{});
    EXPECT_EQ(min_value(out), 0.0);
    EXPECT_EQ(max_value(out), 255.0);
  }
}

TEST(EnhanceLevel, FftAndDirectPathsAgree) {
  const ImagePlane v = random_plane(32, 32, 17, 20, 90);
  EXPECT_LT(max_abs_diff(enhance_level(v, EnhanceConfig{}, ConvolutionPath::kFft),
                         enhance_level(v, EnhanceConfig{}, ConvolutionPath::kDirect)),
            1e-6);
}

TEST(EnhanceConfig, Validation) {
  EXPECT_NO_THROW(EnhanceConfig{}.validate());

  EnhanceConfig bad_weights;
  bad_weights.weights = {0.5, 0.5, 0.5};
  EXPECT_THROW(bad_weights.validate(), Error);

  EnhanceConfig negative;
  negative.weights = {1.5, -0.5, 0.0};
  EXPECT_THROW(negative.validate(), Error);

  EnhanceConfig unordered;
  unordered.sigma_ratios = {0.3, 0.1, 0.9};
  EXPECT_THROW(unordered.validate(), Error);

  EnhanceConfig offset;
  offset.log_offset = 0.0;
  EXPECT_THROW(offset.validate(), Error);
}

}  // namespace
}  // namespace mmr
