#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "mmr/error.hpp"
#include "mmr/image_io.hpp"

namespace mmr {
namespace {

namespace fs = std::filesystem;

class ImageIoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mmr_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

RgbImage random_rgb(std::size_t w, std::size_t h, bool gray, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  RgbImage img(w, h);
  for (std::size_t i = 0; i < img.r.size(); ++i) {
    img.r.values()[i] = dist(rng);
    img.g.values()[i] = gray ? img.r.values()[i] : dist(rng);
    img.b.values()[i] = gray ? img.r.values()[i] : dist(rng);
  }
  return img;
}

TEST_F(ImageIoTest, RoundTripEveryContainer) {
  struct Case {
    const char* name;
    ImageFormat format;
    bool gray;
  };
  for (const Case c : {Case{"a.pgm", ImageFormat::kPgm, true},
                       Case{"b.ppm", ImageFormat::kPpm, false},
                       Case{"c.png", ImageFormat::kPng, false},
                       Case{"d.png", ImageFormat::kPng, true}}) {
    const RgbImage img = random_rgb(13, 7, c.gray, 42);
    write_image(dir_ / c.name, img, c.format, c.gray);
    const LoadedImage back = read_image(dir_ / c.name);
    EXPECT_EQ(back.format, c.format) << c.name;
    EXPECT_EQ(back.grayscale, c.gray) << c.name;
    EXPECT_EQ(back.image, img) << c.name;
  }
}

TEST_F(ImageIoTest, WriteRoundsToEightBits) {
  RgbImage img(2, 1);
  img.r = ImagePlane(2, 1, std::vector<double>{10.5, 300.0});
  img.g = ImagePlane(2, 1, std::vector<double>{10.49, -2.0});
  img.b = ImagePlane(2, 1, std::vector<double>{0.0, 254.6});
  write_image(dir_ / "q.ppm", img, ImageFormat::kPpm, false);
  const RgbImage back = read_image(dir_ / "q.ppm").image;
  EXPECT_EQ(back, quantize_8bit(img));
  EXPECT_EQ(back.r(0, 0), 11.0);
  EXPECT_EQ(back.r(0, 1), 255.0);
  EXPECT_EQ(back.g(0, 0), 10.0);
  EXPECT_EQ(back.g(0, 1), 0.0);
  EXPECT_EQ(back.b(0, 1), 255.0);
}

TEST_F(ImageIoTest, PgmHeaderWithCommentsAndSmallMaxval) {
  {
    std::ofstream f(dir_ / "c.pgm", std::ios::binary);
    f << "P5\n# a comment\n2 1\n# another\n15\n";
    f.put(static_cast<char>(0));
    f.put(static_cast<char>(15));
  }
  const LoadedImage img = read_image(dir_ / "c.pgm");
  EXPECT_TRUE(img.grayscale);
  EXPECT_EQ(img.image.r(0, 0), 0.0);
  EXPECT_EQ(img.image.r(0, 1), 255.0);
  EXPECT_EQ(img.image.b(0, 1), 255.0);
}

TEST_F(ImageIoTest, MalformedInputsAreIoErrors) {
  {
    std::ofstream f(dir_ / "trunc.ppm", std::ios::binary);
    f << "P6\n4 4\n255\nabc";
  }
  {
    std::ofstream f(dir_ / "ascii.pgm", std::ios::binary);
    f << "P2\n1 1\n255\n7\n";
  }
  {
    std::ofstream f(dir_ / "junk.png", std::ios::binary);
    f << "\x89PNG\r\n\x1a\n garbage";
  }
  {
    std::ofstream f(dir_ / "text.pgm", std::ios::binary);
    f << "hello";
  }
  for (const char* name : {"trunc.ppm", "ascii.pgm", "junk.png", "text.pgm", "missing.png"}) {
    try {
      read_image(dir_ / name);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kIo) << name;
    }
  }
}

TEST(ImageFormat, FromExtension) {
  EXPECT_EQ(format_from_extension("x/y.PNG"), ImageFormat::kPng);
  EXPECT_EQ(format_from_extension("a.pgm"), ImageFormat::kPgm);
  EXPECT_EQ(format_from_extension("a.ppm"), ImageFormat::kPpm);
  EXPECT_FALSE(format_from_extension("a.tif"));
}

}  // namespace
}  // namespace mmr
