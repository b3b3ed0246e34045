#include "mmr/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "mmr/baselines.hpp"
#include "mmr/error.hpp"

namespace mmr {
namespace {

[[noreturn]] void io_error(const std::filesystem::path& path, const std::string& what) {
  throw Error(ErrorCode::kIo, path.string() + ": " + what);
}

// --- PNM ------------------------------------------------------------------

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string discard;
      std::getline(in, discard);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

std::size_t read_header_int(std::istream& in, const std::filesystem::path& path) {
  skip_space_and_comments(in);
  long long v = -1;
  if (!(in >> v) || v <= 0) io_error(path, "malformed PNM header");
  return static_cast<std::size_t>(v);
}

LoadedImage read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_error(path, "cannot open");
  char magic[2] = {};
  in.read(magic, 2);
  if (magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6')) {
    io_error(path, "only binary PGM (P5) and PPM (P6) are supported");
  }
  const bool gray = magic[1] == '5';
  const std::size_t width = read_header_int(in, path);
  const std::size_t height = read_header_int(in, path);
  const std::size_t maxval = read_header_int(in, path);
  if (maxval > 255) io_error(path, "16-bit PNM is not supported");
  in.get();  // single whitespace before the raster

  const std::size_t channels = gray ? 1 : 3;
  std::vector<unsigned char> raster(width * height * channels);
  in.read(reinterpret_cast<char*>(raster.data()),
          static_cast<std::streamsize>(raster.size()));
  if (static_cast<std::size_t>(in.gcount()) != raster.size()) {
    io_error(path, "truncated raster");
  }

  LoadedImage out{RgbImage(width, height), gray ? ImageFormat::kPgm : ImageFormat::kPpm,
                  gray};
  const double scale = 255.0 / static_cast<double>(maxval);
  auto r = out.image.r.values(), g = out.image.g.values(), b = out.image.b.values();
  for (std::size_t i = 0; i < width * height; ++i) {
    const unsigned char* px = raster.data() + i * channels;
    r[i] = std::min(255.0, px[0] * scale);
    g[i] = gray ? r[i] : std::min(255.0, px[1] * scale);
    b[i] = gray ? r[i] : std::min(255.0, px[2] * scale);
  }
  return out;
}

void write_pnm(const std::filesystem::path& path, const RgbImage& img, bool gray) {
  std::ofstream out(path, std::ios::binary);
  if (!out) io_error(path, "cannot open for writing");
  out << (gray ? "P5" : "P6") << '\n'
      << img.width() << ' ' << img.height() << "\n255\n";
  const std::size_t channels = gray ? 1 : 3;
  std::vector<unsigned char> raster(img.width() * img.height() * channels);
  const auto r = img.r.values(), g = img.g.values(), b = img.b.values();
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned char* px = raster.data() + i * channels;
    px[0] = quantize(r[i]);
    if (!gray) {
      px[1] = quantize(g[i]);
      px[2] = quantize(b[i]);
    }
  }
  out.write(reinterpret_cast<const char*>(raster.data()),
            static_cast<std::streamsize>(raster.size()));
  if (!out) io_error(path, "write failed");
}

// --- PNG ------------------------------------------------------------------

struct FileCloser {
  void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void png_error_fn(png_structp png, png_const_charp msg) {
  auto* what = static_cast<std::string*>(png_get_error_ptr(png));
  *what = msg;
  png_longjmp(png, 1);
}
void png_warning_fn(png_structp, png_const_charp) {}

LoadedImage read_png(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) io_error(path, "cannot open");

  std::string what;
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, &what, png_error_fn, png_warning_fn);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    io_error(path, "libpng initialization failed");
  }

  std::vector<png_byte> pixels;
  std::vector<png_bytep> rows;
  png_uint_32 width = 0, height = 0;
  bool gray = false;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    io_error(path, "PNG decode failed: " + what);
  }
  png_init_io(png, file.get());
  png_read_info(png, info);
  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const png_byte color = png_get_color_type(png, info);
  gray = (color & PNG_COLOR_MASK_COLOR) == 0;

  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_packing(png);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (gray) png_set_expand_gray_1_2_4_to_8(png);
  if (!gray) png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const std::size_t channels = png_get_channels(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);
  pixels.resize(stride * height);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = pixels.data() + y * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  LoadedImage out{RgbImage(width, height), ImageFormat::kPng, gray};
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const png_byte* px = rows[y] + x * channels;
      out.image.r(y, x) = px[0];
      out.image.g(y, x) = channels >= 3 ? px[1] : px[0];
      out.image.b(y, x) = channels >= 3 ? px[2] : px[0];
    }
  }
  return out;
}

void write_png(const std::filesystem::path& path, const RgbImage& img, bool gray) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) io_error(path, "cannot open for writing");

  const std::size_t channels = gray ? 1 : 3;
  std::vector<png_byte> pixels(img.width() * img.height() * channels);
  const auto r = img.r.values(), g = img.g.values(), b = img.b.values();
  for (std::size_t i = 0; i < r.size(); ++i) {
    png_byte* px = pixels.data() + i * channels;
    px[0] = quantize(r[i]);
    if (!gray) {
      px[1] = quantize(g[i]);
      px[2] = quantize(b[i]);
    }
  }
  std::vector<png_bytep> rows(img.height());
  for (std::size_t y = 0; y < img.height(); ++y) {
    rows[y] = pixels.data() + y * img.width() * channels;
  }

  std::string what;
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, &what, png_error_fn, png_warning_fn);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    io_error(path, "libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    io_error(path, "PNG encode failed: " + what);
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
               static_cast<png_uint_32>(img.height()), 8,
               gray ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

std::string_view to_string(ImageFormat format) {
  switch (format) {
    case ImageFormat::kPgm: return "pgm";
    case ImageFormat::kPpm: return "ppm";
    case ImageFormat::kPng: return "png";
  }
  return "unknown";
}

std::optional<ImageFormat> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".pgm") return ImageFormat::kPgm;
  if (ext == ".ppm" || ext == ".pnm") return ImageFormat::kPpm;
  if (ext == ".png") return ImageFormat::kPng;
  return std::nullopt;
}

LoadedImage read_image(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) io_error(path, "cannot open");
  unsigned char sig[8] = {};
  probe.read(reinterpret_cast<char*>(sig), 8);
  const auto got = static_cast<std::size_t>(probe.gcount());
  probe.close();

  if (got == 8 && png_sig_cmp(sig, 0, 8) == 0) return read_png(path);
  if (got >= 2 && sig[0] == 'P') return read_pnm(path);
  io_error(path, "unrecognized image container");
}

void write_image(const std::filesystem::path& path, const RgbImage& image,
                 ImageFormat format, bool grayscale) {
  switch (format) {
    case ImageFormat::kPgm: return write_pnm(path, image, true);
    case ImageFormat::kPpm: return write_pnm(path, image, grayscale);
    case ImageFormat::kPng: return write_png(path, image, grayscale);
  }
}

RgbImage quantize_8bit(const RgbImage& image) {
  RgbImage out = image;
  for (ImagePlane* p : {&out.r, &out.g, &out.b}) {
    for (double& x : p->values()) x = quantize(x);
  }
  return out;
}

}  // namespace mmr
