#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "mmr/colorspace.hpp"

namespace mmr {

enum class ImageFormat { kPgm, kPpm, kPng };

std::string_view to_string(ImageFormat format);
// By extension (.pgm, .ppm, .pnm, .png; case-insensitive).
std::optional<ImageFormat> format_from_extension(const std::filesystem::path& path);

struct LoadedImage {
  RgbImage image;        // grayscale sources are replicated into all channels
  ImageFormat format;    // container the file was read from
  bool grayscale = false;
};

// Reads binary PGM (P5), PPM (P6) or 8-bit PNG; the container is sniffed from
// the file contents. Throws Error(kIo) on unreadable or malformed files.
LoadedImage read_image(const std::filesystem::path& path);

// Samples are rounded half-up to 8 bits. With grayscale=true only the red
// plane is written (PGM, or a gray PNG).
void write_image(const std::filesystem::path& path, const RgbImage& image,
                 ImageFormat format, bool grayscale);

// Round every sample the way write_image does, without touching disk.
RgbImage quantize_8bit(const RgbImage& image);

}  // namespace mmr
