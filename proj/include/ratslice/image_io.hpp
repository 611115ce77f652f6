#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ratslice/palette.hpp"
#include "ratslice/raster.hpp"

namespace ratslice {

enum class ImageFormat { Ppm, Png };

/// Format from the file extension (.ppm or .png); throws InvalidArgument otherwise.
ImageFormat image_format_for(const std::filesystem::path& path);

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by row-major RGB bytes.
std::string encode_ppm(std::span<const std::uint8_t> rgb, int width, int height);

void write_ppm(const std::filesystem::path& path, std::span<const std::uint8_t> rgb, int width, int height);
void write_png(const std::filesystem::path& path, std::span<const std::uint8_t> rgb, int width, int height);

/// Writes the colored grid as PPM or PNG according to the extension.
/// Throws IoError on write failure.
void encode_image(const GridResult& g, const Palette& pal, const std::filesystem::path& path);

}  // namespace ratslice
