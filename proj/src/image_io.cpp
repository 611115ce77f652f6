#include "ratslice/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <fstream>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

void check_size(std::span<const std::uint8_t> rgb, int width, int height) {
  if (width < 1 || height < 1 || rgb.size() != static_cast<std::size_t>(width) * height * 3)
    throw Error(ErrorKind::InvalidArgument, "RGB buffer does not match the image size");
}

}  // namespace

ImageFormat image_format_for(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".ppm") return ImageFormat::Ppm;
  if (ext == ".png") return ImageFormat::Png;
  throw Error(ErrorKind::InvalidArgument, "unsupported image extension '" + ext + "' (use .png or .ppm)");
}

std::string encode_ppm(std::span<const std::uint8_t> rgb, int width, int height) {
  check_size(rgb, width, height);
  std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  return out;
}

void write_ppm(const std::filesystem::path& path, std::span<const std::uint8_t> rgb, int width, int height) {
  const std::string bytes = encode_ppm(rgb, width, height);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

void write_png(const std::filesystem::path& path, std::span<const std::uint8_t> rgb, int width, int height) {
  check_size(rgb, width, height);
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, path.c_str(), 0, rgb.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorKind::IoError, "cannot write " + path.string() + ": " + msg);
  }
}

void encode_image(const GridResult& g, const Palette& pal, const std::filesystem::path& path) {
  const ImageFormat fmt = image_format_for(path);
  const auto rgb = rasterize(g, pal);
  const int w = g.viewport.pixels_x;
  const int h = g.viewport.pixels_y;
  if (fmt == ImageFormat::Ppm)
    write_ppm(path, rgb, w, h);
  else
    write_png(path, rgb, w, h);
}

}  // namespace ratslice
