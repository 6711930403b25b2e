#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowfields/image.hpp"

namespace flowfields {

/// 16-bit RGB image (KITTI flow maps are stored this way).
struct Rgb16Image {
  int width = 0;
  int height = 0;
  std::vector<uint16_t> data;  // interleaved, 3 channels

  Rgb16Image() = default;
  Rgb16Image(int w, int h)
      : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {}
  uint16_t* px(int x, int y) {
    return data.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
  const uint16_t* px(int x, int y) const {
    return data.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
};

/// Single-channel 8-bit image (occlusion / validity masks).
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;
  uint8_t at(int x, int y) const {
    return data[static_cast<size_t>(y) * width + x];
  }
};

/// Reads an 8-bit PNG (gray/palette/alpha converted to RGB) or a binary
/// PPM/PGM. Format is detected from the file magic. Throws
/// std::runtime_error on I/O or format errors.
Rgb8Image read_image(const std::string& path);

void write_png(const std::string& path, const Rgb8Image& img);

/// 16-bit 3-channel PNG, as used by the KITTI flow ground truth.
Rgb16Image read_png16(const std::string& path);
void write_png16(const std::string& path, const Rgb16Image& img);

/// Any PNG/PPM reduced to one channel (RGB inputs are averaged).
GrayImage read_gray(const std::string& path);

}  // namespace flowfields
