#pragma once

#include <cstdint>
#include <vector>

namespace flowfields {

/// Dense float image with an arbitrary number of interleaved channels.
/// Used both for CIELab color images (3 channels) and for SIFT-flow
/// "color" fields (S channels).
struct FloatImage {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<float> data;  // row-major, interleaved

  FloatImage() = default;
  FloatImage(int w, int h, int c, float fill = 0.0f)
      : width(w), height(h), channels(c),
        data(static_cast<size_t>(w) * h * c, fill) {}

  bool empty() const { return width <= 0 || height <= 0; }
  size_t pixel_count() const { return static_cast<size_t>(width) * height; }

  float* px(int x, int y) {
    return data.data() + (static_cast<size_t>(y) * width + x) * channels;
  }
  const float* px(int x, int y) const {
    return data.data() + (static_cast<size_t>(y) * width + x) * channels;
  }
  float at(int x, int y, int c) const { return px(x, y)[c]; }
};

/// A color image in CIELab (L in [0,100], a/b unbounded). channels == 3.
using ColorImage = FloatImage;

/// 8-bit RGB image as read from PNG/PPM files. Interleaved, 3 channels.
struct Rgb8Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;

  Rgb8Image() = default;
  Rgb8Image(int w, int h)
      : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {}

  bool empty() const { return width <= 0 || height <= 0; }
  uint8_t* px(int x, int y) {
    return data.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
  const uint8_t* px(int x, int y) const {
    return data.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
};

/// sRGB (8 bit, D65) -> CIELab. Throws std::invalid_argument on empty input.
ColorImage srgb_to_cielab(const Rgb8Image& img);

inline int clampi(int v, int lo, int hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}
inline float clampf(float v, float lo, float hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

/// Bilinear blend of the 4 pixels around (x,y), all channels into `out`.
/// Caller guarantees 0 <= x <= width-1 and 0 <= y <= height-1.
inline void bilinear_sample_unchecked(const FloatImage& img, float x, float y,
                                      float* out) {
  int x0 = static_cast<int>(x);
  int y0 = static_cast<int>(y);
  if (x0 > img.width - 2) x0 = img.width - 2;   // x == width-1
  if (y0 > img.height - 2) y0 = img.height - 2;
  if (x0 < 0) x0 = 0;  // single-column / single-row images
  if (y0 < 0) y0 = 0;
  int x1 = x0 + 1 < img.width ? x0 + 1 : x0;
  int y1 = y0 + 1 < img.height ? y0 + 1 : y0;
  float fx = x - x0;
  float fy = y - y0;
  const float* p00 = img.px(x0, y0);
  const float* p10 = img.px(x1, y0);
  const float* p01 = img.px(x0, y1);
  const float* p11 = img.px(x1, y1);
  float w00 = (1.0f - fx) * (1.0f - fy);
  float w10 = fx * (1.0f - fy);
  float w01 = (1.0f - fx) * fy;
  float w11 = fx * fy;
  for (int c = 0; c < img.channels; ++c)
    out[c] = w00 * p00[c] + w10 * p10[c] + w01 * p01[c] + w11 * p11[c];
}

/// Checked variant: throws std::out_of_range if (x,y) is outside
/// [0,width-1] x [0,height-1].
void bilinear_sample(const FloatImage& img, float x, float y, float* out);

}  // namespace flowfields
