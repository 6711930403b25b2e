#include "flowfields/image.hpp"

#include <cmath>
#include <stdexcept>

namespace flowfields {

namespace {

// sRGB gamma expansion, input in [0,1]
inline double srgb_to_linear(double c) {
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

inline double lab_f(double t) {
  // cube-root with linear toe below (6/29)^3
  constexpr double kEps = 216.0 / 24389.0;
  constexpr double kKappa = 24389.0 / 27.0;
  return t > kEps ? std::cbrt(t) : (kKappa * t + 16.0) / 116.0;
}

}  // namespace

ColorImage srgb_to_cielab(const Rgb8Image& img) {
  if (img.empty()) throw std::invalid_argument("srgb_to_cielab: empty image");
  // D65 reference white
  constexpr double Xn = 0.95047, Yn = 1.0, Zn = 1.08883;
  ColorImage out(img.width, img.height, 3);
  const uint8_t* src = img.data.data();
  float* dst = out.data.data();
  const size_t npx = static_cast<size_t>(img.width) * img.height;
  for (size_t i = 0; i < npx; ++i) {
    double r = srgb_to_linear(src[3 * i + 0] / 255.0);
    double g = srgb_to_linear(src[3 * i + 1] / 255.0);
    double b = srgb_to_linear(src[3 * i + 2] / 255.0);
    double X = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
    double Y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
    double Z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;
    double fx = lab_f(X / Xn), fy = lab_f(Y / Yn), fz = lab_f(Z / Zn);
    dst[3 * i + 0] = static_cast<float>(116.0 * fy - 16.0);
    dst[3 * i + 1] = static_cast<float>(500.0 * (fx - fy));
    dst[3 * i + 2] = static_cast<float>(200.0 * (fy - fz));
  }
  return out;
}

void bilinear_sample(const FloatImage& img, float x, float y, float* out) {
  if (x < 0.0f || y < 0.0f || x > static_cast<float>(img.width - 1) ||
      y > static_cast<float>(img.height - 1))
    throw std::out_of_range("bilinear_sample: position outside image");
  bilinear_sample_unchecked(img, x, y, out);
}

}  // namespace flowfields
