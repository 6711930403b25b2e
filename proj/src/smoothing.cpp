#include "flowfields/smoothing.hpp"

#include <cmath>
#include <stdexcept>

#include "flowfields/parallel.hpp"

namespace flowfields {

namespace {

constexpr int kLanczosA = 3;

double lanczos3(double t) {
  t = std::fabs(t);
  if (t >= kLanczosA) return 0.0;
  if (t < 1e-12) return 1.0;
  const double pt = M_PI * t;
  return (std::sin(pt) / pt) * (std::sin(pt / kLanczosA) / (pt / kLanczosA));
}

struct TapTable {
  int support;              // taps per output sample
  std::vector<int> start;   // first (clamped) source index per output
  std::vector<float> w;     // support weights per output, normalized
};

// Resampling taps mapping out_n samples onto in_n source samples with
// pixel-center alignment. Source indices are clamped; weights of clamped
// taps pile up on the border samples.
TapTable make_taps(int in_n, int out_n) {
  const double scale = static_cast<double>(in_n) / out_n;
  TapTable t;
  t.support = 2 * kLanczosA;
  t.start.resize(out_n);
  t.w.assign(static_cast<size_t>(out_n) * t.support, 0.0f);
  for (int o = 0; o < out_n; ++o) {
    const double sx = (o + 0.5) * scale - 0.5;
    const int i0 = static_cast<int>(std::floor(sx)) - kLanczosA + 1;
    t.start[o] = i0;
    double sum = 0.0;
    double wd[2 * kLanczosA];
    for (int j = 0; j < t.support; ++j) {
      wd[j] = lanczos3(sx - (i0 + j));
      sum += wd[j];
    }
    for (int j = 0; j < t.support; ++j)
      t.w[static_cast<size_t>(o) * t.support + j] =
          static_cast<float>(wd[j] / sum);
  }
  return t;
}

// One output pixel of a horizontal resampling pass.
inline void resample_row_px(const FloatImage& src, const TapTable& taps, int o,
                            int y, float* out) {
  const int ch = src.channels;
  for (int c = 0; c < ch; ++c) out[c] = 0.0f;
  const float* w = &taps.w[static_cast<size_t>(o) * taps.support];
  for (int j = 0; j < taps.support; ++j) {
    const int xi = clampi(taps.start[o] + j, 0, src.width - 1);
    const float* p = src.px(xi, y);
    for (int c = 0; c < ch; ++c) out[c] += w[j] * p[c];
  }
}

inline void resample_col_px(const FloatImage& src, const TapTable& taps, int x,
                            int o, float* out) {
  const int ch = src.channels;
  for (int c = 0; c < ch; ++c) out[c] = 0.0f;
  const float* w = &taps.w[static_cast<size_t>(o) * taps.support];
  for (int j = 0; j < taps.support; ++j) {
    const int yi = clampi(taps.start[o] + j, 0, src.height - 1);
    const float* p = src.px(x, yi);
    for (int c = 0; c < ch; ++c) out[c] += w[j] * p[c];
  }
}

inline void downsample_px(const FloatImage& img, int n, int X, int Y,
                          float* out) {
  const int x0 = X * n, y0 = Y * n;
  const int x1 = std::min(x0 + n, img.width);
  const int y1 = std::min(y0 + n, img.height);
  const int ch = img.channels;
  double acc[16] = {0};
  std::vector<double> accv;
  double* a = acc;
  if (ch > 16) {
    accv.assign(ch, 0.0);
    a = accv.data();
  }
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) {
      const float* p = img.px(x, y);
      for (int c = 0; c < ch; ++c) a[c] += p[c];
    }
  const double inv = 1.0 / ((x1 - x0) * (y1 - y0));
  for (int c = 0; c < ch; ++c) out[c] = static_cast<float>(a[c] * inv);
}

void check_smooth_args(const FloatImage& img, int n) {
  if (img.empty()) throw std::invalid_argument("build_smoothed: empty image");
  if (n < 1 || (n & (n - 1)) != 0)
    throw std::invalid_argument("build_smoothed: n must be a power of two");
  if (n > std::min(img.width, img.height))
    throw std::invalid_argument("build_smoothed: n exceeds image size");
}

}  // namespace

FloatImage area_downsample(const FloatImage& img, int n, int threads) {
  const int ow = (img.width + n - 1) / n;
  const int oh = (img.height + n - 1) / n;
  FloatImage out(ow, oh, img.channels);
  const int nt = resolve_threads(threads);
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int Y = 0; Y < oh; ++Y)
    for (int X = 0; X < ow; ++X) downsample_px(img, n, X, Y, out.px(X, Y));
  return out;
}

FloatImage lanczos_resize(const FloatImage& img, int out_w, int out_h,
                          int threads) {
  const TapTable tx = make_taps(img.width, out_w);
  const TapTable ty = make_taps(img.height, out_h);
  const int nt = resolve_threads(threads);

  FloatImage tmp(out_w, img.height, img.channels);
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int y = 0; y < img.height; ++y)
    for (int o = 0; o < out_w; ++o) resample_row_px(img, tx, o, y, tmp.px(o, y));

  FloatImage out(out_w, out_h, img.channels);
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int o = 0; o < out_h; ++o)
    for (int x = 0; x < out_w; ++x) resample_col_px(tmp, ty, x, o, out.px(x, o));
  return out;
}

FloatImage build_smoothed(const FloatImage& img, int n, int threads) {
  check_smooth_args(img, n);
  if (n == 1) return img;
  FloatImage small = area_downsample(img, n, threads);
  return lanczos_resize(small, img.width, img.height, threads);
}

SmoothedStack build_smoothed_stack(const FloatImage& img, int k, int threads) {
  SmoothedStack s;
  s.max_step = 1 << k;
  s.levels.reserve(k + 1);
  for (int i = 0; i <= k; ++i)
    s.levels.push_back(build_smoothed(img, 1 << i, threads));
  return s;
}

namespace ref {

FloatImage area_downsample(const FloatImage& img, int n) {
  const int ow = (img.width + n - 1) / n;
  const int oh = (img.height + n - 1) / n;
  FloatImage out(ow, oh, img.channels);
  for (int Y = 0; Y < oh; ++Y)
    for (int X = 0; X < ow; ++X) downsample_px(img, n, X, Y, out.px(X, Y));
  return out;
}

FloatImage lanczos_resize(const FloatImage& img, int out_w, int out_h) {
  const TapTable tx = make_taps(img.width, out_w);
  const TapTable ty = make_taps(img.height, out_h);
  FloatImage tmp(out_w, img.height, img.channels);
  for (int y = 0; y < img.height; ++y)
    for (int o = 0; o < out_w; ++o) resample_row_px(img, tx, o, y, tmp.px(o, y));
  FloatImage out(out_w, out_h, img.channels);
  for (int o = 0; o < out_h; ++o)
    for (int x = 0; x < out_w; ++x) resample_col_px(tmp, ty, x, o, out.px(x, o));
  return out;
}

FloatImage build_smoothed(const FloatImage& img, int n) {
  check_smooth_args(img, n);
  if (n == 1) return img;
  return ref::lanczos_resize(ref::area_downsample(img, n), img.width,
                             img.height);
}

}  // namespace ref

}  // namespace flowfields
