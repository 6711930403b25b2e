#pragma once

#include <vector>

#include "flowfields/image.hpp"

namespace flowfields {

/// Full-resolution smoothed versions of one image, one per hierarchy step
/// n in {1, 2, 4, ..., 2^k}. level(1) is the original image.
struct SmoothedStack {
  int max_step = 1;                // 2^k
  std::vector<FloatImage> levels;  // levels[i] corresponds to n = 2^i

  const FloatImage& level(int n) const {
    int i = 0;
    while ((1 << i) < n) ++i;
    return levels[i];
  }
};

/// Box-average downsample by an integer factor n. Output is
/// ceil(w/n) x ceil(h/n); partial boxes at the right/bottom borders average
/// over their actual coverage.
FloatImage area_downsample(const FloatImage& img, int n, int threads = 0);

/// Lanczos (a=3) resampling of `img` to out_w x out_h. Weights are
/// renormalized so constant images stay constant.
FloatImage lanczos_resize(const FloatImage& img, int out_w, int out_h,
                          int threads = 0);

/// Smoothed image I^n: area downsample by n, then Lanczos upsample back to
/// the original resolution. n == 1 returns a copy. Throws
/// std::invalid_argument if n is not a power of two >= 1 or exceeds
/// min(width, height).
FloatImage build_smoothed(const FloatImage& img, int n, int threads = 0);

/// All levels n = 1, 2, ..., 2^k.
SmoothedStack build_smoothed_stack(const FloatImage& img, int k,
                                   int threads = 0);

namespace ref {
/// Serial reference implementations (same arithmetic, plain loops).
FloatImage area_downsample(const FloatImage& img, int n);
FloatImage lanczos_resize(const FloatImage& img, int out_w, int out_h);
FloatImage build_smoothed(const FloatImage& img, int n);
}  // namespace ref

}  // namespace flowfields
