#include "flowfields/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace flowfields {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return f;
}

[[noreturn]] void fail(const std::string& path, const char* what) {
  throw std::runtime_error(path + ": " + what);
}

// Decodes a PNG into 8-bit rows with `want_channels` (1 or 3) channels,
// or 16-bit rows with 3 channels when sixteen==true.
struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* f = nullptr;

  ~PngReader() {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
  }
};

bool has_png_magic(FILE* f) {
  unsigned char sig[8];
  size_t n = std::fread(sig, 1, 8, f);
  std::rewind(f);
  return n == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

void read_png_rows(const std::string& path, bool sixteen, int want_channels,
                   int& w, int& h, std::vector<uint8_t>& out8,
                   std::vector<uint16_t>& out16) {
  FilePtr file = open_file(path, "rb");
  if (!has_png_magic(file.get())) fail(path, "not a PNG file");

  PngReader r;
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                 nullptr);
  if (!r.png) fail(path, "png_create_read_struct failed");
  r.info = png_create_info_struct(r.png);
  if (!r.info) fail(path, "png_create_info_struct failed");
  if (setjmp(png_jmpbuf(r.png))) fail(path, "PNG decode error");

  png_init_io(r.png, file.get());
  png_read_info(r.png, r.info);

  w = png_get_image_width(r.png, r.info);
  h = png_get_image_height(r.png, r.info);
  int color = png_get_color_type(r.png, r.info);
  int depth = png_get_bit_depth(r.png, r.info);

  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8)
    png_set_expand_gray_1_2_4_to_8(r.png);
  if (png_get_valid(r.png, r.info, PNG_INFO_tRNS))
    png_set_tRNS_to_alpha(r.png);
  png_set_strip_alpha(r.png);

  if (sixteen) {
    if (depth != 16) fail(path, "expected a 16-bit PNG");
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA)
      png_set_gray_to_rgb(r.png);
    png_set_swap(r.png);  // PNG stores 16-bit big-endian
  } else {
    if (depth == 16) png_set_strip_16(r.png);
    if (want_channels == 3 &&
        (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA))
      png_set_gray_to_rgb(r.png);
    if (want_channels == 1 &&
        (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
         color == PNG_COLOR_TYPE_PALETTE))
      png_set_rgb_to_gray(r.png, 1, -1.0, -1.0);
  }
  png_read_update_info(r.png, r.info);

  const int ch = png_get_channels(r.png, r.info);
  const int expect = sixteen ? 3 : want_channels;
  if (ch != expect) fail(path, "unexpected channel count after conversion");

  std::vector<png_bytep> rows(h);
  if (sixteen) {
    out16.resize(static_cast<size_t>(w) * h * 3);
    for (int y = 0; y < h; ++y)
      rows[y] = reinterpret_cast<png_bytep>(&out16[static_cast<size_t>(y) * w * 3]);
  } else {
    out8.resize(static_cast<size_t>(w) * h * want_channels);
    rows[0] = nullptr;
    for (int y = 0; y < h; ++y)
      rows[y] = &out8[static_cast<size_t>(y) * w * want_channels];
  }
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
}

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, &info);
  }
};

void write_png_rows(const std::string& path, int w, int h, int depth,
                    std::vector<png_bytep>& rows) {
  FilePtr file = open_file(path, "wb");
  PngWriter wr;
  wr.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   nullptr);
  if (!wr.png) fail(path, "png_create_write_struct failed");
  wr.info = png_create_info_struct(wr.png);
  if (!wr.info) fail(path, "png_create_info_struct failed");
  if (setjmp(png_jmpbuf(wr.png))) fail(path, "PNG encode error");

  png_init_io(wr.png, file.get());
  png_set_IHDR(wr.png, wr.info, w, h, depth, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(wr.png, wr.info);
  if (depth == 16) png_set_swap(wr.png);
  png_write_image(wr.png, rows.data());
  png_write_end(wr.png, nullptr);
}

// --- PPM / PGM ---

int ppm_next_int(FILE* f, const std::string& path) {
  int c;
  do {
    c = std::fgetc(f);
    if (c == '#')
      while (c != '\n' && c != EOF) c = std::fgetc(f);
  } while (c == ' ' || c == '\t' || c == '\n' || c == '\r');
  int v = 0;
  bool any = false;
  while (c >= '0' && c <= '9') {
    v = v * 10 + (c - '0');
    any = true;
    c = std::fgetc(f);
  }
  if (!any) fail(path, "malformed PNM header");
  return v;
}

Rgb8Image read_pnm(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  char m0 = static_cast<char>(std::fgetc(f.get()));
  char m1 = static_cast<char>(std::fgetc(f.get()));
  if (m0 != 'P' || (m1 != '5' && m1 != '6')) fail(path, "not a binary PNM");
  const bool gray = (m1 == '5');
  int w = ppm_next_int(f.get(), path);
  int h = ppm_next_int(f.get(), path);
  int maxval = ppm_next_int(f.get(), path);
  if (maxval != 255) fail(path, "only 8-bit PNM supported");
  Rgb8Image out(w, h);
  const size_t npx = static_cast<size_t>(w) * h;
  if (gray) {
    std::vector<uint8_t> buf(npx);
    if (std::fread(buf.data(), 1, npx, f.get()) != npx)
      fail(path, "truncated PNM");
    for (size_t i = 0; i < npx; ++i)
      out.data[3 * i] = out.data[3 * i + 1] = out.data[3 * i + 2] = buf[i];
  } else {
    if (std::fread(out.data.data(), 1, npx * 3, f.get()) != npx * 3)
      fail(path, "truncated PNM");
  }
  return out;
}

bool is_png_file(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  return has_png_magic(f.get());
}

}  // namespace

Rgb8Image read_image(const std::string& path) {
  if (!is_png_file(path)) return read_pnm(path);
  Rgb8Image img;
  std::vector<uint16_t> dummy;
  read_png_rows(path, false, 3, img.width, img.height, img.data, dummy);
  return img;
}

void write_png(const std::string& path, const Rgb8Image& img) {
  std::vector<png_bytep> rows(img.height);
  auto* data = const_cast<uint8_t*>(img.data.data());
  for (int y = 0; y < img.height; ++y)
    rows[y] = data + static_cast<size_t>(y) * img.width * 3;
  write_png_rows(path, img.width, img.height, 8, rows);
}

Rgb16Image read_png16(const std::string& path) {
  Rgb16Image img;
  std::vector<uint8_t> dummy;
  read_png_rows(path, true, 3, img.width, img.height, dummy, img.data);
  return img;
}

void write_png16(const std::string& path, const Rgb16Image& img) {
  std::vector<png_bytep> rows(img.height);
  auto* data = const_cast<uint16_t*>(img.data.data());
  for (int y = 0; y < img.height; ++y)
    rows[y] =
        reinterpret_cast<png_bytep>(data + static_cast<size_t>(y) * img.width * 3);
  write_png_rows(path, img.width, img.height, 16, rows);
}

GrayImage read_gray(const std::string& path) {
  GrayImage g;
  if (is_png_file(path)) {
    std::vector<uint16_t> dummy;
    read_png_rows(path, false, 1, g.width, g.height, g.data, dummy);
    return g;
  }
  Rgb8Image rgb = read_pnm(path);
  g.width = rgb.width;
  g.height = rgb.height;
  g.data.resize(static_cast<size_t>(g.width) * g.height);
  for (size_t i = 0; i < g.data.size(); ++i) {
    int s = rgb.data[3 * i] + rgb.data[3 * i + 1] + rgb.data[3 * i + 2];
    g.data[i] = static_cast<uint8_t>(s / 3);
  }
  return g;
}

}  // namespace flowfields
