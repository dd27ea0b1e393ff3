#include "epq/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>

#include <png.h>

#include "epq/errors.hpp"

namespace epq {

namespace {

class Canvas {
 public:
  Canvas(const SolutionMatrix& matrix, const ImageSpec& spec)
      : side_(matrix.side()), scale_(spec.scale), flip_(spec.flip_vertical) {
    raster_.width = raster_.height = side_ * scale_;
    raster_.pixels.assign(std::size_t{raster_.width} * raster_.height, kBackground);
  }

  void fill_cell(std::uint32_t x, std::uint32_t y, Tone tone) {
    if (x >= side_ || y >= side_) return;
    const std::uint32_t row = flip_ ? side_ - 1 - y : y;
    for (std::uint32_t dy = 0; dy < scale_; ++dy)
      for (std::uint32_t dx = 0; dx < scale_; ++dx) {
        auto& px = raster_.pixels[std::size_t{row * scale_ + dy} * raster_.width + x * scale_ + dx];
        if (tone == kForeground || px == kBackground) px = tone;
      }
  }

  // Plot in index units; rounding to the nearest cell.
  void plot(double x, double y) {
    const double rx = std::round(x);
    const double ry = std::round(y);
    if (rx < 0 || ry < 0 || rx >= side_ || ry >= side_) return;
    fill_cell(static_cast<std::uint32_t>(rx), static_cast<std::uint32_t>(ry), kOverlay);
  }

  std::uint32_t side() const { return side_; }
  Raster take() { return std::move(raster_); }

 private:
  std::uint32_t side_;
  std::uint32_t scale_;
  bool flip_;
  Raster raster_;
};

void draw_line(Canvas& c, double slope) {
  // Sample along both axes so steep and shallow lines stay connected.
  for (std::uint32_t x = 0; x < c.side(); ++x) c.plot(x, slope * x);
  if (slope != 0.0)
    for (std::uint32_t y = 0; y < c.side(); ++y) c.plot(y / slope, y);
}

void draw_circle(Canvas& c, const CircleSpec& s) {
  const double r2 = s.radius * s.radius;
  for (std::uint32_t x = 0; x < c.side(); ++x) {
    const double d = r2 - (x - s.x0) * (x - s.x0);
    if (d < 0) continue;
    c.plot(x, s.y0 + std::sqrt(d));
    c.plot(x, s.y0 - std::sqrt(d));
  }
  for (std::uint32_t y = 0; y < c.side(); ++y) {
    const double d = r2 - (y - s.y0) * (y - s.y0);
    if (d < 0) continue;
    c.plot(s.x0 + std::sqrt(d), y);
    c.plot(s.x0 - std::sqrt(d), y);
  }
}

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};

}  // namespace

Raster rasterize(const SolutionMatrix& matrix, const ImageSpec& spec) {
  if (spec.scale < 1) throw DomainError("image scale must be at least 1");
  Canvas canvas(matrix, spec);
  for (std::uint32_t y = 0; y < matrix.side(); ++y)
    for (std::uint32_t x = y + 1; x < matrix.side(); ++x)
      if (matrix.test(y, x)) canvas.fill_cell(x, y, kForeground);
  if (spec.line_slope) draw_line(canvas, *spec.line_slope);
  if (spec.circle) draw_circle(canvas, *spec.circle);
  return canvas.take();
}

std::vector<std::uint8_t> encode_pgm(const Raster& raster) {
  const std::string header =
      "P5\n" + std::to_string(raster.width) + " " + std::to_string(raster.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), raster.pixels.begin(), raster.pixels.end());
  return out;
}

void write_pgm(const Raster& raster, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const auto bytes = encode_pgm(raster);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_png(const Raster& raster, const std::filesystem::path& path) {
  std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.c_str(), "wb"));
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng initialisation failed");
  }
  // Dark background, yellow solutions, red overlay.
  auto colour = [](std::uint8_t tone) -> std::array<png_byte, 3> {
    switch (tone) {
      case kForeground: return {253, 231, 37};
      case kOverlay: return {228, 26, 28};
      default: return {68, 1, 84};
    }
  };
  std::vector<png_byte> row(std::size_t{raster.width} * 3);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng failed writing " + path.string());
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, raster.width, raster.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::uint32_t y = 0; y < raster.height; ++y) {
    for (std::uint32_t x = 0; x < raster.width; ++x) {
      const auto c = colour(raster.at(x, y));
      std::copy(c.begin(), c.end(), row.begin() + std::ptrdiff_t{x} * 3);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

void render_matrix(const SolutionMatrix& matrix, const ImageSpec& spec, const std::filesystem::path& path) {
  const Raster raster = rasterize(matrix, spec);
  if (spec.format == ImageFormat::Png)
    write_png(raster, path);
  else
    write_pgm(raster, path);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> axis_ticks(const SolutionMatrix& matrix) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ticks;
  const std::uint32_t side = matrix.side();
  if (side == 0) return ticks;
  const std::uint32_t step = side <= 32 ? 1 : (side + 19) / 20;
  const auto primes = matrix.axis_primes();
  for (std::uint32_t i = 0; i < side; i += step) ticks.emplace_back(i, primes[i]);
  if (ticks.back().first != side - 1) ticks.emplace_back(side - 1, primes[side - 1]);
  return ticks;
}

void render_axis_legend(const SolutionMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const auto& [idx, prime] : axis_ticks(matrix)) out << idx << ':' << prime << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace epq
