#pragma once

// Solution-matrix images.
//
// Column x is the index of q, row y the index of p. With flip_vertical the
// image row is (side - 1 - y), putting small primes at the bottom-left. Each
// cell becomes a scale x scale block. Overlays only paint background pixels,
// so a pixel is foreground exactly when its matrix cell is set.
//
// PGM output is binary P5 with maxval 255: background 0, overlay 128,
// foreground 255. PNG output is RGB with the same raster.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "epq/analysis.hpp"
#include "epq/scan.hpp"

namespace epq {

enum class ImageFormat { Pgm, Png };

struct ImageSpec {
  ImageFormat format = ImageFormat::Pgm;
  unsigned scale = 1;
  std::optional<double> line_slope;  // y = slope * x in index units
  std::optional<CircleSpec> circle;  // eps is ignored when drawing
  bool flip_vertical = true;
};

enum Tone : std::uint8_t { kBackground = 0, kOverlay = 128, kForeground = 255 };

struct Raster {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, one tone per pixel

  std::uint8_t at(std::uint32_t x, std::uint32_t y) const { return pixels[std::size_t{y} * width + x]; }
};

Raster rasterize(const SolutionMatrix& matrix, const ImageSpec& spec);

std::vector<std::uint8_t> encode_pgm(const Raster& raster);
void write_pgm(const Raster& raster, const std::filesystem::path& path);
void write_png(const Raster& raster, const std::filesystem::path& path);

void render_matrix(const SolutionMatrix& matrix, const ImageSpec& spec, const std::filesystem::path& path);

/// (index, prime) pairs: every index for small axes, otherwise about 20 evenly
/// spaced ones. The last index is always present.
std::vector<std::pair<std::uint32_t, std::uint32_t>> axis_ticks(const SolutionMatrix& matrix);

/// One "index:prime" line per tick.
void render_axis_legend(const SolutionMatrix& matrix, const std::filesystem::path& path);

}  // namespace epq
