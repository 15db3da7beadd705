#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "polyvor/ball.hpp"
#include "polyvor/voronoi.hpp"

namespace polyvor {

using Rgb = std::array<std::uint8_t, 3>;

/// Color of a raster label: white outside the simplex, black for ties,
/// otherwise a fixed palette entry chosen by label.
Rgb label_color(std::int32_t label);

/// Binary PPM (P6), 8-bit RGB, one pixel per raster cell.
std::string encode_ppm(const VoronoiRaster& raster);
void write_ppm(const VoronoiRaster& raster, const std::filesystem::path& path);

struct SvgOverlay {
  std::vector<Point3> curve;           ///< drawn as a polyline
  std::vector<Point3> marked_points;   ///< e.g. predicted tangency points
  const PolyBall* ball = nullptr;      ///< drawn as a filled polygon if set
  bool closed_curve = false;
};

/// SVG of the simplex triangle with the overlay drawn on top.
std::string render_svg(const SvgOverlay& overlay, int size_px = 600);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace polyvor
