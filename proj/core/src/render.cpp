#include "polyvor/render.hpp"

#include <fstream>
#include <sstream>

#include "polyvor/error.hpp"

namespace polyvor {
namespace {

constexpr std::array<Rgb, 12> kPalette{{
    {230, 25, 75}, {60, 180, 75}, {255, 225, 25}, {0, 130, 200},
    {245, 130, 48}, {145, 30, 180}, {70, 240, 240}, {240, 50, 230},
    {210, 245, 60}, {250, 190, 190}, {0, 128, 128}, {170, 110, 40},
}};

struct Frame {
  double size;
  double margin;
  double sx(const ChartPoint& c) const { return margin + c.x * (size - 2 * margin); }
  double sy(const ChartPoint& c) const { return size - margin - c.y * (size - 2 * margin); }
};

std::string point_list(const Frame& f, const std::vector<Point3>& pts) {
  std::ostringstream out;
  for (const auto& p : pts) {
    const ChartPoint c = to_plot_chart(p);
    out << f.sx(c) << "," << f.sy(c) << " ";
  }
  return out.str();
}

}  // namespace

Rgb label_color(std::int32_t label) {
  if (label == kOutsideLabel) return {255, 255, 255};
  if (label == kTieLabel) return {0, 0, 0};
  return kPalette[static_cast<std::size_t>(label) % kPalette.size()];
}

std::string encode_ppm(const VoronoiRaster& raster) {
  std::string out = "P6\n" + std::to_string(raster.resolution) + " " + std::to_string(raster.resolution) + "\n255\n";
  out.reserve(out.size() + raster.labels.size() * 3);
  for (std::int32_t label : raster.labels) {
    const Rgb c = label_color(label);
    out.append(reinterpret_cast<const char*>(c.data()), 3);
  }
  return out;
}

void write_ppm(const VoronoiRaster& raster, const std::filesystem::path& path) {
  write_text_file(path, encode_ppm(raster));
}

std::string render_svg(const SvgOverlay& overlay, int size_px) {
  const Frame f{static_cast<double>(size_px), 20.0};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\"" << size_px
      << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const std::vector<Point3> corners{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  svg << "  <polygon points=\"" << point_list(f, corners) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  if (overlay.ball != nullptr && overlay.ball->planar()) {
    std::vector<Point3> verts;
    for (const auto& v : overlay.ball->hull_vertices) {
      const auto d = v.to_doubles();
      verts.push_back({d[0], d[1], d[2]});
    }
    svg << "  <polygon points=\"" << point_list(f, verts)
        << "\" fill=\"#3cb44b\" fill-opacity=\"0.35\" stroke=\"#2a7d35\" stroke-width=\"1.5\"/>\n";
  }
  if (!overlay.curve.empty()) {
    svg << "  <" << (overlay.closed_curve ? "polygon" : "polyline") << " points=\"" << point_list(f, overlay.curve)
        << "\" fill=\"none\" stroke=\"#0050a0\" stroke-width=\"2\"/>\n";
  }
  for (const auto& p : overlay.marked_points) {
    const ChartPoint c = to_plot_chart(p);
    svg << "  <circle cx=\"" << f.sx(c) << "\" cy=\"" << f.sy(c) << "\" r=\"4\" fill=\"#e6194b\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace polyvor
