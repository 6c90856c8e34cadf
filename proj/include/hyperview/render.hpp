#ifndef HYPERVIEW_RENDER_HPP_
#define HYPERVIEW_RENDER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperview/expand.hpp"
#include "hyperview/layout.hpp"

namespace hyperview {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// 8-bit RGB raster, black background. All drawing is integer-only
/// (Bresenham lines, integer disc test, no anti-aliasing) so output bytes
/// are identical across platforms.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB

  RasterImage() = default;
  RasterImage(int w, int h)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

  void set(int x, int y, Rgb c);
  Rgb get(int x, int y) const;
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

struct RenderStyle {
  int width = 2000;
  int height = 2000;
  int node_radius_real = 6;
  int node_radius_extra = 3;
  int stroke_max = 4;            // stroke scales by log2(1+w), clamped here
  double margin = 0.05;          // fraction of the canvas left blank
  Rgb edge_color{160, 160, 160};
  std::vector<Rgb> palette;      // cluster colors, >= 16 distinct non-black

  static std::vector<Rgb> default_palette();
};

/// Rasterizes a positioned view. Positions map affinely onto the canvas
/// minus margin, aspect preserved, using this view's own bounding box.
/// Edges draw first, then nodes as filled discs colored by cluster (extra
/// nodes smaller). A degenerate bounding box renders at the canvas center
/// with a warning on stderr. Throws if the layout misses a node of g.
RasterImage render_view(const ExpandedGraph& g, const LayoutState& layout,
                        const RenderStyle& style);

/// Fraction of pixels exactly equal to (0,0,0).
double clarity(const RasterImage& img);

/// clarity(extra) / clarity(clique); nullopt when the clique view has no
/// black pixel at all.
std::optional<double> clarity_gain(const RasterImage& extra_img, const RasterImage& clique_img);

/// Binary entropy -(c log2 c + (1-c) log2(1-c)) with H(0) = H(1) = 0.
/// Throws when c is outside [0, 1].
double entropy(double c);

/// Binary PPM (P6), 8-bit, no comments; bit-exact golden-test contract.
std::string to_ppm(const RasterImage& img);
void write_ppm(const RasterImage& img, const std::string& path);
RasterImage read_ppm(const std::string& path);

}  // namespace hyperview

#endif  // HYPERVIEW_RENDER_HPP_
