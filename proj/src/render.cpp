#include "hyperview/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace hyperview {

void RasterImage::set(int x, int y, Rgb c) {
  if (!in_bounds(x, y)) return;
  std::size_t offset = (static_cast<std::size_t>(y) * width + x) * 3;
  pixels[offset] = c.r;
  pixels[offset + 1] = c.g;
  pixels[offset + 2] = c.b;
}

Rgb RasterImage::get(int x, int y) const {
  std::size_t offset = (static_cast<std::size_t>(y) * width + x) * 3;
  return {pixels[offset], pixels[offset + 1], pixels[offset + 2]};
}

std::vector<Rgb> RenderStyle::default_palette() {
  return {
      {230, 60, 60},   {60, 160, 230},  {90, 200, 90},   {240, 200, 60},
      {180, 90, 220},  {240, 140, 50},  {70, 220, 210},  {230, 110, 180},
      {150, 210, 60},  {110, 110, 240}, {240, 90, 110},  {60, 200, 150},
      {200, 160, 230}, {170, 130, 60},  {120, 180, 200}, {220, 220, 120},
  };
}

namespace {

void draw_disc(RasterImage& img, int cx, int cy, int radius, Rgb color) {
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy <= radius * radius) img.set(cx + dx, cy + dy, color);
    }
  }
}

// Midpoint line with a square brush of the given width.
void draw_line(RasterImage& img, int x0, int y0, int x1, int y1, int width, Rgb color) {
  int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
  int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  int lo = -(width - 1) / 2;
  int hi = width / 2;
  for (;;) {
    for (int by = lo; by <= hi; ++by) {
      for (int bx = lo; bx <= hi; ++bx) img.set(x0 + bx, y0 + by, color);
    }
    if (x0 == x1 && y0 == y1) break;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

int stroke_width(double edge_weight, int stroke_max) {
  int w = static_cast<int>(std::lround(std::log2(1.0 + edge_weight)));
  return std::clamp(w, 1, stroke_max);
}

}  // namespace

RasterImage render_view(const ExpandedGraph& g, const LayoutState& layout,
                        const RenderStyle& style) {
  if (style.width <= 0 || style.height <= 0) {
    throw std::runtime_error("render_view: canvas dimensions must be positive");
  }
  const std::vector<Rgb>& palette =
      style.palette.empty() ? RenderStyle::default_palette() : style.palette;

  auto index = layout.label_index();
  std::vector<std::size_t> slot(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    auto it = index.find(g.nodes[i].label);
    if (it == index.end()) {
      throw std::runtime_error("render_view: layout misses node \"" + g.nodes[i].label + "\"");
    }
    slot[i] = it->second;
  }

  RasterImage img(style.width, style.height);
  if (g.nodes.empty()) return img;

  double min_x = layout.x[slot[0]], max_x = min_x;
  double min_y = layout.y[slot[0]], max_y = min_y;
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    min_x = std::min(min_x, layout.x[slot[i]]);
    max_x = std::max(max_x, layout.x[slot[i]]);
    min_y = std::min(min_y, layout.y[slot[i]]);
    max_y = std::max(max_y, layout.y[slot[i]]);
  }

  double usable_w = style.width * (1.0 - 2.0 * style.margin);
  double usable_h = style.height * (1.0 - 2.0 * style.margin);
  double span_x = max_x - min_x;
  double span_y = max_y - min_y;
  double scale = 0.0;
  if (span_x <= 0.0 && span_y <= 0.0) {
    std::cerr << "render_view: degenerate bounding box, drawing at canvas center\n";
  } else {
    scale = std::min(span_x > 0.0 ? usable_w / span_x : usable_h / span_y,
                     span_y > 0.0 ? usable_h / span_y : usable_w / span_x);
  }

  // center the (aspect-preserved) drawing on the canvas
  double offset_x = (style.width - scale * span_x) / 2.0;
  double offset_y = (style.height - scale * span_y) / 2.0;
  std::vector<int> px(g.nodes.size()), py(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    px[i] = static_cast<int>(std::lround(offset_x + (layout.x[slot[i]] - min_x) * scale));
    py[i] = static_cast<int>(std::lround(offset_y + (layout.y[slot[i]] - min_y) * scale));
  }

  for (const auto& edge : g.edges) {
    draw_line(img, px[edge.a], py[edge.a], px[edge.b], py[edge.b],
              stroke_width(edge.weight, style.stroke_max), style.edge_color);
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    int radius = g.nodes[i].extra ? style.node_radius_extra : style.node_radius_real;
    int cluster = layout.cluster[slot[i]];
    Rgb color = palette[static_cast<std::size_t>(cluster) % palette.size()];
    draw_disc(img, px[i], py[i], radius, color);
  }
  return img;
}

double clarity(const RasterImage& img) {
  if (img.width <= 0 || img.height <= 0) throw std::runtime_error("clarity: empty image");
  std::size_t black = 0;
  for (std::size_t offset = 0; offset < img.pixels.size(); offset += 3) {
    if (img.pixels[offset] == 0 && img.pixels[offset + 1] == 0 && img.pixels[offset + 2] == 0) {
      ++black;
    }
  }
  return static_cast<double>(black) /
         (static_cast<double>(img.width) * static_cast<double>(img.height));
}

std::optional<double> clarity_gain(const RasterImage& extra_img, const RasterImage& clique_img) {
  if (extra_img.width != clique_img.width || extra_img.height != clique_img.height) {
    throw std::runtime_error("clarity_gain: image dimensions differ");
  }
  double clique = clarity(clique_img);
  if (clique == 0.0) return std::nullopt;
  return clarity(extra_img) / clique;
}

double entropy(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::runtime_error("entropy: clarity must lie in [0, 1]");
  }
  if (c == 0.0 || c == 1.0) return 0.0;
  return -(c * std::log2(c) + (1.0 - c) * std::log2(1.0 - c));
}

std::string to_ppm(const RasterImage& img) {
  std::ostringstream out;
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  return out.str();
}

void write_ppm(const RasterImage& img, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file.is_open()) throw std::runtime_error("cannot open image file for writing: " + path);
  std::string data = to_ppm(img);
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
}

RasterImage read_ppm(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file.is_open()) throw std::runtime_error("cannot open image file: " + path);
  std::string magic;
  int width = 0, height = 0, maxval = 0;
  file >> magic >> width >> height >> maxval;
  if (magic != "P6" || width <= 0 || height <= 0 || maxval != 255) {
    throw std::runtime_error("unsupported PPM file: " + path);
  }
  file.get();  // single whitespace after the header
  RasterImage img(width, height);
  file.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!file) throw std::runtime_error("truncated PPM file: " + path);
  return img;
}

}  // namespace hyperview
