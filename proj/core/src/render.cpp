#include "shamrock/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace shamrock {

namespace {

struct Point {
  int x;
  int y;
  friend bool operator==(const Point&, const Point&) = default;
};

std::array<Point, 3> corners(TriRef t) {
  if (t.orient == Orientation::Up) return {{{t.i, t.j}, {t.i + 1, t.j}, {t.i, t.j + 1}}};
  return {{{t.i + 1, t.j}, {t.i + 1, t.j + 1}, {t.i, t.j + 1}}};
}

class Canvas {
 public:
  Canvas(const Region& region, const RenderOptions& o) : opt_(o) {
    if (region.empty()) return;
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const auto& t : region.cells()) {
      for (const auto& p : corners(t)) {
        const double ex = p.x + 0.5 * p.y;
        const double ey = kH * p.y;
        lo_x = std::min(lo_x, ex);
        hi_x = std::max(hi_x, ex);
        lo_y = std::min(lo_y, ey);
        hi_y = std::max(hi_y, ey);
      }
    }
    x0_ = lo_x;
    y1_ = hi_y;
    width_ = (hi_x - lo_x) * opt_.unit + 2 * opt_.margin;
    height_ = (hi_y - lo_y) * opt_.unit + 2 * opt_.margin;
  }

  double width() const { return width_; }
  double height() const { return height_; }

  std::string path(const Point* pts, std::size_t n) const {
    std::string d;
    char buf[64];
    for (std::size_t k = 0; k < n; ++k) {
      const double px = (pts[k].x + 0.5 * pts[k].y - x0_) * opt_.unit + opt_.margin;
      const double py = (y1_ - kH * pts[k].y) * opt_.unit + opt_.margin;
      std::snprintf(buf, sizeof buf, "%s%.3f %.3f ", k ? "L" : "M", px, py);
      d += buf;
    }
    d += 'Z';
    return d;
  }

 private:
  static constexpr double kH = 0.86602540378443864676;
  RenderOptions opt_;
  double x0_ = 0, y1_ = 0, width_ = 0, height_ = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Region& region, const std::optional<Tiling>& tiling,
                       const RenderOptions& options) {
  const Canvas canvas(region, options);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(canvas.width())
     << "\" height=\"" << fmt(canvas.height()) << "\" viewBox=\"0 0 " << fmt(canvas.width())
     << ' ' << fmt(canvas.height()) << "\">\n";

  os << "<g class=\"cells\" stroke=\"#555555\" stroke-width=\"0.5\">\n";
  for (const auto& t : region.cells()) {
    const auto c = corners(t);
    os << "<path class=\"" << (t.orient == Orientation::Up ? "up" : "down") << "\" fill=\""
       << (t.orient == Orientation::Up ? "#f4f4f4" : "#dcdcdc") << "\" d=\""
       << canvas.path(c.data(), c.size()) << "\"/>\n";
  }
  os << "</g>\n";

  if (tiling) {
    static constexpr const char* kShade[3] = {"#e8c15a", "#5a8fe8", "#e86a5a"};
    std::vector<Lozenge> lozenges = tiling->lozenges;
    std::sort(lozenges.begin(), lozenges.end());
    os << "<g class=\"lozenges\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
    for (const auto& l : lozenges) {
      const auto u = corners(l.up);
      const auto d = corners(l.down);
      // Up corners not on the Down triangle, and vice versa, are opposite.
      Point pu{}, pd{};
      std::array<Point, 2> shared{};
      std::size_t ns = 0;
      for (const auto& p : u) {
        if (std::find(d.begin(), d.end(), p) != d.end()) {
          if (ns < 2) shared[ns++] = p;
        } else {
          pu = p;
        }
      }
      for (const auto& p : d) {
        if (std::find(u.begin(), u.end(), p) == u.end()) pd = p;
      }
      int kind = 0;
      if (l.down.i == l.up.i - 1) kind = 1;
      else if (l.down.j == l.up.j - 1) kind = 2;
      const Point quad[4] = {pu, shared[0], pd, shared[1]};
      os << "<path fill=\"" << kShade[kind] << "\" d=\"" << canvas.path(quad, 4) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace shamrock
