#include "subord/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "subord/error.hpp"

namespace subord {

namespace {

constexpr double kW = 480.0, kH = 360.0, kPad = 30.0;

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  void add(double x, double y) {
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  void pad() {
    if (x1 - x0 < 1e-9) x0 -= 0.5, x1 += 0.5;
    if (y1 - y0 < 1e-9) y0 -= 0.5, y1 += 0.5;
  }
  double sx(double x) const { return kPad + (x - x0) / (x1 - x0) * (kW - 2 * kPad); }
  double sy(double y) const { return kH - kPad - (y - y0) / (y1 - y0) * (kH - 2 * kPad); }
};

std::string polyline(const std::vector<std::pair<double, double>>& pts, const Box& box, const char* color) {
  std::string out = "  <polyline fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"1.5\" points=\"";
  char buf[64];
  for (const auto& [x, y] : pts) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", box.sx(x), box.sy(y));
    out += buf;
  }
  out += "\"/>\n";
  return out;
}

std::string open_svg() {
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                kW, kH, kW, kH);
  return std::string(buf) + "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text(double x, double y, const std::string& s, const char* color = "black") {
  char buf[96];
  std::snprintf(buf, sizeof buf, "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" fill=\"%s\">", x, y, color);
  return buf + s + "</text>\n";
}

}  // namespace

std::string region_svg(const TargetRegion& region, int n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "region plot needs n >= 3");
  std::vector<std::pair<double, double>> pts;
  Box box;
  box.add(1.0, 0.0);
  for (int j = 0; j <= n; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n;
    cplx w;
    try {
      w = region_boundary_point(region, th);
    } catch (const Error&) {
      continue;
    }
    if (!std::isfinite(std::abs(w)) || std::abs(w) > 10.0) continue;
    pts.emplace_back(w.real(), w.imag());
    box.add(w.real(), w.imag());
  }
  box.pad();
  std::string out = open_svg();
  out += polyline({{box.x0, 0.0}, {box.x1, 0.0}}, box, "#999");
  if (box.x0 <= 0.0 && box.x1 >= 0.0) out += polyline({{0.0, box.y0}, {0.0, box.y1}}, box, "#999");
  out += polyline(pts, box, "#1f5fa8");
  out += text(kPad, 18.0, "boundary of " + region_name(region));
  return out + "</svg>\n";
}

std::string curves_svg(const JanowskiParams& params, int n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "curve plot needs n >= 2");
  std::vector<std::pair<double, double>> k, d, g;
  Box box;
  for (double th : curve_theta_grid(n)) {
    BoundaryCurves c{};
    try {
      c = boundary_curves(th, params);
    } catch (const Error&) {
      continue;
    }
    if (!std::isfinite(c.k) || !std::isfinite(c.d) || !std::isfinite(c.g)) continue;
    k.emplace_back(th, c.k);
    d.emplace_back(th, c.d);
    g.emplace_back(th, c.g);
    box.add(th, c.k), box.add(th, c.d), box.add(th, c.g);
  }
  box.add(0.0, 0.0);
  box.pad();
  std::string out = open_svg();
  out += polyline({{box.x0, 0.0}, {box.x1, 0.0}}, box, "#999");
  out += polyline(k, box, "#1f5fa8");
  out += polyline(d, box, "#c0392b");
  out += polyline(g, box, "#27ae60");
  out += text(kPad, 18.0, "k", "#1f5fa8") + text(kPad + 20, 18.0, "d", "#c0392b") +
         text(kPad + 40, 18.0, "g", "#27ae60");
  return out + "</svg>\n";
}

}  // namespace subord
