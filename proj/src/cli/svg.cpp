#include "lietab/export.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lietab {

namespace {

std::string num(double v) {
  if (std::abs(v) < 5e-3) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void text(std::ostringstream& out, double x, double y, std::string_view label, int size = 11) {
  out << "  <text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size
      << "\" text-anchor=\"middle\">" << escape(label) << "</text>\n";
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2, std::string_view style) {
  out << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
      << "\" " << style << "/>\n";
}

void dot(std::ostringstream& out, double x, double y, bool filled) {
  out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" "
      << (filled ? "fill=\"black\"" : "fill=\"none\" stroke=\"black\"") << "/>\n";
}

constexpr double kPanel = 260.0;
constexpr double kUnit = 80.0;

struct PlanePoint {
  double x, y;
  std::string name;
};

void plane_panel(std::ostringstream& out, double left, double top, const std::string& x_axis, const std::string& y_axis,
                 std::vector<PlanePoint> points) {
  double cx = left + kPanel / 2, cy = top + kPanel / 2;
  out << "  <rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(kPanel) << "\" height=\""
      << num(kPanel) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  line(out, left + 10, cy, left + kPanel - 10, cy, "stroke=\"#888888\"");
  line(out, cx, top + kPanel - 10, cx, top + 10, "stroke=\"#888888\"");
  text(out, left + kPanel - 18, cy - 6, x_axis);
  text(out, cx + 18, top + 20, y_axis);
  if (points.empty()) return;
  std::sort(points.begin(), points.end(), [](const PlanePoint& a, const PlanePoint& b) {
    return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
  });
  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < points.size(); ++i)
    out << (i ? " " : "") << num(cx + kUnit * points[i].x) << "," << num(cy - kUnit * points[i].y);
  out << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const auto& p : points) {
    dot(out, cx + kUnit * p.x, cy - kUnit * p.y, true);
    text(out, cx + kUnit * p.x * 1.25, cy - kUnit * p.y * 1.25 + 4, p.name);
  }
}

double as_double(const Rational& r) { return r.get_d(); }

}  // namespace

std::string roots_svg(const RootTable& table) {
  const std::size_t rank = table.cartan.size();
  std::vector<std::pair<std::size_t, std::size_t>> planes;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) planes.emplace_back(i, j);
  const bool isometric = rank == 3;
  const std::size_t panels = planes.size() + (isometric ? 1 : 0);
  const std::size_t columns = std::min<std::size_t>(panels, 3);
  const std::size_t rows = (panels + columns - 1) / columns;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(columns * kPanel + 20) << "\" height=\""
      << num(rows * kPanel + 20) << "\" font-family=\"sans-serif\">\n";
  for (std::size_t p = 0; p < planes.size(); ++p) {
    auto [i, j] = planes[p];
    std::vector<PlanePoint> points;
    for (const auto& entry : table.roots) {
      const auto& c = entry.root.components;
      bool in_plane = !entry.root.is_zero();
      for (std::size_t k = 0; k < rank; ++k)
        if (k != i && k != j && c[k] != 0) in_plane = false;
      if (in_plane) points.push_back({as_double(c[i]), as_double(c[j]), entry.name});
    }
    plane_panel(out, 10 + (p % columns) * kPanel, 10 + (p / columns) * kPanel, table.cartan[i], table.cartan[j],
                std::move(points));
  }
  if (isometric) {
    // screen = P * root with
    //   P = [ cos30  -cos30   0 ]
    //       [ sin30   sin30   1 ]   (second row points up)
    const double c30 = std::sqrt(3.0) / 2, s30 = 0.5;
    const std::array<std::array<double, 3>, 2> proj{{{c30, -c30, 0.0}, {s30, s30, 1.0}}};
    std::size_t p = planes.size();
    double left = 10 + (p % columns) * kPanel, top = 10 + (p / columns) * kPanel;
    double cx = left + kPanel / 2, cy = top + kPanel / 2;
    const double unit = kUnit * 0.8;
    out << "  <rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(kPanel) << "\" height=\""
        << num(kPanel) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    for (std::size_t axis = 0; axis < 3; ++axis) {
      double ex = proj[0][axis] * unit * 1.4, ey = proj[1][axis] * unit * 1.4;
      line(out, cx, cy, cx + ex, cy - ey, "stroke=\"#888888\"");
      text(out, cx + ex * 1.12, cy - ey * 1.12 + 4, table.cartan[axis]);
    }
    for (const auto& entry : table.roots) {
      if (entry.root.is_zero()) continue;
      double x = 0, y = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        x += proj[0][k] * as_double(entry.root.components[k]);
        y += proj[1][k] * as_double(entry.root.components[k]);
      }
      dot(out, cx + unit * x, cy - unit * y, true);
      text(out, cx + unit * x, cy - unit * y - 7, entry.name, 9);
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string tower_svg(const TowerSlice& slice) {
  constexpr double kStep = 16.0;
  constexpr double kWidth = 320.0;
  std::vector<const Floor*> matter, anti;
  for (const auto& floor : slice.floors) (floor.n > 0 ? matter : anti).push_back(&floor);
  auto band = [&](const Floor& f) { return kStep * static_cast<double>(f.subshells.size()) + 12.0; };
  double above = 0, below = 0;
  for (auto* f : matter) above += band(*f);
  for (auto* f : anti) below += band(*f);
  const double mirror = above + 30.0;
  const double cx = kWidth / 2 + 40;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth + 80) << "\" height=\""
      << num(mirror + below + 30) << "\" font-family=\"sans-serif\">\n";
  text(out, cx, 16, "s = " + to_string(slice.s), 12);
  line(out, 10, mirror, kWidth + 70, mirror, "stroke=\"black\" stroke-dasharray=\"4 3\"");

  auto draw = [&](const Floor& floor, double base, int direction) {
    // subshell l sits l steps away from the floor base, so higher l forms the outer band
    text(out, 22, base + direction * band(floor) / 2 + 4, "n=" + std::to_string(floor.n), 10);
    for (const auto& sub : floor.subshells) {
      double y = base + direction * (kStep * (sub.l + 1));
      for (const auto& point : sub.points) {
        double x = cx + kStep * 1.2 * point.m;
        dot(out, x, y, point.element.has_value());
        if (point.element) text(out, x, y - 6, point.element->symbol, 7);
      }
    }
  };
  double base = mirror;
  for (auto* f : matter) {
    draw(*f, base, -1);
    base -= band(*f);
  }
  base = mirror;
  for (auto* f : anti) {
    draw(*f, base, +1);
    base += band(*f);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lietab
