#include "toricdeg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "toricdeg/error.hpp"

namespace toricdeg::render {

namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 0.5;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Vertices in counterclockwise order around their centroid.
std::vector<std::pair<double, double>> outline(const geom::HPolytope& p) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : p.vertex_list()) pts.emplace_back(v[0].get_d(), v[1].get_d());
  double cx = 0, cy = 0;
  for (auto [x, y] : pts) {
    cx += x;
    cy += y;
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
  });
  return pts;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool empty = true;
  void add(double x, double y) {
    if (empty) {
      x0 = x1 = x;
      y0 = y1 = y;
      empty = false;
      return;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

}  // namespace

std::string svg(const std::vector<Panel>& panels) {
  if (panels.empty()) throw PreconditionError("nothing to render");
  std::vector<Box> boxes;
  std::vector<std::vector<std::pair<double, double>>> outlines;
  double height = 0;
  for (const auto& panel : panels) {
    Box box;
    std::vector<std::pair<double, double>> out;
    if (panel.polytope) {
      if (panel.polytope->dim() != 2) throw PreconditionError("rendering needs a 2-dimensional polytope");
      out = outline(*panel.polytope);
      for (auto [x, y] : out) box.add(x, y);
    }
    for (const auto* set : {&panel.points, &panel.highlighted})
      for (const auto& p : *set) {
        if (p.size() != 2) throw PreconditionError("rendering needs 2-dimensional points");
        box.add(static_cast<double>(p[0]), static_cast<double>(p[1]));
      }
    if (box.empty) box.add(0, 0);
    height = std::max(height, (box.y1 - box.y0 + 2 * kMargin) * kUnit);
    boxes.push_back(box);
    outlines.push_back(std::move(out));
  }
  double width = 0;
  for (const auto& b : boxes) width += (b.x1 - b.x0 + 2 * kMargin) * kUnit;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  double offset = 0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Box& b = boxes[i];
    auto sx = [&](double x) { return offset + (x - b.x0 + kMargin) * kUnit; };
    auto sy = [&](double y) { return height - (y - b.y0 + kMargin) * kUnit; };
    os << "<g>\n";
    if (!panels[i].title.empty())
      os << "<title>" << escape(panels[i].title) << "</title>\n";
    if (outlines[i].size() >= 2) {
      os << "<polygon points=\"";
      for (std::size_t j = 0; j < outlines[i].size(); ++j)
        os << (j ? " " : "") << fmt(sx(outlines[i][j].first)) << ',' << fmt(sy(outlines[i][j].second));
      os << "\" fill=\"#dde6f2\" stroke=\"#1f3b63\" stroke-width=\"2\"/>\n";
    } else if (outlines[i].size() == 1 && panels[i].points.empty()) {
      os << "<circle cx=\"" << fmt(sx(outlines[i][0].first)) << "\" cy=\"" << fmt(sy(outlines[i][0].second))
         << "\" r=\"4\" fill=\"black\"/>\n";
    }
    for (const auto& p : panels[i].points)
      os << "<circle cx=\"" << fmt(sx(static_cast<double>(p[0]))) << "\" cy=\"" << fmt(sy(static_cast<double>(p[1])))
         << "\" r=\"4\" fill=\"black\"/>\n";
    for (const auto& p : panels[i].highlighted)
      os << "<circle cx=\"" << fmt(sx(static_cast<double>(p[0]))) << "\" cy=\"" << fmt(sy(static_cast<double>(p[1])))
         << "\" r=\"5\" fill=\"red\"/>\n";
    os << "</g>\n";
    offset += (b.x1 - b.x0 + 2 * kMargin) * kUnit;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace toricdeg::render
