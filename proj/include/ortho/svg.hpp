#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortho/geometry.hpp"
#include "ortho/orthology.hpp"

namespace ortho {

namespace detail {

// Fixed 4-decimal formatting keeps the output byte-stable.
inline std::string svg_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0);  // normalize -0
  return buf;
}

struct SvgBox {
  Rational x0, y0, x1, y1;

  void include(const Point2& p) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
};

// Clips a line to the box and returns the extreme pair of border hits.
inline std::optional<std::pair<Point2, Point2>> clip_line(const Line2& l, const SvgBox& box) {
  std::vector<Point2> hits;
  const auto push = [&](const Point2& p) {
    for (const Point2& q : hits)
      if (q == p) return;
    hits.push_back(p);
  };
  const auto in_x = [&](const Rational& x) { return box.x0 <= x && x <= box.x1; };
  const auto in_y = [&](const Rational& y) { return box.y0 <= y && y <= box.y1; };
  if (l.b() != 0) {
    for (const Rational& x : {box.x0, box.x1}) {
      const Rational y = -(l.a() * x + l.c()) / l.b();
      if (in_y(y)) push({x, y});
    }
  }
  if (l.a() != 0) {
    for (const Rational& y : {box.y0, box.y1}) {
      const Rational x = -(l.b() * y + l.c()) / l.a();
      if (in_x(x)) push({x, y});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  const Vec2 dir = l.direction();
  std::size_t lo = 0, hi = 0;
  const auto along = [&](const Point2& p) { return dot(p - Point2{0, 0}, dir); };
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (along(hits[i]) < along(hits[lo])) lo = i;
    if (along(hits[i]) > along(hits[hi])) hi = i;
  }
  return std::make_pair(hits[lo], hits[hi]);
}

}  // namespace detail

// Deterministic SVG picture of a pair: both triangles, the perpendicular
// pencil of the correspondence, labelled vertices, and the orthology center
// when the pencil concurs at a finite point. The y axis points up.
inline std::string render_svg(const TrianglePair& pair, Correspondence corr) {
  using detail::svg_num;

  detail::SvgBox box{pair.t1.A.x, pair.t1.A.y, pair.t1.A.x, pair.t1.A.y};
  for (const Point2& p : {pair.t1.B, pair.t1.C, pair.t2.A, pair.t2.B, pair.t2.C}) box.include(p);

  std::optional<Point2> center;
  if (is_orthologic(pair, corr)) {
    const HPoint h = orthology_center(pair, corr);
    if (!h.at_infinity()) {
      center = h.to_point();
      box.include(*center);
    }
  }

  const Rational pad_x = (box.x1 - box.x0) / 10;
  const Rational pad_y = (box.y1 - box.y0) / 10;
  box.x0 -= pad_x;
  box.x1 += pad_x;
  box.y0 -= pad_y;
  box.y1 += pad_y;

  const double width = to_double(box.x1 - box.x0);
  const double height = to_double(box.y1 - box.y0);
  const double unit = std::max(width, height);
  const double stroke = unit / 200;
  const double marker = unit / 80;
  const double font = unit / 20;

  // Flip y so the picture is upright while coordinates stay numeric.
  const auto sx = [&](const Rational& x) { return svg_num(to_double(x)); };
  const auto sy = [&](const Rational& y) { return svg_num(-to_double(y)); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += svg_num(to_double(box.x0)) + " " + svg_num(-to_double(box.y1)) + " " +
         svg_num(width) + " " + svg_num(height) + "\">\n";

  const auto polygon = [&](const Triangle2& t, const char* color) {
    out += "  <polygon points=\"";
    out += sx(t.A.x) + "," + sy(t.A.y) + " " + sx(t.B.x) + "," + sy(t.B.y) + " " + sx(t.C.x) +
           "," + sy(t.C.y);
    out += "\" fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"" + svg_num(stroke) + "\"/>\n";
  };
  polygon(pair.t1, "#1f77b4");
  polygon(pair.t2, "#2ca02c");

  for (const Line2& l : perpendicular_pencil(pair, corr)) {
    const auto seg = detail::clip_line(l, box);
    if (!seg) continue;
    out += "  <line x1=\"" + sx(seg->first.x) + "\" y1=\"" + sy(seg->first.y) + "\" x2=\"" +
           sx(seg->second.x) + "\" y2=\"" + sy(seg->second.y) +
           "\" stroke=\"#d62728\" stroke-width=\"" + svg_num(stroke) +
           "\" stroke-dasharray=\"" + svg_num(4 * stroke) + " " + svg_num(2 * stroke) +
           "\"/>\n";
  }

  const auto vertex = [&](const Point2& p, const char* label, const char* color) {
    out += "  <circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"" + svg_num(marker) +
           "\" fill=\"";
    out += color;
    out += "\"/>\n";
    out += "  <text x=\"" + svg_num(to_double(p.x) + 1.5 * marker) + "\" y=\"" +
           svg_num(-to_double(p.y) - 1.5 * marker) + "\" font-size=\"" + svg_num(font) +
           "\" fill=\"";
    out += color;
    out += "\">";
    out += label;
    out += "</text>\n";
  };
  vertex(pair.t1.A, "A", "#1f77b4");
  vertex(pair.t1.B, "B", "#1f77b4");
  vertex(pair.t1.C, "C", "#1f77b4");
  vertex(pair.t2.A, "A1", "#2ca02c");
  vertex(pair.t2.B, "B1", "#2ca02c");
  vertex(pair.t2.C, "C1", "#2ca02c");
  if (center) vertex(*center, "P", "#9467bd");

  out += "</svg>\n";
  return out;
}

}  // namespace ortho
