#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ortho/geometry.hpp"

namespace ortho {

struct Circle {
  Point2 center;
  Rational radius_squared;
};

enum class TriangleSide { BC, CA, AB };

inline const char* triangle_side_name(TriangleSide s) {
  switch (s) {
    case TriangleSide::BC: return "BC";
    case TriangleSide::CA: return "CA";
    case TriangleSide::AB: return "AB";
  }
  return "?";
}

// Medial triangle: side midpoints, listed opposite their vertices.
inline Triangle2 complementary_triangle(const Triangle2& t) {
  return Triangle2(midpoint(t.B, t.C), midpoint(t.C, t.A), midpoint(t.A, t.B));
}

inline Line2 perpendicular_bisector(const Point2& p, const Point2& q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "bisector needs two distinct points");
  return perpendicular_through(midpoint(p, q), q - p);
}

// Altitudes from two vertices meet in a finite point; the third altitude is
// checked to pass through it exactly.
inline Point2 orthocenter(const Triangle2& t) {
  const Line2 ha = perpendicular_through(t.A, t.C - t.B);
  const Line2 hb = perpendicular_through(t.B, t.A - t.C);
  const auto hit = intersect_lines(ha, hb);
  if (!hit || hit->at_infinity())
    throw std::logic_error("altitudes of a proper triangle must meet in a finite point");
  const Point2 h = hit->to_point();
  if (!perpendicular_through(t.C, t.B - t.A).contains(h))
    throw std::logic_error("third altitude misses the orthocenter");
  return h;
}

inline Point2 circumcenter(const Triangle2& t) {
  const Line2 ab = perpendicular_bisector(t.A, t.B);
  const Line2 bc = perpendicular_bisector(t.B, t.C);
  const auto hit = intersect_lines(ab, bc);
  if (!hit || hit->at_infinity())
    throw std::logic_error("perpendicular bisectors of a proper triangle must meet");
  const Point2 o = hit->to_point();
  if (!perpendicular_bisector(t.C, t.A).contains(o))
    throw std::logic_error("third bisector misses the circumcenter");
  return o;
}

inline Circle circumcircle(const Triangle2& t) {
  Point2 o = circumcenter(t);
  Rational r2 = distance_squared(o, t.A);
  return {std::move(o), std::move(r2)};
}

inline bool on_circle(const Circle& c, const Point2& p) {
  return distance_squared(c.center, p) == c.radius_squared;
}

// Second intersection of the line through `p_on` (a point of the circle)
// and `d` with the circle. Substituting p_on + t*(d - p_on) into the circle
// equation leaves a quadratic whose root t = 0 is known, so the other root
// is exact: t = -2 (p_on - o) . (d - p_on) / |d - p_on|^2.
inline Point2 second_circle_intersection(const Circle& c, const Point2& p_on, const Point2& d) {
  if (!on_circle(c, p_on))
    throw Error(ErrorCode::PointNotOnCircle, "chord base point must lie on the circle");
  if (d == p_on)
    throw Error(ErrorCode::CoincidentPoints, "chord direction point must differ from the base");
  const Vec2 u = d - p_on;
  const Rational t = Rational(-2) * dot(p_on - c.center, u) / norm_squared(u);
  if (t == 0) throw Error(ErrorCode::TangentLine, "line is tangent to the circle at the base point");
  return p_on + t * u;
}

// Second hits of the three cevian lines through an interior point with the
// circumcircle. Distinct points on a circle are never collinear, so the
// image is always a proper triangle.
inline Triangle2 circum_pedal_triangle(const Triangle2& t, const Point2& d) {
  if (d == t.A || d == t.B || d == t.C)
    throw Error(ErrorCode::VertexPoint, "pivot point must differ from the vertices");
  const Circle c = circumcircle(t);
  if (distance_squared(c.center, d) >= c.radius_squared)
    throw Error(ErrorCode::OutsideOrOnCircle, "pivot point must lie strictly inside the circumcircle");
  return Triangle2(second_circle_intersection(c, t.A, d),
                   second_circle_intersection(c, t.B, d),
                   second_circle_intersection(c, t.C, d));
}

struct ApproxPoint {
  double x = 0;
  double y = 0;
  double tol = 0;
};

inline double distance_approx(const Point2& p, const Point2& q) {
  return std::sqrt(to_double(distance_squared(p, q)));
}

// Longest side length; tolerances of the approximate layer scale with it.
inline double diameter_approx(const Triangle2& t) {
  return std::max({distance_approx(t.A, t.B), distance_approx(t.B, t.C),
                   distance_approx(t.C, t.A)});
}

// Incenter in binary64: the side-length weighted vertex mean. Exact
// representation is impossible in general (the weights are square roots),
// hence the approximate layer.
inline ApproxPoint incenter_approx(const Triangle2& t, double tol_scale = 1e-9) {
  const double a = distance_approx(t.B, t.C);
  const double b = distance_approx(t.C, t.A);
  const double c = distance_approx(t.A, t.B);
  const double s = a + b + c;
  ApproxPoint p;
  p.x = (a * to_double(t.A.x) + b * to_double(t.B.x) + c * to_double(t.C.x)) / s;
  p.y = (a * to_double(t.A.y) + b * to_double(t.B.y) + c * to_double(t.C.y)) / s;
  p.tol = tol_scale * diameter_approx(t);
  return p;
}

// Midpoint of the arc cut off by a side, on the far side from the opposite
// vertex: the circumcircle point where the perpendicular bisector of the
// side crosses it, away from the vertex.
inline ApproxPoint arc_midpoint_approx(const Triangle2& t, TriangleSide side,
                                       double tol_scale = 1e-9) {
  const Point2* p = nullptr;
  const Point2* q = nullptr;
  const Point2* opposite = nullptr;
  switch (side) {
    case TriangleSide::BC: p = &t.B, q = &t.C, opposite = &t.A; break;
    case TriangleSide::CA: p = &t.C, q = &t.A, opposite = &t.B; break;
    case TriangleSide::AB: p = &t.A, q = &t.B, opposite = &t.C; break;
  }
  const Circle c = circumcircle(t);
  const double ox = to_double(c.center.x);
  const double oy = to_double(c.center.y);
  const double r = std::sqrt(to_double(c.radius_squared));
  double ux = to_double(q->x) - to_double(p->x);
  double uy = to_double(q->y) - to_double(p->y);
  const double len = std::hypot(ux, uy);
  // Unit normal of the side; both circle hits of the bisector are o ± r*n.
  const double nx = -uy / len;
  const double ny = ux / len;
  const auto side_value = [&](double x, double y) {
    return ux * (y - to_double(p->y)) - uy * (x - to_double(p->x));
  };
  const double sign_opposite = side_value(to_double(opposite->x), to_double(opposite->y));
  const double plus = side_value(ox + r * nx, oy + r * ny) * sign_opposite;
  const double minus = side_value(ox - r * nx, oy - r * ny) * sign_opposite;
  ApproxPoint result;
  if (plus < minus) {
    result.x = ox + r * nx;
    result.y = oy + r * ny;
  } else {
    result.x = ox - r * nx;
    result.y = oy - r * ny;
  }
  result.tol = tol_scale * diameter_approx(t);
  return result;
}

}  // namespace ortho
