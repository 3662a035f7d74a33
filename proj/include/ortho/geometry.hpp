#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ortho/errors.hpp"
#include "ortho/rational.hpp"

namespace ortho {

struct Vec2 {
  Rational dx, dy;

  bool is_zero() const { return dx == 0 && dy == 0; }

  friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.dx + v.dx, u.dy + v.dy}; }
  friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.dx - v.dx, u.dy - v.dy}; }
  friend Vec2 operator-(const Vec2& v) { return {-v.dx, -v.dy}; }
  friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.dx, s * v.dy}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Rational dot(const Vec2& u, const Vec2& v) { return u.dx * v.dx + u.dy * v.dy; }
inline Rational cross(const Vec2& u, const Vec2& v) { return u.dx * v.dy - u.dy * v.dx; }

// Rotation by +90 degrees.
inline Vec2 perp(const Vec2& v) { return {-v.dy, v.dx}; }

inline Rational norm_squared(const Vec2& v) { return dot(v, v); }

struct Point2 {
  Rational x, y;

  friend Vec2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.dx, p.y + v.dy}; }
  friend Point2 operator-(const Point2& p, const Vec2& v) { return {p.x - v.dx, p.y - v.dy}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 midpoint(const Point2& p, const Point2& q) {
  return {(p.x + q.x) / 2, (p.y + q.y) / 2};
}

inline bool collinear(const Point2& p, const Point2& q, const Point2& r) {
  return cross(q - p, r - p) == 0;
}

inline Rational distance_squared(const Point2& p, const Point2& q) {
  return norm_squared(p - q);
}

// Line a*x + b*y + c = 0. Construction canonicalizes the coefficients to
// coprime integers whose first nonzero entry is positive, so structural
// equality coincides with equality as point sets.
class Line2 {
 public:
  static Line2 from_coefficients(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 && b == 0)
      throw Error(ErrorCode::InvalidLine, "coefficients (a, b) must not both be zero");
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Integer scale = lcm(lcm(denominator(a), denominator(b)), denominator(c));
    Integer na = numerator(a) * (scale / denominator(a));
    Integer nb = numerator(b) * (scale / denominator(b));
    Integer nc = numerator(c) * (scale / denominator(c));
    Integer g = gcd(gcd(abs(na), abs(nb)), abs(nc));
    na /= g;
    nb /= g;
    nc /= g;
    const Integer& lead = na != 0 ? na : nb;
    if (lead < 0) {
      na = -na;
      nb = -nb;
      nc = -nc;
    }
    return Line2(Rational(na), Rational(nb), Rational(nc));
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  Rational eval(const Point2& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Point2& p) const { return eval(p) == 0; }

  Vec2 normal() const { return {a_, b_}; }
  Vec2 direction() const { return {-b_, a_}; }

  friend bool operator==(const Line2&, const Line2&) = default;

 private:
  Line2(Rational a, Rational b, Rational c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Rational a_, b_, c_;
};

inline Line2 line_through(const Point2& p, const Point2& q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "two distinct points are required");
  const Vec2 d = q - p;
  return Line2::from_coefficients(-d.dy, d.dx, d.dy * p.x - d.dx * p.y);
}

// Line through p orthogonal to direction d; d becomes the normal vector.
inline Line2 perpendicular_through(const Point2& p, const Vec2& d) {
  if (d.is_zero())
    throw Error(ErrorCode::ZeroDirection, "perpendicular direction must be nonzero");
  return Line2::from_coefficients(d.dx, d.dy, -(d.dx * p.x + d.dy * p.y));
}

// Homogeneous point (X : Y : W). W == 0 encodes a direction at infinity.
struct HPoint {
  Rational X, Y, W;

  bool at_infinity() const { return W == 0; }

  Point2 to_point() const {
    if (W == 0) throw Error(ErrorCode::InvalidLine, "point at infinity has no affine image");
    return {X / W, Y / W};
  }

  Vec2 direction() const { return {X, Y}; }

  // (x, y, 1) when finite; coprime integer direction with positive first
  // nonzero entry when at infinity.
  HPoint canonical() const {
    if (W != 0) return {X / W, Y / W, 1};
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Integer scale = lcm(denominator(X), denominator(Y));
    Integer nx = numerator(X) * (scale / denominator(X));
    Integer ny = numerator(Y) * (scale / denominator(Y));
    Integer g = gcd(abs(nx), abs(ny));
    if (g == 0) return {0, 0, 0};
    nx /= g;
    ny /= g;
    const Integer& lead = nx != 0 ? nx : ny;
    if (lead < 0) {
      nx = -nx;
      ny = -ny;
    }
    return {Rational(nx), Rational(ny), 0};
  }

  // Projective equality: all 2x2 minors of the two coordinate triples vanish.
  friend bool operator==(const HPoint& p, const HPoint& q) {
    return p.X * q.W == q.X * p.W && p.Y * q.W == q.Y * p.W && p.X * q.Y == q.X * p.Y;
  }
};

inline HPoint finite_hpoint(const Point2& p) { return {p.x, p.y, 1}; }

inline bool on_line(const Line2& l, const HPoint& p) {
  return l.a() * p.X + l.b() * p.Y + l.c() * p.W == 0;
}

// Meet of two lines; nullopt when they coincide. Parallel distinct lines
// meet at infinity.
inline std::optional<HPoint> intersect_lines(const Line2& l1, const Line2& l2) {
  Rational X = l1.b() * l2.c() - l1.c() * l2.b();
  Rational Y = l1.c() * l2.a() - l1.a() * l2.c();
  Rational W = l1.a() * l2.b() - l1.b() * l2.a();
  if (X == 0 && Y == 0 && W == 0) return std::nullopt;
  return HPoint{std::move(X), std::move(Y), std::move(W)};
}

// True when the three pairwise distinct lines share a common point,
// possibly at infinity.
inline bool concurrent(const Line2& l1, const Line2& l2, const Line2& l3) {
  if (l1 == l2 || l1 == l3 || l2 == l3)
    throw Error(ErrorCode::CoincidentLines, "concurrency needs pairwise distinct lines");
  const Rational det = l1.a() * (l2.b() * l3.c() - l2.c() * l3.b()) -
                       l1.b() * (l2.a() * l3.c() - l2.c() * l3.a()) +
                       l1.c() * (l2.a() * l3.b() - l2.b() * l3.a());
  return det == 0;
}

struct Triangle2 {
  Point2 A, B, C;

  Triangle2(Point2 a, Point2 b, Point2 c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (A == B || B == C || A == C)
      throw Error(ErrorCode::DegenerateTriangle, "vertices must be pairwise distinct");
    if (collinear(A, B, C))
      throw Error(ErrorCode::DegenerateTriangle, "vertices must not be collinear");
  }

  // Bypasses validation; for exercising degenerate-input behaviour.
  static Triangle2 unchecked(Point2 a, Point2 b, Point2 c) {
    return Triangle2(unchecked_tag{}, std::move(a), std::move(b), std::move(c));
  }

  const Point2& vertex(int i) const { return i == 0 ? A : i == 1 ? B : C; }

  friend bool operator==(const Triangle2&, const Triangle2&) = default;

 private:
  struct unchecked_tag {};
  Triangle2(unchecked_tag, Point2 a, Point2 b, Point2 c)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)) {}
};

// Twice the signed area; nonzero for every validated triangle.
inline Rational doubled_area(const Triangle2& t) { return cross(t.B - t.A, t.C - t.A); }

inline Point2 centroid(const Triangle2& t) {
  return {(t.A.x + t.B.x + t.C.x) / 3, (t.A.y + t.B.y + t.C.y) / 3};
}

}  // namespace ortho
