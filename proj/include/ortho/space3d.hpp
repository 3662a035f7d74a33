#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ortho/errors.hpp"
#include "ortho/linalg.hpp"
#include "ortho/orthology.hpp"
#include "ortho/rational.hpp"
#include "ortho/sampling.hpp"

namespace ortho {

struct Vec3 {
  Rational dx, dy, dz;

  bool is_zero() const { return dx == 0 && dy == 0 && dz == 0; }

  friend Vec3 operator+(const Vec3& u, const Vec3& v) {
    return {u.dx + v.dx, u.dy + v.dy, u.dz + v.dz};
  }
  friend Vec3 operator-(const Vec3& u, const Vec3& v) {
    return {u.dx - v.dx, u.dy - v.dy, u.dz - v.dz};
  }
  friend Vec3 operator-(const Vec3& v) { return {-v.dx, -v.dy, -v.dz}; }
  friend Vec3 operator*(const Rational& s, const Vec3& v) {
    return {s * v.dx, s * v.dy, s * v.dz};
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Rational dot(const Vec3& u, const Vec3& v) {
  return u.dx * v.dx + u.dy * v.dy + u.dz * v.dz;
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.dy * v.dz - u.dz * v.dy, u.dz * v.dx - u.dx * v.dz, u.dx * v.dy - u.dy * v.dx};
}

struct Point3 {
  Rational x, y, z;

  friend Vec3 operator-(const Point3& p, const Point3& q) {
    return {p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend Point3 operator+(const Point3& p, const Vec3& v) {
    return {p.x + v.dx, p.y + v.dy, p.z + v.dz};
  }
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline bool collinear(const Point3& p, const Point3& q, const Point3& r) {
  return cross(q - p, r - p).is_zero();
}

struct Triangle3 {
  Point3 A, B, C;

  Triangle3(Point3 a, Point3 b, Point3 c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (A == B || B == C || A == C)
      throw Error(ErrorCode::DegenerateTriangle, "vertices must be pairwise distinct");
    if (collinear(A, B, C))
      throw Error(ErrorCode::DegenerateTriangle, "vertices must not be collinear");
  }

  static Triangle3 unchecked(Point3 a, Point3 b, Point3 c) {
    return Triangle3(unchecked_tag{}, std::move(a), std::move(b), std::move(c));
  }

  const Point3& vertex(int i) const { return i == 0 ? A : i == 1 ? B : C; }

  friend bool operator==(const Triangle3&, const Triangle3&) = default;

 private:
  struct unchecked_tag {};
  Triangle3(unchecked_tag, Point3 a, Point3 b, Point3 c)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)) {}
};

struct TrianglePair3 {
  Triangle3 t1, t2;

  friend bool operator==(const TrianglePair3&, const TrianglePair3&) = default;
};

inline TrianglePair3 swapped(const TrianglePair3& pair) { return {pair.t2, pair.t1}; }

inline Vec3 triangle_normal(const Triangle3& t) { return cross(t.B - t.A, t.C - t.A); }

inline bool coplanar(const TrianglePair3& pair) {
  const Vec3 n = triangle_normal(pair.t1);
  return dot(pair.t2.A - pair.t1.A, n) == 0 && dot(pair.t2.B - pair.t1.A, n) == 0 &&
         dot(pair.t2.C - pair.t1.A, n) == 0;
}

inline std::array<Point3, 3> images(const Triangle3& t2, Correspondence corr) {
  const auto perm = correspondence_perm(corr);
  return {t2.vertex(perm[0]), t2.vertex(perm[1]), t2.vertex(perm[2])};
}

// The planar deficit formula transplanted to space: zero exactly when the
// three planes through the vertices normal to the image sides share their
// pencil structure, and still independent of the base point.
inline Rational deficit3(const TrianglePair3& pair, Correspondence corr,
                         const Point3& m = Point3{0, 0, 0}) {
  const auto img = images(pair.t2, corr);
  return dot(pair.t1.A - m, img[2] - img[1]) + dot(pair.t1.B - m, img[0] - img[2]) +
         dot(pair.t1.C - m, img[1] - img[0]);
}

inline Rational drift3(const TrianglePair3& pair, Correspondence corr, const Point3& m,
                       const Point3& n) {
  return deficit3(pair, corr, m) - deficit3(pair, corr, n);
}

inline Rational cyclic_deficit_sum3(const TrianglePair3& pair,
                                    const Point3& m = Point3{0, 0, 0}) {
  return deficit3(pair, Correspondence::Sigma0, m) + deficit3(pair, Correspondence::Sigma1, m) +
         deficit3(pair, Correspondence::Sigma2, m);
}

// Line through an anchor with a nonzero direction.
struct Line3 {
  Point3 anchor;
  Vec3 direction;

  Line3(Point3 a, Vec3 d) : anchor(std::move(a)), direction(std::move(d)) {
    if (direction.is_zero())
      throw Error(ErrorCode::ZeroDirection, "line direction must be nonzero");
  }
};

inline bool on_line3(const Line3& l, const Point3& p) {
  return cross(p - l.anchor, l.direction).is_zero();
}

// Planes through A, B, C normal to the image sides. The three normals sum
// to zero, so they never span space; for a real image triangle the rank is
// exactly 2, and the system is consistent precisely when the deficit
// vanishes. The planes then share a whole line rather than a point.
struct NormalPlaneMeet {
  std::optional<Point3> point;  // only if the normals were independent
  std::optional<Line3> axis;    // common line in the consistent rank-2 case
  bool consistent = false;
  int rank = 0;
};

inline NormalPlaneMeet normal_plane_meet(const TrianglePair3& pair, Correspondence corr) {
  const auto img = images(pair.t2, corr);
  const std::array<Vec3, 3> n = {img[2] - img[1], img[0] - img[2], img[1] - img[0]};
  for (const Vec3& v : n)
    if (v.is_zero())
      throw Error(ErrorCode::ZeroDirection, "an image side is degenerate");
  const std::array<const Point3*, 3> at = {&pair.t1.A, &pair.t1.B, &pair.t1.C};
  RatMatrix a;
  RatRow b;
  for (int i = 0; i < 3; ++i) {
    a.push_back({n[i].dx, n[i].dy, n[i].dz});
    b.push_back(dot(n[i], *at[i] - Point3{0, 0, 0}));
  }
  NormalPlaneMeet result;
  result.rank = static_cast<int>(rank_of(a));
  const auto x = solve(a, b);
  result.consistent = x.has_value();
  if (!x) return result;
  if (result.rank == 3) {
    result.point = Point3{(*x)[0], (*x)[1], (*x)[2]};
  } else if (result.rank == 2) {
    Vec3 dir = cross(n[0], n[1]);
    if (dir.is_zero()) dir = cross(n[0], n[2]);
    if (dir.is_zero()) dir = cross(n[1], n[2]);
    result.axis = Line3(Point3{(*x)[0], (*x)[1], (*x)[2]}, dir);
  }
  return result;
}

inline Point3 foot_of_perpendicular(const Point3& p, const Point3& a, const Point3& b) {
  if (a == b) throw Error(ErrorCode::CoincidentPoints, "segment endpoints must differ");
  const Vec3 d = b - a;
  const Rational t = dot(p - a, d) / dot(d, d);
  return a + t * d;
}

// The unique line through p that meets line(a, b) at a right angle.
inline Line3 foot_perpendicular_line(const Point3& p, const Point3& a, const Point3& b) {
  const Point3 f = foot_of_perpendicular(p, a, b);
  if (f == p) throw Error(ErrorCode::PointOnLine, "point lies on the target line");
  return Line3(p, f - p);
}

struct LineMeet3 {
  enum class Kind { Disjoint, Point, Same } kind = Kind::Disjoint;
  std::optional<Point3> point;
};

inline LineMeet3 meet_lines3(const Line3& l1, const Line3& l2) {
  const Vec3& d1 = l1.direction;
  const Vec3& d2 = l2.direction;
  if (cross(d1, d2).is_zero()) {
    if (on_line3(l1, l2.anchor)) return {LineMeet3::Kind::Same, std::nullopt};
    return {LineMeet3::Kind::Disjoint, std::nullopt};
  }
  // Solve anchor1 + s*d1 = anchor2 + t*d2 from two independent coordinate
  // rows, then verify the third.
  const Vec3 w = l2.anchor - l1.anchor;
  const std::array<Rational, 3> c1 = {d1.dx, d1.dy, d1.dz};
  const std::array<Rational, 3> c2 = {d2.dx, d2.dy, d2.dz};
  const std::array<Rational, 3> cw = {w.dx, w.dy, w.dz};
  constexpr int rows[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& [i, j] : rows) {
    const Rational det = det2(c1[i], -c2[i], c1[j], -c2[j]);
    if (det == 0) continue;
    const Rational s = det2(cw[i], -c2[i], cw[j], -c2[j]) / det;
    const Point3 p = l1.anchor + s * d1;
    if (!on_line3(l2, p)) return {LineMeet3::Kind::Disjoint, std::nullopt};
    return {LineMeet3::Kind::Point, p};
  }
  return {LineMeet3::Kind::Disjoint, std::nullopt};
}

// Unique common point of three lines, if one exists. Lines may coincide;
// the result is the single point lying on all three, or nullopt when there
// is none or infinitely many.
inline std::optional<Point3> three_lines_common_point(const Line3& l1, const Line3& l2,
                                                      const Line3& l3) {
  const LineMeet3 m12 = meet_lines3(l1, l2);
  switch (m12.kind) {
    case LineMeet3::Kind::Disjoint: return std::nullopt;
    case LineMeet3::Kind::Point:
      return on_line3(l3, *m12.point) ? m12.point : std::nullopt;
    case LineMeet3::Kind::Same: {
      const LineMeet3 m13 = meet_lines3(l1, l3);
      if (m13.kind == LineMeet3::Kind::Point) return m13.point;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline Point3 sample_point3(Rng& rng, int range) {
  Rational x = sample_rational(rng, range);
  Rational y = sample_rational(rng, range);
  Rational z = sample_rational(rng, range);
  return {std::move(x), std::move(y), std::move(z)};
}

inline Triangle3 sample_triangle3(Rng& rng, int range) {
  for (;;) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Point3 a = sample_point3(rng, range);
      Point3 b = sample_point3(rng, range);
      Point3 c = sample_point3(rng, range);
      if (a == b || b == c || a == c || collinear(a, b, c)) continue;
      return Triangle3(std::move(a), std::move(b), std::move(c));
    }
    range *= 2;
  }
}

}  // namespace ortho
