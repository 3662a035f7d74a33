#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "ortho/geometry.hpp"
#include "ortho/linalg.hpp"
#include "ortho/sampling.hpp"

namespace ortho {

// Vertex bijection between two triangles. The cyclic three (sigma) rotate
// the target vertices; the odd three (tau) transpose a pair. Tau0 keeps the
// first slot fixed, Tau1 the second, Tau2 the third.
enum class Correspondence { Sigma0, Sigma1, Sigma2, Tau0, Tau1, Tau2 };

inline constexpr std::array<Correspondence, 6> all_correspondences = {
    Correspondence::Sigma0, Correspondence::Sigma1, Correspondence::Sigma2,
    Correspondence::Tau0,   Correspondence::Tau1,   Correspondence::Tau2,
};

// perm[i] = index of the second-triangle vertex paired with vertex i.
inline constexpr std::array<int, 3> correspondence_perm(Correspondence c) {
  switch (c) {
    case Correspondence::Sigma0: return {0, 1, 2};
    case Correspondence::Sigma1: return {1, 2, 0};
    case Correspondence::Sigma2: return {2, 0, 1};
    case Correspondence::Tau0: return {0, 2, 1};
    case Correspondence::Tau1: return {2, 1, 0};
    case Correspondence::Tau2: return {1, 0, 2};
  }
  return {0, 1, 2};
}

inline constexpr bool is_cyclic(Correspondence c) {
  return c == Correspondence::Sigma0 || c == Correspondence::Sigma1 ||
         c == Correspondence::Sigma2;
}

inline constexpr Correspondence inverse(Correspondence c) {
  switch (c) {
    case Correspondence::Sigma1: return Correspondence::Sigma2;
    case Correspondence::Sigma2: return Correspondence::Sigma1;
    default: return c;
  }
}

inline const char* correspondence_name(Correspondence c) {
  switch (c) {
    case Correspondence::Sigma0: return "σ0";
    case Correspondence::Sigma1: return "σ1";
    case Correspondence::Sigma2: return "σ2";
    case Correspondence::Tau0: return "τ0";
    case Correspondence::Tau1: return "τ1";
    case Correspondence::Tau2: return "τ2";
  }
  return "?";
}

inline std::optional<Correspondence> parse_correspondence(std::string_view s) {
  const auto match = [&](std::string_view greek, std::string_view latin, std::string_view word) {
    return s == greek || s == latin || s == word;
  };
  if (match("σ0", "s0", "sigma0")) return Correspondence::Sigma0;
  if (match("σ1", "s1", "sigma1")) return Correspondence::Sigma1;
  if (match("σ2", "s2", "sigma2")) return Correspondence::Sigma2;
  if (match("τ0", "t0", "tau0")) return Correspondence::Tau0;
  if (match("τ1", "t1", "tau1")) return Correspondence::Tau1;
  if (match("τ2", "t2", "tau2")) return Correspondence::Tau2;
  return std::nullopt;
}

struct TrianglePair {
  Triangle2 t1, t2;

  friend bool operator==(const TrianglePair&, const TrianglePair&) = default;
};

inline TrianglePair swapped(const TrianglePair& pair) { return {pair.t2, pair.t1}; }

// Images of (A, B, C) in the second triangle under the correspondence.
inline std::array<Point2, 3> images(const Triangle2& t2, Correspondence corr) {
  const auto perm = correspondence_perm(corr);
  return {t2.vertex(perm[0]), t2.vertex(perm[1]), t2.vertex(perm[2])};
}

// Orthology deficit measured from m: sum over the vertices of t1 of the dot
// product with the opposite image side. Independent of m (see drift), zero
// exactly when the three perpendiculars concur.
inline Rational deficit(const TrianglePair& pair, Correspondence corr,
                        const Point2& m = Point2{0, 0}) {
  const auto img = images(pair.t2, corr);
  return dot(pair.t1.A - m, img[2] - img[1]) + dot(pair.t1.B - m, img[0] - img[2]) +
         dot(pair.t1.C - m, img[1] - img[0]);
}

inline Rational drift(const TrianglePair& pair, Correspondence corr, const Point2& m,
                      const Point2& n) {
  return deficit(pair, corr, m) - deficit(pair, corr, n);
}

inline bool is_orthologic(const TrianglePair& pair, Correspondence corr) {
  return deficit(pair, corr) == 0;
}

// Perpendiculars from A, B, C onto the image sides opposite their images.
inline std::array<Line2, 3> perpendicular_pencil(const TrianglePair& pair, Correspondence corr) {
  const auto img = images(pair.t2, corr);
  return {perpendicular_through(pair.t1.A, img[2] - img[1]),
          perpendicular_through(pair.t1.B, img[0] - img[2]),
          perpendicular_through(pair.t1.C, img[1] - img[0])};
}

inline HPoint orthology_center(const TrianglePair& pair, Correspondence corr) {
  if (!is_orthologic(pair, corr))
    throw Error(ErrorCode::NotOrthologic, "perpendiculars do not concur");
  const auto pencil = perpendicular_pencil(pair, corr);
  constexpr int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& [i, j, k] : pairs) {
    const auto hit = intersect_lines(pencil[i], pencil[j]);
    if (!hit) continue;
    if (!on_line(pencil[k], *hit))
      throw std::logic_error("zero deficit but perpendiculars do not concur");
    return *hit;
  }
  throw Error(ErrorCode::PencilDegenerate, "the three perpendiculars coincide");
}

inline Rational cyclic_deficit_sum(const TrianglePair& pair, const Point2& m = Point2{0, 0}) {
  return deficit(pair, Correspondence::Sigma0, m) + deficit(pair, Correspondence::Sigma1, m) +
         deficit(pair, Correspondence::Sigma2, m);
}

inline bool is_biorthologic(const TrianglePair& pair) {
  return is_orthologic(pair, Correspondence::Sigma0) &&
         is_orthologic(pair, Correspondence::Sigma1);
}

// With zero deficits under Sigma0 and Sigma1, the cyclic sum forces the
// Sigma2 deficit to zero as well; the check stays an honest measurement.
inline bool pantazi_verdict(const TrianglePair& pair) {
  if (!is_biorthologic(pair))
    throw Error(ErrorCode::NotBiorthologic, "pair is not orthologic under both σ0 and σ1");
  return is_orthologic(pair, Correspondence::Sigma2);
}

struct OrthologyEntry {
  Correspondence corr = Correspondence::Sigma0;
  Rational deficit;
  bool orthologic = false;
  std::optional<HPoint> center;
  bool pencil_degenerate = false;
};

struct OrthologyReport {
  std::array<OrthologyEntry, 6> entries;
  int k_count = 0;       // orthologic correspondences among all six
  int cyclic_count = 0;  // orthologic correspondences among the sigma three
};

inline OrthologyReport orthology_spectrum(const TrianglePair& pair) {
  OrthologyReport report;
  for (std::size_t i = 0; i < all_correspondences.size(); ++i) {
    OrthologyEntry& entry = report.entries[i];
    entry.corr = all_correspondences[i];
    entry.deficit = deficit(pair, entry.corr);
    entry.orthologic = entry.deficit == 0;
    if (entry.orthologic) {
      ++report.k_count;
      if (is_cyclic(entry.corr)) ++report.cyclic_count;
      try {
        entry.center = orthology_center(pair, entry.corr);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PencilDegenerate) throw;
        entry.pencil_degenerate = true;
      }
    }
  }
  return report;
}

// Deficit coefficient vectors: deficit(pair, corr) is linear in the second
// triangle's vertices, and coeffs[j] multiplies vertex j of t2.
inline std::array<Vec2, 3> deficit_coefficients(const Triangle2& t1, Correspondence corr) {
  const std::array<Vec2, 3> side = {t1.B - t1.C, t1.C - t1.A, t1.A - t1.B};
  const auto perm = correspondence_perm(corr);
  std::array<Vec2, 3> coeffs;
  for (int i = 0; i < 3; ++i) coeffs[perm[i]] = side[i];
  return coeffs;
}

// Flattened as a 6-vector over (a1.x, a1.y, b1.x, b1.y, c1.x, c1.y).
inline RatRow deficit_row(const Triangle2& t1, Correspondence corr) {
  const auto coeffs = deficit_coefficients(t1, corr);
  return {coeffs[0].dx, coeffs[0].dy, coeffs[1].dx,
          coeffs[1].dy, coeffs[2].dx, coeffs[2].dy};
}

// Given two image vertices, completes the third so that the deficits under
// corr_a and corr_b both vanish. `known` holds vertex indices of t2 in
// increasing order with their positions; the returned point is the missing
// vertex. The 2x2 system is nonsingular whenever the two correspondences
// assign different coefficient sides to the unknown vertex.
inline std::optional<Point2> solve_third_vertex(const Triangle2& t1, Correspondence corr_a,
                                                Correspondence corr_b, int unknown,
                                                const std::array<Point2, 2>& known_points,
                                                const std::array<int, 2>& known_indices) {
  const auto ca = deficit_coefficients(t1, corr_a);
  const auto cb = deficit_coefficients(t1, corr_b);
  const Rational det = cross(ca[unknown], cb[unknown]);
  if (det == 0) return std::nullopt;
  Rational rhs_a = 0, rhs_b = 0;
  for (int i = 0; i < 2; ++i) {
    const Vec2 p = known_points[i] - Point2{0, 0};
    rhs_a -= dot(ca[known_indices[i]], p);
    rhs_b -= dot(cb[known_indices[i]], p);
  }
  // Cramer on rows ca[unknown], cb[unknown].
  Rational x = (rhs_a * cb[unknown].dy - rhs_b * ca[unknown].dy) / det;
  Rational y = (ca[unknown].dx * rhs_b - cb[unknown].dx * rhs_a) / det;
  return Point2{std::move(x), std::move(y)};
}

struct GeneratedPair {
  TrianglePair pair;
  int attempts = 0;
};

// Samples two image vertices and solves for the third so the pair is
// orthologic under both correspondences. Resamples on degenerate draws.
inline GeneratedPair generate_orthologic_traced(const Triangle2& t1, Correspondence corr_a,
                                                Correspondence corr_b, std::uint64_t seed,
                                                int range = 12) {
  if (corr_a == corr_b)
    throw Error(ErrorCode::ConfigInvalid, "two distinct correspondences are required");
  Rng rng(seed);
  // Prefer solving for the last vertex; fall back when the two
  // correspondences share its coefficient.
  int unknown = 2;
  for (int v = 2; v >= 0; --v) {
    if (cross(deficit_coefficients(t1, corr_a)[v], deficit_coefficients(t1, corr_b)[v]) != 0) {
      unknown = v;
      break;
    }
  }
  const std::array<int, 2> known = unknown == 2   ? std::array<int, 2>{0, 1}
                                   : unknown == 1 ? std::array<int, 2>{0, 2}
                                                  : std::array<int, 2>{1, 2};
  for (int attempt = 1; attempt <= 64; ++attempt) {
    const Point2 p = sample_point2(rng, range);
    const Point2 q = sample_point2(rng, range);
    const auto third = solve_third_vertex(t1, corr_a, corr_b, unknown, {p, q}, known);
    if (!third) break;
    std::array<Point2, 3> v;
    v[known[0]] = p;
    v[known[1]] = q;
    v[unknown] = *third;
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2] || collinear(v[0], v[1], v[2])) continue;
    TrianglePair pair{t1, Triangle2(v[0], v[1], v[2])};
    if (deficit(pair, corr_a) != 0 || deficit(pair, corr_b) != 0)
      throw std::logic_error("generated pair fails its defining conditions");
    return {std::move(pair), attempt};
  }
  throw Error(ErrorCode::GenerationFailed, "no valid pair after 64 attempts");
}

inline TrianglePair generate_biorthologic(const Triangle2& t1, std::uint64_t seed,
                                          int range = 12) {
  return generate_orthologic_traced(t1, Correspondence::Sigma0, Correspondence::Sigma1, seed,
                                    range)
      .pair;
}

}  // namespace ortho
