#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "ortho/geometry.hpp"
#include "ortho/linalg.hpp"
#include "ortho/orthology.hpp"

namespace ortho {

// Homogeneous coefficients of the line through two points, without
// canonicalization. Linear in each argument, which the generator relies on.
inline std::array<Rational, 3> raw_join(const Point2& p, const Point2& q) {
  return {p.y - q.y, q.x - p.x, p.x * q.y - p.y * q.x};
}

// Lines joining each vertex to its image. Undefined when a vertex equals
// its image.
inline std::array<Line2, 3> connecting_lines(const TrianglePair& pair, Correspondence corr) {
  const auto img = images(pair.t2, corr);
  const std::array<const Point2*, 3> v = {&pair.t1.A, &pair.t1.B, &pair.t1.C};
  std::array<std::optional<Line2>, 3> lines;
  for (int i = 0; i < 3; ++i) {
    if (*v[i] == img[i])
      throw Error(ErrorCode::DegenerateCevian, "a vertex coincides with its image");
    lines[i] = line_through(*v[i], img[i]);
  }
  return {*lines[0], *lines[1], *lines[2]};
}

// Perspective from a point: the three connecting lines share a common
// point, possibly at infinity.
inline bool is_homological(const TrianglePair& pair, Correspondence corr) {
  const auto lines = connecting_lines(pair, corr);
  const RatMatrix m = {{lines[0].a(), lines[0].b(), lines[0].c()},
                       {lines[1].a(), lines[1].b(), lines[1].c()},
                       {lines[2].a(), lines[2].b(), lines[2].c()}};
  return det3(m) == 0;
}

inline HPoint homology_perspector(const TrianglePair& pair, Correspondence corr) {
  if (!is_homological(pair, corr))
    throw Error(ErrorCode::NotHomological, "connecting lines do not concur");
  const auto lines = connecting_lines(pair, corr);
  constexpr int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& [i, j, k] : pairs) {
    const auto hit = intersect_lines(lines[i], lines[j]);
    if (!hit) continue;
    if (!on_line(lines[k], *hit))
      throw std::logic_error("vanishing determinant but connecting lines do not concur");
    return *hit;
  }
  throw Error(ErrorCode::PencilDegenerate, "the three connecting lines coincide");
}

inline bool is_orthohomological(const TrianglePair& pair, Correspondence corr) {
  return is_orthologic(pair, corr) && is_homological(pair, corr);
}

struct HomologyEntry {
  Correspondence corr = Correspondence::Sigma0;
  bool homological = false;
  std::optional<HPoint> perspector;
  bool degenerate = false;       // some vertex equals its image
  bool lines_coincide = false;   // concurrent, but no unique perspector
};

struct HomologyReport {
  std::array<HomologyEntry, 6> entries;
  int k_count = 0;
};

inline HomologyReport homology_spectrum(const TrianglePair& pair) {
  HomologyReport report;
  for (std::size_t i = 0; i < all_correspondences.size(); ++i) {
    HomologyEntry& entry = report.entries[i];
    entry.corr = all_correspondences[i];
    try {
      entry.homological = is_homological(pair, entry.corr);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateCevian) throw;
      entry.degenerate = true;
      continue;
    }
    if (!entry.homological) continue;
    ++report.k_count;
    try {
      entry.perspector = homology_perspector(pair, entry.corr);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PencilDegenerate) throw;
      entry.lines_coincide = true;
    }
  }
  return report;
}

// Samples two image vertices and solves for the first one so that the pair
// is perspective under both Sigma0 and Sigma1. Both concurrency
// determinants are affine in the unknown vertex once the other two are
// fixed, leaving a 2x2 linear system; singular systems and degenerate
// results are resampled.
inline GeneratedPair generate_bihomological_traced(const Triangle2& t1, std::uint64_t seed,
                                                   int range = 12) {
  Rng rng(seed);
  const Point2 zero{0, 0};
  for (int attempt = 1; attempt <= 64; ++attempt) {
    const Point2 b1 = sample_point2(rng, range);
    const Point2 c1 = sample_point2(rng, range);
    // Cevians that do not involve the unknown vertex must already be
    // defined: B-b1 and C-c1 for Sigma0, A-b1 and B-c1 for Sigma1.
    if (b1 == t1.B || c1 == t1.C || b1 == t1.A || c1 == t1.B) continue;

    // det(x, y) of each correspondence, evaluated as an affine map.
    const auto as_row = [](const std::array<Rational, 3>& a) {
      return RatRow{a[0], a[1], a[2]};
    };
    const auto det_at = [&](const std::array<Rational, 3>& fixed1,
                            const std::array<Rational, 3>& fixed2, const Point2& base,
                            const Point2& a1) {
      const RatMatrix m = {as_row(raw_join(base, a1)), as_row(fixed1), as_row(fixed2)};
      return det3(m);
    };
    const auto affine = [&](const std::array<Rational, 3>& fixed1,
                            const std::array<Rational, 3>& fixed2, const Point2& base) {
      const Rational at00 = det_at(fixed1, fixed2, base, Point2{0, 0});
      const Rational at10 = det_at(fixed1, fixed2, base, Point2{1, 0});
      const Rational at01 = det_at(fixed1, fixed2, base, Point2{0, 1});
      return std::array<Rational, 3>{at10 - at00, at01 - at00, at00};
    };
    // Sigma0 connects A-a1, B-b1, C-c1; Sigma1 connects A-b1, B-c1, C-a1.
    const auto row0 = affine(raw_join(t1.B, b1), raw_join(t1.C, c1), t1.A);
    const auto row1 = affine(raw_join(t1.A, b1), raw_join(t1.B, c1), t1.C);
    const Rational det = det2(row0[0], row0[1], row1[0], row1[1]);
    if (det == 0) continue;
    Point2 a1{(-row0[2] * row1[1] + row1[2] * row0[1]) / det,
              (-row0[0] * row1[2] + row1[0] * row0[2]) / det};
    if (a1 == t1.A || a1 == t1.C) continue;
    if (a1 == b1 || a1 == c1 || b1 == c1 || collinear(a1, b1, c1)) continue;
    TrianglePair pair{t1, Triangle2(a1, b1, c1)};
    if (!is_homological(pair, Correspondence::Sigma0) ||
        !is_homological(pair, Correspondence::Sigma1))
      throw std::logic_error("generated pair fails its defining conditions");
    return {std::move(pair), attempt};
  }
  throw Error(ErrorCode::GenerationFailed, "no valid pair after 64 attempts");
}

inline TrianglePair generate_bihomological(const Triangle2& t1, std::uint64_t seed,
                                           int range = 12) {
  return generate_bihomological_traced(t1, seed, range).pair;
}

}  // namespace ortho
