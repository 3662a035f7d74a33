#include <catch2/catch_amalgamated.hpp>

#include "ortho/constructions.hpp"
#include "ortho/homology.hpp"
#include "ortho/sampling.hpp"

using namespace ortho;

namespace {

Point2 pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

Rational rat(const char* s) { return parse_rational(s); }

const Triangle2 wide(pt(0, 0), pt(4, 0), pt(1, 3));
const TrianglePair medial_pair{wide, complementary_triangle(wide)};
const TrianglePair generic_pair{Triangle2(pt(0, 0), pt(1, 0), pt(0, 1)),
                                Triangle2(pt(2, 1), pt(5, 3), pt(5, 7))};

}  // namespace

TEST_CASE("medial pair is perspective from the centroid") {
  CHECK(is_homological(medial_pair, Correspondence::Sigma0));
  const HPoint p = homology_perspector(medial_pair, Correspondence::Sigma0);
  CHECK_FALSE(p.at_infinity());
  CHECK(p.to_point() == Point2{rat("5/3"), 1});
  CHECK(p.to_point() == centroid(wide));
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const Triangle2 t = sample_triangle2(rng, 12);
    const TrianglePair pair{t, complementary_triangle(t)};
    CHECK(homology_perspector(pair, Correspondence::Sigma0).to_point() == centroid(t));
  }
}

TEST_CASE("identity correspondence on the same triangle has no cevians") {
  const TrianglePair self{wide, wide};
  CHECK_THROWS_AS(connecting_lines(self, Correspondence::Sigma0), Error);
  try {
    is_homological(self, Correspondence::Sigma0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCevian);
  }
  // The rotated correspondence connects each vertex to the next: the sides.
  CHECK_FALSE(is_homological(self, Correspondence::Sigma1));
}

TEST_CASE("generic pair is not perspective") {
  CHECK_FALSE(is_homological(generic_pair, Correspondence::Sigma0));
  CHECK_THROWS_AS(homology_perspector(generic_pair, Correspondence::Sigma0), Error);
}

TEST_CASE("translates are perspective from infinity") {
  const Vec2 shift{3, 1};
  const Triangle2 moved(wide.A + shift, wide.B + shift, wide.C + shift);
  const TrianglePair pair{wide, moved};
  CHECK(is_homological(pair, Correspondence::Sigma0));
  const HPoint p = homology_perspector(pair, Correspondence::Sigma0);
  CHECK(p.at_infinity());
  const HPoint c = p.canonical();
  CHECK(c.X == 3);
  CHECK(c.Y == 1);
}

TEST_CASE("perspector lies on all three connecting lines") {
  Rng rng(52);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Triangle2 t1 = sample_triangle2(rng, 10);
    const TrianglePair pair = generate_bihomological(t1, rng.next());
    for (Correspondence c : {Correspondence::Sigma0, Correspondence::Sigma1}) {
      const HPoint p = homology_perspector(pair, c);
      for (const Line2& l : connecting_lines(pair, c)) CHECK(on_line(l, p));
    }
  }
}

TEST_CASE("swap symmetry of the homology relation") {
  Rng rng(68);
  for (int i = 0; i < 100; ++i) {
    const Triangle2 t1 = sample_triangle2(rng, 10);
    const Triangle2 t2 = sample_triangle2(rng, 10);
    const TrianglePair pair{t1, t2};
    for (Correspondence c : all_correspondences) {
      bool fwd, back;
      try {
        fwd = is_homological(pair, c);
        back = is_homological(swapped(pair), inverse(c));
      } catch (const Error&) {
        continue;
      }
      CHECK(fwd == back);
      if (fwd) {
        CHECK(homology_perspector(pair, c) == homology_perspector(swapped(pair), inverse(c)));
      }
    }
  }
}

TEST_CASE("bi-homological generation is deterministic and correct") {
  const TrianglePair a = generate_bihomological(wide, 7);
  const TrianglePair b = generate_bihomological(wide, 7);
  CHECK(a == b);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TrianglePair pair = generate_bihomological(wide, seed);
    CHECK(is_homological(pair, Correspondence::Sigma0));
    CHECK(is_homological(pair, Correspondence::Sigma1));
  }
}

TEST_CASE("homology spectrum flags degeneracies") {
  const TrianglePair self{wide, wide};
  const HomologyReport report = homology_spectrum(self);
  CHECK(report.entries[0].degenerate);
  CHECK_FALSE(report.entries[0].homological);
  CHECK_FALSE(report.entries[1].homological);

  const HomologyReport medial = homology_spectrum(medial_pair);
  CHECK(medial.entries[0].homological);
  REQUIRE(medial.entries[0].perspector.has_value());
  CHECK(medial.k_count >= 1);
}

TEST_CASE("orthohomology requires both properties") {
  CHECK(is_orthohomological(medial_pair, Correspondence::Sigma0));
  CHECK_FALSE(is_orthohomological(generic_pair, Correspondence::Sigma0));
  // Orthologic but not perspective: generated bi-orthologic pair, checked
  // against its own homology verdict.
  const TrianglePair pair = generate_biorthologic(wide, 3);
  REQUIRE(is_biorthologic(pair));
  CHECK(is_orthohomological(pair, Correspondence::Sigma0) ==
        is_homological(pair, Correspondence::Sigma0));
}
