#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ortho/sampling.hpp"
#include "ortho/space3d.hpp"

using namespace ortho;

TEST_CASE("streams are reproducible") {
  Rng a(123456789);
  Rng b(123456789);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
  Rng c(123456790);
  bool differs = false;
  Rng a2(123456789);
  for (int i = 0; i < 10 && !differs; ++i) differs = a2.next() != c.next();
  CHECK(differs);
}

TEST_CASE("derived seeds are pure and spread out") {
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
  CHECK(seen.size() == 1000);
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}

TEST_CASE("uniform draws respect bounds and reach all values") {
  Rng rng(77);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t v = rng.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
  for (int i = 0; i < 100; ++i) CHECK(rng.uniform(5, 5) == 5);
}

TEST_CASE("sampled rationals stay in range") {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    const Rational q = sample_rational(rng, 10);
    CHECK(q >= -10);
    CHECK(q <= 10);
    CHECK(denominator(q) <= 10);
    CHECK(denominator(q) >= 1);
  }
  for (int i = 0; i < 100; ++i) CHECK(sample_nonzero_rational(rng, 3) != 0);
}

TEST_CASE("sampled triangles are never degenerate") {
  Rng rng(202);
  for (int i = 0; i < 500; ++i) {
    const Triangle2 t = sample_triangle2(rng, 5);
    CHECK_FALSE(collinear(t.A, t.B, t.C));
  }
  for (int i = 0; i < 200; ++i) {
    const Triangle3 t = sample_triangle3(rng, 5);
    CHECK_FALSE(collinear(t.A, t.B, t.C));
  }
}

TEST_CASE("sampling is deterministic end to end") {
  Rng a(31337);
  Rng b(31337);
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_triangle2(a, 9) == sample_triangle2(b, 9));
    CHECK(sample_point3(a, 9) == sample_point3(b, 9));
  }
}
