#include <catch2/catch_amalgamated.hpp>

#include "ortho/constructions.hpp"
#include "ortho/io.hpp"
#include "ortho/sampling.hpp"

using namespace ortho;

namespace {

Point2 pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

const char* medial_doc = R"({
  "schema": "orthology-lab/1",
  "triangle1": {"A": [0, 0], "B": [4, 0], "C": [1, 3]},
  "triangle2": {"A": ["5/2", "3/2"], "B": ["1/2", "3/2"], "C": [2, 0]},
  "metadata": {"label": "medial"}
})";

}  // namespace

TEST_CASE("pair documents parse both notations") {
  const PairDocument doc = parse_pair_document(Json::parse(medial_doc));
  REQUIRE(doc.is_planar());
  const TrianglePair& pair = doc.planar();
  CHECK(pair.t1 == Triangle2(pt(0, 0), pt(4, 0), pt(1, 3)));
  CHECK(pair.t2 == complementary_triangle(pair.t1));
  CHECK(doc.metadata["label"] == "medial");
}

TEST_CASE("pair documents round trip") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const PairDocument doc{TrianglePair{sample_triangle2(rng, 9), sample_triangle2(rng, 9)},
                           Json()};
    const Json j = pair_document_to_json(doc);
    const PairDocument back = parse_pair_document(j);
    CHECK(back.planar() == doc.planar());
    CHECK(pair_document_to_json(back).dump() == j.dump());
  }
  for (int i = 0; i < 50; ++i) {
    const PairDocument doc{TrianglePair3{sample_triangle3(rng, 9), sample_triangle3(rng, 9)},
                           Json()};
    const Json j = pair_document_to_json(doc);
    const PairDocument back = parse_pair_document(j);
    REQUIRE_FALSE(back.is_planar());
    CHECK(back.spatial() == doc.spatial());
  }
}

TEST_CASE("parse failures cite the offending field") {
  const auto expect_error = [](const char* text, const char* needle) {
    try {
      parse_pair_document(Json::parse(text));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      INFO(e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error(R"({"schema": "orthology-lab/1",
                   "triangle1": {"A": [0, 0], "B": [1, 0], "C": [0, 1]}})",
               "triangle2");
  expect_error(R"({"schema": "orthology-lab/1",
                   "triangle1": {"A": [0, 0], "B": [1, 0]},
                   "triangle2": {"A": [0, 0], "B": [1, 0], "C": [0, 1]}})",
               "triangle1: missing field \"C\"");
  expect_error(R"({"schema": "orthology-lab/1",
                   "triangle1": {"A": ["1/0", 0], "B": [1, 0], "C": [0, 1]},
                   "triangle2": {"A": [0, 0], "B": [1, 0], "C": [0, 1]}})",
               "zero denominator");
  expect_error(R"({"schema": "orthology-lab/1",
                   "triangle1": {"A": [0, 0, 0], "B": [1, 0, 0], "C": [0, 1, 0]},
                   "triangle2": {"A": [0, 0], "B": [1, 0], "C": [0, 1]}})",
               "dimension");
  expect_error(R"({"schema": "orthology-lab/1",
                   "triangle1": {"A": [0, 0], "B": [1, 1], "C": [2, 2]},
                   "triangle2": {"A": [0, 0], "B": [1, 0], "C": [0, 1]}})",
               "triangle1");
  expect_error(R"({"schema": "something-else",
                   "triangle1": {"A": [0, 0], "B": [1, 0], "C": [0, 1]},
                   "triangle2": {"A": [0, 0], "B": [1, 0], "C": [0, 1]}})",
               "schema");
}

TEST_CASE("triangle documents accept single and pair forms") {
  const Triangle2 t(pt(0, 0), pt(4, 0), pt(1, 3));
  const Json single = triangle_document_to_json(t);
  CHECK(parse_triangle_document(single) == t);
  CHECK(parse_triangle_document(Json::parse(medial_doc)) == t);
  CHECK_THROWS_AS(parse_triangle_document(Json::parse("{}")), Error);
}

TEST_CASE("homogeneous points serialize canonically") {
  const Json finite = hpoint_to_json(HPoint{2, 4, 2});
  CHECK(finite["at_infinity"] == false);
  CHECK(finite["x"] == "1");
  CHECK(finite["y"] == "2");
  const Json infinite = hpoint_to_json(HPoint{3, -6, 0});
  CHECK(infinite["at_infinity"] == true);
  CHECK(infinite["direction"][0] == "1");
  CHECK(infinite["direction"][1] == "-2");
}

TEST_CASE("reports serialize with one entry per correspondence") {
  const Triangle2 t(pt(0, 0), pt(4, 0), pt(1, 3));
  const TrianglePair pair{t, complementary_triangle(t)};
  const Json orth = orthology_report_to_json(orthology_spectrum(pair));
  CHECK(orth["entries"]["σ0"]["orthologic"] == true);
  CHECK(orth["entries"]["σ0"]["deficit"] == "0");
  CHECK(orth["entries"]["σ0"]["center"]["x"] == "1");
  CHECK(orth["entries"]["σ0"]["center"]["y"] == "1");
  CHECK(orth["entries"]["σ1"]["deficit"] == "-11");
  CHECK(orth["k_count"] == 1);
  const Json hom = homology_report_to_json(homology_spectrum(pair));
  CHECK(hom["entries"]["σ0"]["homological"] == true);
  CHECK(hom["entries"]["σ0"]["perspector"]["x"] == "5/3");
}
