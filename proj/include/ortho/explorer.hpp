#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortho/homology.hpp"
#include "ortho/io.hpp"
#include "ortho/linalg.hpp"
#include "ortho/orthology.hpp"
#include "ortho/sampling.hpp"
#include "ortho/space3d.hpp"

namespace ortho {

// Q1  how many of the six orthology conditions a pair can satisfy at once
// Q2  whether generated bi-homological pairs are homological a third way
// Q2o how the bi-homological and bi-orthologic families overlap
// Q3  spatial pairs satisfying two deficit conditions, and what the
//     perpendicularity notions do there
// Q4  spatial perspective pairs and their behaviour under the other
//     correspondences
enum class Question { Q1, Q2, Q2o, Q3, Q4 };

inline const char* question_name(Question q) {
  switch (q) {
    case Question::Q1: return "Q1";
    case Question::Q2: return "Q2";
    case Question::Q2o: return "Q2o";
    case Question::Q3: return "Q3";
    case Question::Q4: return "Q4";
  }
  return "?";
}

inline std::optional<Question> parse_question(std::string_view s) {
  if (s == "Q1" || s == "q1") return Question::Q1;
  if (s == "Q2" || s == "q2") return Question::Q2;
  if (s == "Q2o" || s == "q2o" || s == "Q2O") return Question::Q2o;
  if (s == "Q3" || s == "q3") return Question::Q3;
  if (s == "Q4" || s == "q4") return Question::Q4;
  return std::nullopt;
}

struct TrialConfig {
  Question question = Question::Q1;
  int trials = 1;
  std::uint64_t seed = 1;
  int coordinate_range = 10;
};

inline void validate_config(const TrialConfig& config) {
  if (config.trials < 1)
    throw Error(ErrorCode::ConfigInvalid, "trials must be at least 1");
  if (config.coordinate_range < 2)
    throw Error(ErrorCode::ConfigInvalid, "coordinate range must be at least 2");
}

namespace detail {

inline Json deficit_map(const TrianglePair& pair) {
  Json j;
  for (Correspondence c : all_correspondences)
    j[correspondence_name(c)] = rational_to_json(deficit(pair, c));
  return j;
}

inline Json deficit_map3(const TrianglePair3& pair) {
  Json j;
  for (Correspondence c : all_correspondences)
    j[correspondence_name(c)] = rational_to_json(deficit3(pair, c));
  return j;
}

inline Json frequency(int hits, int total) {
  return to_string(Rational(hits, total));
}

// ---- Q1: rank structure of the deficit conditions -----------------------

struct Q1Run {
  int k = 0;
  std::optional<Triangle2> witness;
  int attempts = 0;
};

struct Q1Inputs {
  Triangle2 t1;
  std::array<Q1Run, 4> runs;  // k = 3, 4, 5, 6
};

inline Json q1_analysis(const Q1Inputs& in) {
  RatMatrix sigma_rows;
  for (int i = 0; i < 3; ++i) sigma_rows.push_back(deficit_row(in.t1, all_correspondences[i]));
  const int cyclic_rank = static_cast<int>(rank_of(sigma_rows));
  if (cyclic_rank > 2)
    throw std::logic_error("cyclic deficit rows must sum to zero");
  Json runs = Json::array();
  for (const Q1Run& run : in.runs) {
    RatMatrix rows;
    Json corr_names = Json::array();
    for (int i = 0; i < run.k; ++i) {
      rows.push_back(deficit_row(in.t1, all_correspondences[i]));
      corr_names.push_back(correspondence_name(all_correspondences[i]));
    }
    const int rank = static_cast<int>(rank_of(rows));
    Json rj;
    rj["k"] = run.k;
    rj["correspondences"] = corr_names;
    rj["rank"] = rank;
    rj["nullity"] = 6 - rank;
    if (run.witness) {
      const TrianglePair pair{in.t1, *run.witness};
      Json w;
      w["deficits"] = deficit_map(pair);
      int orthologic = 0, sigma = 0;
      for (Correspondence c : all_correspondences) {
        if (deficit(pair, c) != 0) continue;
        ++orthologic;
        if (is_cyclic(c)) ++sigma;
      }
      w["orthologic_count"] = orthologic;
      w["sigma_count"] = sigma;
      rj["witness"] = w;
    } else {
      rj["witness"] = nullptr;
    }
    runs.push_back(rj);
  }
  Json analysis;
  analysis["cyclic_rank"] = cyclic_rank;
  analysis["runs"] = runs;
  return analysis;
}

inline Q1Inputs q1_sample(Rng& rng, int range) {
  Q1Inputs in{sample_triangle2(rng, range), {}};
  for (int idx = 0; idx < 4; ++idx) {
    Q1Run& run = in.runs[idx];
    run.k = 3 + idx;
    RatMatrix rows;
    for (int i = 0; i < run.k; ++i) rows.push_back(deficit_row(in.t1, all_correspondences[i]));
    const auto basis = nullspace(rows, 6);
    for (run.attempts = 1; run.attempts <= 64; ++run.attempts) {
      RatRow coords(6, Rational(0));
      for (const RatRow& v : basis) {
        const Rational c = sample_rational(rng, range);
        for (int j = 0; j < 6; ++j) coords[j] += c * v[j];
      }
      const Point2 a1{coords[0], coords[1]};
      const Point2 b1{coords[2], coords[3]};
      const Point2 c1{coords[4], coords[5]};
      if (a1 == b1 || b1 == c1 || a1 == c1 || collinear(a1, b1, c1)) continue;
      run.witness = Triangle2(a1, b1, c1);
      break;
    }
    if (!run.witness) run.attempts = 64;
  }
  return in;
}

inline Json q1_inputs_to_json(const Q1Inputs& in) {
  Json runs = Json::array();
  for (const Q1Run& run : in.runs) {
    Json rj;
    rj["k"] = run.k;
    rj["witness_t2"] = run.witness ? triangle2_to_json(*run.witness) : Json(nullptr);
    runs.push_back(rj);
  }
  Json j;
  j["t1"] = triangle2_to_json(in.t1);
  j["runs"] = runs;
  return j;
}

inline Q1Inputs q1_inputs_from_json(const Json& j) {
  const Json& runs = require_field(j, "runs", "inputs");
  if (!runs.is_array() || runs.size() != 4)
    throw Error(ErrorCode::ParseError, "inputs.runs: expected 4 entries");
  Q1Inputs in{triangle2_from_json(require_field(j, "t1", "inputs"), "inputs.t1"), {}};
  for (int idx = 0; idx < 4; ++idx) {
    const Json& rj = runs[idx];
    in.runs[idx].k = require_field(rj, "k", "inputs.runs").get<int>();
    const Json& w = require_field(rj, "witness_t2", "inputs.runs");
    if (!w.is_null())
      in.runs[idx].witness = triangle2_from_json(w, "inputs.runs.witness_t2");
  }
  return in;
}

// ---- Q2 / Q2o: generated families and their cross behaviour -------------

struct Q2Inputs {
  TrianglePair pair;
};

inline Json q2_analysis(const Q2Inputs& in) {
  const HomologyReport report = homology_spectrum(in.pair);
  Json analysis;
  analysis["homology"] = homology_report_to_json(report);
  analysis["trihomological"] =
      report.entries[2].homological && !report.entries[2].degenerate;
  return analysis;
}

struct Q2oInputs {
  TrianglePair homological_pair;
  TrianglePair orthologic_pair;
};

inline Json q2o_pair_analysis(const TrianglePair& pair) {
  const OrthologyReport orth = orthology_spectrum(pair);
  const HomologyReport hom = homology_spectrum(pair);
  int both = 0;
  for (int i = 0; i < 6; ++i)
    if (orth.entries[i].orthologic && hom.entries[i].homological) ++both;
  Json j;
  j["orthology"] = orthology_report_to_json(orth);
  j["homology"] = homology_report_to_json(hom);
  j["biorthologic"] = orth.entries[0].orthologic && orth.entries[1].orthologic;
  j["bihomological"] = hom.entries[0].homological && hom.entries[1].homological;
  j["orthohomological_count"] = both;
  return j;
}

inline Json q2o_analysis(const Q2oInputs& in) {
  Json analysis;
  analysis["homological_pair"] = q2o_pair_analysis(in.homological_pair);
  analysis["orthologic_pair"] = q2o_pair_analysis(in.orthologic_pair);
  return analysis;
}

// ---- Q3: spatial deficit conditions --------------------------------------

struct Q3Inputs {
  TrianglePair3 pair;
};

// Both deficits are linear in the third image vertex; a plane pin makes the
// system square and nonsingular.
inline Triangle3 q3_solve_t2(const Triangle3& t1, const Point3& a1, const Point3& b1,
                             const Rational& pin) {
  const Vec3 v1 = t1.B - t1.C;
  const Vec3 v2 = t1.C - t1.A;
  const Vec3 v3 = t1.A - t1.B;
  const Vec3 n = triangle_normal(t1);
  const Vec3 pa = a1 - Point3{0, 0, 0};
  const Vec3 pb = b1 - Point3{0, 0, 0};
  const RatMatrix m = {{v3.dx, v3.dy, v3.dz}, {v2.dx, v2.dy, v2.dz}, {n.dx, n.dy, n.dz}};
  const RatRow rhs = {-(dot(v1, pa) + dot(v2, pb)), -(dot(v3, pa) + dot(v1, pb)), pin};
  const auto x = solve(m, rhs);
  if (!x) throw std::logic_error("spatial completion system must be solvable");
  return Triangle3(a1, b1, Point3{(*x)[0], (*x)[1], (*x)[2]});
}

inline Json q3_analysis(const Q3Inputs& in) {
  Json analysis;
  analysis["coplanar"] = coplanar(in.pair);
  analysis["deficits"] = deficit_map3(in.pair);
  analysis["biorthologic_deficits"] = deficit3(in.pair, Correspondence::Sigma0) == 0 &&
                                      deficit3(in.pair, Correspondence::Sigma1) == 0;
  analysis["cyclic_sum_zero"] = cyclic_deficit_sum3(in.pair) == 0;
  Json plane_meet;
  Json foot_lines;
  for (Correspondence c : all_correspondences) {
    const NormalPlaneMeet meet = normal_plane_meet(in.pair, c);
    Json pm;
    pm["rank"] = meet.rank;
    pm["consistent"] = meet.consistent;
    if (meet.axis) {
      Json axis;
      axis["anchor"] = point3_to_json(meet.axis->anchor);
      axis["direction"] = Json::array({rational_to_json(meet.axis->direction.dx),
                                       rational_to_json(meet.axis->direction.dy),
                                       rational_to_json(meet.axis->direction.dz)});
      pm["axis"] = axis;
    } else {
      pm["axis"] = nullptr;
    }
    plane_meet[correspondence_name(c)] = pm;

    const auto img = images(in.pair.t2, c);
    const std::array<const Point3*, 3> at = {&in.pair.t1.A, &in.pair.t1.B, &in.pair.t1.C};
    const std::array<std::array<int, 2>, 3> opposite = {{{1, 2}, {2, 0}, {0, 1}}};
    Json fl;
    std::array<std::optional<Line3>, 3> lines;
    bool defined = true;
    for (int i = 0; i < 3 && defined; ++i) {
      try {
        lines[i] = foot_perpendicular_line(*at[i], img[opposite[i][0]], img[opposite[i][1]]);
      } catch (const Error&) {
        defined = false;
      }
    }
    fl["defined"] = defined;
    if (defined) {
      const auto common = three_lines_common_point(*lines[0], *lines[1], *lines[2]);
      fl["concurrent"] = common.has_value();
      fl["point"] = common ? point3_to_json(*common) : Json(nullptr);
    } else {
      fl["concurrent"] = false;
      fl["point"] = nullptr;
    }
    foot_lines[correspondence_name(c)] = fl;
  }
  analysis["plane_meet"] = plane_meet;
  analysis["foot_lines"] = foot_lines;
  return analysis;
}

// ---- Q4: spatial perspective pairs ---------------------------------------

struct Q4Inputs {
  TrianglePair3 pair;
  Point3 perspector;
};

inline Json q4_analysis(const Q4Inputs& in) {
  const Triangle3& t1 = in.pair.t1;
  const Triangle3& t2 = in.pair.t2;
  Json analysis;
  analysis["coplanar"] = coplanar(in.pair);
  analysis["deficits"] = deficit_map3(in.pair);
  Json per_corr;
  int concurrent_count = 0;
  for (Correspondence c : all_correspondences) {
    const auto img = images(t2, c);
    const std::array<const Point3*, 3> at = {&t1.A, &t1.B, &t1.C};
    Json cj;
    bool defined = true;
    std::array<std::optional<Line3>, 3> lines;
    for (int i = 0; i < 3 && defined; ++i) {
      if (*at[i] == img[i]) {
        defined = false;
        break;
      }
      lines[i] = Line3(*at[i], img[i] - *at[i]);
    }
    cj["defined"] = defined;
    if (defined) {
      const auto common = three_lines_common_point(*lines[0], *lines[1], *lines[2]);
      cj["concurrent"] = common.has_value();
      cj["point"] = common ? point3_to_json(*common) : Json(nullptr);
      if (common) ++concurrent_count;
    } else {
      cj["concurrent"] = false;
      cj["point"] = nullptr;
    }
    per_corr[correspondence_name(c)] = cj;
  }
  analysis["connecting_lines"] = per_corr;
  analysis["concurrent_count"] = concurrent_count;
  const Json& sigma0 = analysis["connecting_lines"]["σ0"];
  if (!sigma0["concurrent"].get<bool>() ||
      Json(point3_to_json(in.perspector)) != sigma0["point"])
    throw std::logic_error("perspective construction must concur at its perspector");
  return analysis;
}

// ---- trial drivers --------------------------------------------------------

inline Json finding_envelope(const TrialConfig& config, int trial, std::uint64_t trial_seed) {
  Json j;
  j["schema"] = kSchemaId;
  j["question"] = question_name(config.question);
  j["trial"] = trial;
  j["trial_seed"] = trial_seed;
  return j;
}

inline Json run_trial(const TrialConfig& config, int trial) {
  const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
  Rng rng(trial_seed);
  const int range = config.coordinate_range;
  Json finding = finding_envelope(config, trial, trial_seed);
  switch (config.question) {
    case Question::Q1: {
      const Q1Inputs in = q1_sample(rng, range);
      finding["inputs"] = q1_inputs_to_json(in);
      Json sampling = Json::array();
      for (const auto& run : in.runs) {
        Json s;
        s["k"] = run.k;
        s["attempts"] = run.attempts;
        sampling.push_back(s);
      }
      finding["sampling"] = sampling;
      finding["analysis"] = q1_analysis(in);
      break;
    }
    case Question::Q2: {
      const Triangle2 t1 = sample_triangle2(rng, range);
      const GeneratedPair gen = generate_bihomological_traced(t1, rng.next(), range);
      Q2Inputs in{gen.pair};
      finding["inputs"] = pair_document_to_json({in.pair, Json()});
      finding["sampling"] = Json{{"attempts", gen.attempts}};
      finding["analysis"] = q2_analysis(in);
      break;
    }
    case Question::Q2o: {
      const Triangle2 t1 = sample_triangle2(rng, range);
      const GeneratedPair hom = generate_bihomological_traced(t1, rng.next(), range);
      const GeneratedPair orth = generate_orthologic_traced(
          t1, Correspondence::Sigma0, Correspondence::Sigma1, rng.next(), range);
      Q2oInputs in{hom.pair, orth.pair};
      Json inputs;
      inputs["homological_pair"] = pair_document_to_json({in.homological_pair, Json()});
      inputs["orthologic_pair"] = pair_document_to_json({in.orthologic_pair, Json()});
      finding["inputs"] = inputs;
      finding["sampling"] =
          Json{{"homological_attempts", hom.attempts}, {"orthologic_attempts", orth.attempts}};
      finding["analysis"] = q2o_analysis(in);
      break;
    }
    case Question::Q3: {
      int attempts = 1;
      std::optional<TrianglePair3> pair;
      for (; attempts <= 64; ++attempts) {
        const Triangle3 t1 = sample_triangle3(rng, range);
        const Point3 a1 = sample_point3(rng, range);
        const Point3 b1 = sample_point3(rng, range);
        const Rational pin = sample_nonzero_rational(rng, range);
        try {
          pair = TrianglePair3{t1, q3_solve_t2(t1, a1, b1, pin)};
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DegenerateTriangle) throw;
        }
      }
      if (!pair) throw Error(ErrorCode::GenerationFailed, "no valid spatial pair after 64 attempts");
      Q3Inputs in{*pair};
      finding["inputs"] = pair_document_to_json({in.pair, Json()});
      finding["sampling"] = Json{{"attempts", attempts}};
      finding["analysis"] = q3_analysis(in);
      break;
    }
    case Question::Q4: {
      int attempts = 1;
      std::optional<Q4Inputs> in;
      Json ratios;
      for (; attempts <= 64; ++attempts) {
        const Triangle3 t1 = sample_triangle3(rng, range);
        const Point3 p = sample_point3(rng, range);
        if (p == t1.A || p == t1.B || p == t1.C) continue;
        const Rational s = sample_nonzero_rational(rng, range);
        const Rational u = sample_nonzero_rational(rng, range);
        const Rational v = sample_nonzero_rational(rng, range);
        const Point3 a1 = t1.A + s * (p - t1.A);
        const Point3 b1 = t1.B + u * (p - t1.B);
        const Point3 c1 = t1.C + v * (p - t1.C);
        if (a1 == b1 || b1 == c1 || a1 == c1 || collinear(a1, b1, c1)) continue;
        if (a1 == t1.A || b1 == t1.B || c1 == t1.C) continue;
        in = Q4Inputs{TrianglePair3{t1, Triangle3(a1, b1, c1)}, p};
        ratios = Json::array(
            {rational_to_json(s), rational_to_json(u), rational_to_json(v)});
        break;
      }
      if (!in) throw Error(ErrorCode::GenerationFailed, "no valid perspective pair after 64 attempts");
      Json inputs;
      inputs["pair"] = pair_document_to_json({in->pair, Json()});
      inputs["perspector"] = point3_to_json(in->perspector);
      finding["inputs"] = inputs;
      finding["sampling"] = Json{{"attempts", attempts}, {"ratios", ratios}};
      finding["analysis"] = q4_analysis(*in);
      break;
    }
  }
  return finding;
}

}  // namespace detail

using detail::run_trial;

// Re-derives the analysis section from the serialized inputs and compares
// exactly. Malformed documents raise ParseError; a mismatch returns false.
inline bool verify_finding(const Json& finding) {
  if (!finding.is_object()) throw Error(ErrorCode::ParseError, "finding: expected a JSON object");
  const Json& schema = require_field(finding, "schema", "finding");
  if (!schema.is_string() || schema.get<std::string>() != kSchemaId)
    throw Error(ErrorCode::ParseError, std::string("finding.schema: expected \"") + kSchemaId + "\"");
  const Json& qj = require_field(finding, "question", "finding");
  if (!qj.is_string())
    throw Error(ErrorCode::ParseError, "finding.question: expected a string");
  const auto question = parse_question(qj.get<std::string>());
  if (!question)
    throw Error(ErrorCode::ParseError,
                "finding.question: unknown question \"" + qj.get<std::string>() + "\"");
  const Json& inputs = require_field(finding, "inputs", "finding");
  const Json& analysis = require_field(finding, "analysis", "finding");
  Json recomputed;
  switch (*question) {
    case Question::Q1:
      recomputed = detail::q1_analysis(detail::q1_inputs_from_json(inputs));
      break;
    case Question::Q2: {
      const PairDocument doc = parse_pair_document(inputs);
      if (!doc.is_planar())
        throw Error(ErrorCode::ParseError, "inputs: expected a planar pair");
      recomputed = detail::q2_analysis({doc.planar()});
      break;
    }
    case Question::Q2o: {
      const PairDocument hom =
          parse_pair_document(require_field(inputs, "homological_pair", "inputs"));
      const PairDocument orth =
          parse_pair_document(require_field(inputs, "orthologic_pair", "inputs"));
      if (!hom.is_planar() || !orth.is_planar())
        throw Error(ErrorCode::ParseError, "inputs: expected planar pairs");
      recomputed = detail::q2o_analysis({hom.planar(), orth.planar()});
      break;
    }
    case Question::Q3: {
      const PairDocument doc = parse_pair_document(inputs);
      if (doc.is_planar())
        throw Error(ErrorCode::ParseError, "inputs: expected a spatial pair");
      recomputed = detail::q3_analysis({doc.spatial()});
      break;
    }
    case Question::Q4: {
      const PairDocument doc = parse_pair_document(require_field(inputs, "pair", "inputs"));
      if (doc.is_planar())
        throw Error(ErrorCode::ParseError, "inputs.pair: expected a spatial pair");
      const Point3 p =
          point3_from_json(require_field(inputs, "perspector", "inputs"), "inputs.perspector");
      try {
        recomputed = detail::q4_analysis({doc.spatial(), p});
      } catch (const std::logic_error&) {
        return false;  // perspector no longer matches the serialized pair
      }
      break;
    }
  }
  return recomputed.dump() == analysis.dump();
}

// ---- summaries -------------------------------------------------------------

namespace detail {

inline Json config_to_json(const TrialConfig& config) {
  Json j;
  j["question"] = question_name(config.question);
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["coordinate_range"] = config.coordinate_range;
  return j;
}

inline Json summarize(const TrialConfig& config, const std::vector<Json>& findings) {
  Json summary;
  summary["schema"] = kSchemaId;
  summary["question"] = question_name(config.question);
  summary["config"] = config_to_json(config);
  summary["trials"] = config.trials;
  const int n = config.trials;
  switch (config.question) {
    case Question::Q1: {
      int cyclic_rank_max = 0;
      Json per_k;
      for (int idx = 0; idx < 4; ++idx) {
        const int k = 3 + idx;
        int found = 0, at_least_k = 0, sigma3 = 0, rank_min = 7, rank_max = -1;
        for (const Json& f : findings) {
          const Json& run = f["analysis"]["runs"][idx];
          const int rank = run["rank"].get<int>();
          rank_min = std::min(rank_min, rank);
          rank_max = std::max(rank_max, rank);
          if (!run["witness"].is_null()) {
            ++found;
            if (run["witness"]["orthologic_count"].get<int>() >= k) ++at_least_k;
            if (run["witness"]["sigma_count"].get<int>() == 3) ++sigma3;
          }
        }
        Json kj;
        kj["rank_min"] = rank_min;
        kj["rank_max"] = rank_max;
        kj["witness_found"] = found;
        kj["witness_orthologic_at_least_k"] = at_least_k;
        kj["witness_fully_cyclic"] = sigma3;
        if (found > 0) kj["at_least_k_frequency"] = frequency(at_least_k, found);
        per_k[std::to_string(k)] = kj;
      }
      for (const Json& f : findings)
        cyclic_rank_max = std::max(cyclic_rank_max, f["analysis"]["cyclic_rank"].get<int>());
      summary["cyclic_rank_max"] = cyclic_rank_max;
      summary["per_k"] = per_k;
      break;
    }
    case Question::Q2: {
      int tri = 0;
      Json histogram;
      for (const Json& f : findings) {
        if (f["analysis"]["trihomological"].get<bool>()) ++tri;
        const int k = f["analysis"]["homology"]["k_count"].get<int>();
        const std::string key = std::to_string(k);
        histogram[key] = (histogram.contains(key) ? histogram[key].get<int>() : 0) + 1;
      }
      summary["trihomological"] = tri;
      summary["trihomology_frequency"] = frequency(tri, n);
      summary["k_count_histogram"] = histogram;
      break;
    }
    case Question::Q2o: {
      int hom_biortho = 0, orth_bihom = 0, hom_both2 = 0, orth_both2 = 0;
      for (const Json& f : findings) {
        const Json& h = f["analysis"]["homological_pair"];
        const Json& o = f["analysis"]["orthologic_pair"];
        if (h["biorthologic"].get<bool>()) ++hom_biortho;
        if (o["bihomological"].get<bool>()) ++orth_bihom;
        if (h["orthohomological_count"].get<int>() >= 2) ++hom_both2;
        if (o["orthohomological_count"].get<int>() >= 2) ++orth_both2;
      }
      Json h;
      h["biorthologic"] = hom_biortho;
      h["biorthologic_frequency"] = frequency(hom_biortho, n);
      h["orthohomological_at_least_2"] = hom_both2;
      summary["homological_pairs"] = h;
      Json o;
      o["bihomological"] = orth_bihom;
      o["bihomological_frequency"] = frequency(orth_bihom, n);
      o["orthohomological_at_least_2"] = orth_both2;
      summary["orthologic_pairs"] = o;
      break;
    }
    case Question::Q3: {
      int noncoplanar = 0, cyclic_zero = 0, biortho = 0;
      Json meet_consistent, foot_concurrent, foot_defined;
      for (Correspondence c : all_correspondences) {
        meet_consistent[correspondence_name(c)] = 0;
        foot_concurrent[correspondence_name(c)] = 0;
        foot_defined[correspondence_name(c)] = 0;
      }
      for (const Json& f : findings) {
        const Json& a = f["analysis"];
        if (!a["coplanar"].get<bool>()) ++noncoplanar;
        if (a["cyclic_sum_zero"].get<bool>()) ++cyclic_zero;
        if (a["biorthologic_deficits"].get<bool>()) ++biortho;
        for (Correspondence c : all_correspondences) {
          const char* name = correspondence_name(c);
          if (a["plane_meet"][name]["consistent"].get<bool>())
            meet_consistent[name] = meet_consistent[name].get<int>() + 1;
          if (a["foot_lines"][name]["defined"].get<bool>())
            foot_defined[name] = foot_defined[name].get<int>() + 1;
          if (a["foot_lines"][name]["concurrent"].get<bool>())
            foot_concurrent[name] = foot_concurrent[name].get<int>() + 1;
        }
      }
      summary["noncoplanar"] = noncoplanar;
      summary["biorthologic_deficits"] = biortho;
      summary["cyclic_sum_zero"] = cyclic_zero;
      summary["plane_meet_consistent"] = meet_consistent;
      summary["foot_lines_defined"] = foot_defined;
      summary["foot_lines_concurrent"] = foot_concurrent;
      break;
    }
    case Question::Q4: {
      int noncoplanar = 0;
      Json defined, concurrent;
      for (Correspondence c : all_correspondences) {
        defined[correspondence_name(c)] = 0;
        concurrent[correspondence_name(c)] = 0;
      }
      for (const Json& f : findings) {
        const Json& a = f["analysis"];
        if (!a["coplanar"].get<bool>()) ++noncoplanar;
        for (Correspondence c : all_correspondences) {
          const char* name = correspondence_name(c);
          if (a["connecting_lines"][name]["defined"].get<bool>())
            defined[name] = defined[name].get<int>() + 1;
          if (a["connecting_lines"][name]["concurrent"].get<bool>())
            concurrent[name] = concurrent[name].get<int>() + 1;
        }
      }
      summary["noncoplanar"] = noncoplanar;
      summary["connecting_lines_defined"] = defined;
      summary["connecting_lines_concurrent"] = concurrent;
      const int sigma1_hits = concurrent["σ1"].get<int>();
      summary["secondary_concurrency_frequency"] = frequency(sigma1_hits, n);
      break;
    }
  }
  return summary;
}

}  // namespace detail

struct SearchResult {
  std::vector<Json> findings;
  Json summary;
};

inline SearchResult run_search(const TrialConfig& config) {
  validate_config(config);
  SearchResult result;
  result.findings.reserve(static_cast<std::size_t>(config.trials));
  for (int trial = 0; trial < config.trials; ++trial)
    result.findings.push_back(run_trial(config, trial));
  result.summary = detail::summarize(config, result.findings);
  return result;
}

}  // namespace ortho
