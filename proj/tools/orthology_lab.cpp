// Command line front end: exact orthology/homology checks, classical
// constructions, seeded pair generators, the structured search driver, and
// an SVG renderer. Exit codes: 0 success, 2 invalid input or configuration,
// 1 runtime failure.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ortho/ortho.hpp"

namespace {

using ortho::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ortho::Error(ortho::ErrorCode::ParseError, "cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid, "cannot open output file: " + path);
  out << content;
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ortho::Error(ortho::ErrorCode::ParseError,
                       path + ": invalid JSON (" + e.what() + ")");
  }
}

ortho::Correspondence parse_correspondence_arg(const std::string& name) {
  const auto corr = ortho::parse_correspondence(name);
  if (!corr)
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                       "unknown correspondence \"" + name + "\"");
  return *corr;
}

ortho::Point2 parse_point_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ortho::Error(ortho::ErrorCode::ParseError,
                       "point must be written as \"x,y\", got \"" + text + "\"");
  return {ortho::parse_rational(text.substr(0, comma)),
          ortho::parse_rational(text.substr(comma + 1))};
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  const char* env = std::getenv("ORTHOLOGY_LAB_SEED");
  if (env == nullptr || *env == '\0') return cli_seed;
  std::uint64_t value = 0;
  const char* end = env + std::string_view(env).size();
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end)
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                       std::string("ORTHOLOGY_LAB_SEED must be an unsigned integer, got \"") +
                           env + "\"");
  return value;
}

std::string hpoint_text(const ortho::HPoint& p) {
  const ortho::HPoint c = p.canonical();
  if (c.at_infinity())
    return "at infinity toward (" + ortho::to_string(c.X) + ", " + ortho::to_string(c.Y) + ")";
  return "(" + ortho::to_string(c.X) + ", " + ortho::to_string(c.Y) + ")";
}

// ---- check ---------------------------------------------------------------

struct CheckOptions {
  std::string input;
  std::string correspondence = "all";
  bool homology = false;
  bool json = false;
};

Json filter_entries(Json report, const std::optional<ortho::Correspondence>& only) {
  if (!only) return report;
  const char* keep = ortho::correspondence_name(*only);
  Json entries;
  entries[keep] = report["entries"][keep];
  report["entries"] = entries;
  return report;
}

int cmd_check(const CheckOptions& opt) {
  std::optional<ortho::Correspondence> only;
  if (opt.correspondence != "all") only = parse_correspondence_arg(opt.correspondence);
  const ortho::PairDocument doc = ortho::parse_pair_document(parse_json_file(opt.input));

  if (!doc.is_planar()) {
    const ortho::TrianglePair3& pair = doc.spatial();
    Json out;
    out["schema"] = ortho::kSchemaId;
    out["dimension"] = 3;
    out["analysis"] = ortho::detail::q3_analysis({pair});
    if (opt.json) {
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "pair: spatial\n";
    std::cout << "coplanar: " << (out["analysis"]["coplanar"].get<bool>() ? "yes" : "no")
              << "\n";
    for (ortho::Correspondence c : ortho::all_correspondences) {
      const char* name = ortho::correspondence_name(c);
      if (only && *only != c) continue;
      const Json& pm = out["analysis"]["plane_meet"][name];
      std::cout << name << ": deficit "
                << out["analysis"]["deficits"][name].get<std::string>()
                << ", normal planes rank " << pm["rank"].get<int>()
                << (pm["consistent"].get<bool>() ? ", sharing a line" : ", no common point")
                << "\n";
    }
    std::cout << "cyclic deficit sum zero: "
              << (out["analysis"]["cyclic_sum_zero"].get<bool>() ? "yes" : "no") << "\n";
    return 0;
  }

  const ortho::TrianglePair& pair = doc.planar();
  const ortho::OrthologyReport orth = ortho::orthology_spectrum(pair);
  Json out;
  out["schema"] = ortho::kSchemaId;
  out["dimension"] = 2;
  out["orthology"] = filter_entries(ortho::orthology_report_to_json(orth), only);
  std::optional<ortho::HomologyReport> hom;
  if (opt.homology) {
    hom = ortho::homology_spectrum(pair);
    out["homology"] = filter_entries(ortho::homology_report_to_json(*hom), only);
  }
  if (opt.json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "pair: planar\n";
  for (const ortho::OrthologyEntry& e : orth.entries) {
    if (only && *only != e.corr) continue;
    std::cout << ortho::correspondence_name(e.corr) << ": deficit "
              << ortho::to_string(e.deficit) << ", orthologic "
              << (e.orthologic ? "yes" : "no");
    if (e.center) std::cout << ", center " << hpoint_text(*e.center);
    std::cout << "\n";
  }
  std::cout << "orthologic count: " << orth.k_count << " (cyclic " << orth.cyclic_count
            << ")\n";
  if (hom) {
    for (const ortho::HomologyEntry& e : hom->entries) {
      if (only && *only != e.corr) continue;
      std::cout << ortho::correspondence_name(e.corr) << ": ";
      if (e.degenerate) {
        std::cout << "degenerate (a vertex meets its image)\n";
        continue;
      }
      std::cout << "homological " << (e.homological ? "yes" : "no");
      if (e.perspector) std::cout << ", perspector " << hpoint_text(*e.perspector);
      std::cout << "\n";
    }
    std::cout << "homological count: " << hom->k_count << "\n";
  }
  return 0;
}

// ---- construct -------------------------------------------------------------

struct ConstructOptions {
  std::string kind;
  std::string input;
  std::string point;
};

int cmd_construct(const ConstructOptions& opt) {
  const ortho::Triangle2 t = ortho::parse_triangle_document(parse_json_file(opt.input));
  Json out;
  out["schema"] = ortho::kSchemaId;
  out["construct"] = opt.kind;
  if (opt.kind == "medial") {
    out["triangle"] = ortho::triangle2_to_json(ortho::complementary_triangle(t));
  } else if (opt.kind == "orthocenter") {
    out["point"] = ortho::point2_to_json(ortho::orthocenter(t));
  } else if (opt.kind == "circumcenter") {
    out["point"] = ortho::point2_to_json(ortho::circumcenter(t));
  } else if (opt.kind == "circumcircle") {
    const ortho::Circle c = ortho::circumcircle(t);
    out["center"] = ortho::point2_to_json(c.center);
    out["radius_squared"] = ortho::rational_to_json(c.radius_squared);
  } else if (opt.kind == "incenter") {
    out["point"] = ortho::approx_point_to_json(ortho::incenter_approx(t));
  } else if (opt.kind == "arc-midpoints") {
    for (ortho::TriangleSide side :
         {ortho::TriangleSide::BC, ortho::TriangleSide::CA, ortho::TriangleSide::AB}) {
      out[ortho::triangle_side_name(side)] =
          ortho::approx_point_to_json(ortho::arc_midpoint_approx(t, side));
    }
  } else if (opt.kind == "circumpedal") {
    if (opt.point.empty())
      throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                         "circumpedal needs --point x,y");
    const ortho::Point2 d = parse_point_arg(opt.point);
    out["point"] = ortho::point2_to_json(d);
    out["triangle"] = ortho::triangle2_to_json(ortho::circum_pedal_triangle(t, d));
  } else {
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                       "unknown construction \"" + opt.kind + "\"");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---- generate --------------------------------------------------------------

struct GenerateOptions {
  bool biorthologic = false;
  bool bihomological = false;
  std::string base;
  std::uint64_t seed = 1;
  int range = 10;
};

int cmd_generate(const GenerateOptions& opt) {
  if (opt.biorthologic == opt.bihomological)
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                       "choose exactly one of --bi-orthologic / --bi-homological");
  if (opt.range < 2)
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid, "range must be at least 2");
  const std::uint64_t seed = effective_seed(opt.seed);
  ortho::Rng rng(ortho::derive_seed(seed, 0));
  ortho::Json metadata;
  metadata["generator"] = opt.biorthologic ? "bi-orthologic" : "bi-homological";
  metadata["seed"] = seed;
  std::optional<ortho::Triangle2> base;
  if (opt.base.empty() || opt.base == "random") {
    base = ortho::sample_triangle2(rng, opt.range);
    metadata["base"] = "random";
  } else {
    base = ortho::parse_triangle_document(parse_json_file(opt.base));
    metadata["base"] = opt.base;
  }
  const ortho::TrianglePair pair =
      opt.biorthologic ? ortho::generate_biorthologic(*base, rng.next(), opt.range)
                       : ortho::generate_bihomological(*base, rng.next(), opt.range);
  const ortho::PairDocument doc{pair, metadata};
  std::cout << ortho::pair_document_to_json(doc).dump(2) << "\n";
  return 0;
}

// ---- search ----------------------------------------------------------------

struct SearchOptions {
  std::string question;
  int trials = 0;
  std::uint64_t seed = 1;
  int range = 10;
  std::string out_dir;
};

int cmd_search(const SearchOptions& opt) {
  const auto question = ortho::parse_question(opt.question);
  if (!question)
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                       "unknown question \"" + opt.question + "\"");
  ortho::TrialConfig config;
  config.question = *question;
  config.trials = opt.trials;
  config.seed = effective_seed(opt.seed);
  config.coordinate_range = opt.range;
  ortho::validate_config(config);
  const ortho::SearchResult result = ortho::run_search(config);
  std::string findings;
  for (const Json& f : result.findings) findings += f.dump() + "\n";
  const std::string summary = result.summary.dump(2) + "\n";
  const std::string findings_path = opt.out_dir + "/findings.jsonl";
  const std::string summary_path = opt.out_dir + "/summary.json";
  std::error_code dir_ec;
  std::filesystem::create_directories(opt.out_dir, dir_ec);
  if (dir_ec)
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                       "cannot create output directory: " + opt.out_dir);
  try {
    write_file(findings_path, findings);
    write_file(summary_path, summary);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(findings_path, ec);
    std::filesystem::remove(summary_path, ec);
    throw;
  }
  std::cout << summary;
  return 0;
}

// ---- render ----------------------------------------------------------------

struct RenderOptions {
  std::string input;
  std::string correspondence = "σ0";
  std::string out;
};

int cmd_render(const RenderOptions& opt) {
  const ortho::Correspondence corr = parse_correspondence_arg(opt.correspondence);
  const ortho::PairDocument doc = ortho::parse_pair_document(parse_json_file(opt.input));
  if (!doc.is_planar())
    throw ortho::Error(ortho::ErrorCode::ConfigInvalid,
                       "rendering requires a planar pair");
  write_file(opt.out, ortho::render_svg(doc.planar(), corr));
  std::cerr << "wrote " << opt.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for triangle orthology and perspectivity"};
  app.require_subcommand(1);

  // Vertex pairings: σ0 sends A,B,C to the first, second, third vertices of
  // the second triangle; σ1 to the second, third, first; σ2 to the third,
  // first, second. τ0, τ1, τ2 fix A, B, C respectively and swap the other
  // two. ASCII aliases s0..s2, t0..t2 are accepted.
  static constexpr const char* kCorrHelp =
      "one of σ0 σ1 σ2 τ0 τ1 τ2 (ASCII: s0..t2); σ0=A,B,C σ1=B,C,A σ2=C,A,B "
      "τ0=A,C,B τ1=C,B,A τ2=B,A,C as images of A,B,C";

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "measure a pair under all correspondences");
  check_cmd->add_option("input", check.input, "pair document (JSON)")->required();
  check_cmd->add_option("--correspondence", check.correspondence,
                        std::string("restrict the report to one correspondence; ") + kCorrHelp);
  check_cmd->add_flag("--homology", check.homology, "include the perspectivity report");
  CLI::Option* check_json = check_cmd->add_flag("--json", check.json, "JSON output");
  check_cmd->add_flag("--text", "plain text output (default)")->excludes(check_json);

  ConstructOptions construct;
  CLI::App* construct_cmd = app.add_subcommand("construct", "derived triangles and centers");
  construct_cmd
      ->add_option("kind", construct.kind,
                   "medial | orthocenter | circumcenter | circumcircle | incenter | "
                   "arc-midpoints | circumpedal")
      ->required();
  construct_cmd->add_option("input", construct.input, "triangle document (JSON)")->required();
  construct_cmd->add_option("--point", construct.point, "pivot point x,y for circumpedal");

  GenerateOptions generate;
  CLI::App* generate_cmd = app.add_subcommand("generate", "seeded pair families");
  generate_cmd->add_flag("--bi-orthologic", generate.biorthologic,
                         "orthologic under σ0 and σ1");
  generate_cmd->add_flag("--bi-homological", generate.bihomological,
                         "perspective under σ0 and σ1");
  generate_cmd->add_option("--base", generate.base, "triangle document for the first triangle");
  generate_cmd->add_option("--seed", generate.seed, "generation seed");
  generate_cmd->add_option("--range", generate.range, "coordinate range");

  SearchOptions search;
  CLI::App* search_cmd = app.add_subcommand("search", "seeded structured experiments");
  search_cmd->add_option("--question", search.question, "Q1 | Q2 | Q2o | Q3 | Q4")->required();
  search_cmd->add_option("--trials", search.trials, "number of trials")->required();
  search_cmd->add_option("--seed", search.seed, "base seed");
  search_cmd->add_option("--range", search.range, "coordinate range");
  search_cmd->add_option("--out", search.out_dir, "output directory")->required();

  RenderOptions render;
  CLI::App* render_cmd = app.add_subcommand("render", "SVG picture of a planar pair");
  render_cmd->add_option("input", render.input, "pair document (JSON)")->required();
  render_cmd->add_option("--correspondence", render.correspondence,
                         std::string("pencil to draw; ") + kCorrHelp);
  render_cmd->add_option("--out", render.out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check);
    if (construct_cmd->parsed()) return cmd_construct(construct);
    if (generate_cmd->parsed()) return cmd_generate(generate);
    if (search_cmd->parsed()) return cmd_search(search);
    if (render_cmd->parsed()) return cmd_render(render);
  } catch (const ortho::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ortho::ErrorCode::GenerationFailed ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
