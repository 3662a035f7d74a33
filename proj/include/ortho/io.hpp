#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "ortho/constructions.hpp"
#include "ortho/geometry.hpp"
#include "ortho/homology.hpp"
#include "ortho/orthology.hpp"
#include "ortho/rational.hpp"
#include "ortho/space3d.hpp"

namespace ortho {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaId = "orthology-lab/1";

inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (!j.is_string())
    throw Error(ErrorCode::ParseError, path + ": expected a rational string or integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

inline Json point2_to_json(const Point2& p) {
  return Json::array({rational_to_json(p.x), rational_to_json(p.y)});
}

inline Json point3_to_json(const Point3& p) {
  return Json::array({rational_to_json(p.x), rational_to_json(p.y), rational_to_json(p.z)});
}

// Coordinate arrays are the dimension witness: two entries for the plane,
// three for space.
inline std::size_t coordinate_dimension(const Json& j, const std::string& path) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3))
    throw Error(ErrorCode::ParseError, path + ": expected an array of 2 or 3 coordinates");
  return j.size();
}

inline Point2 point2_from_json(const Json& j, const std::string& path) {
  if (coordinate_dimension(j, path) != 2)
    throw Error(ErrorCode::ParseError, path + ": expected 2 coordinates");
  return {rational_from_json(j[0], path + "[0]"), rational_from_json(j[1], path + "[1]")};
}

inline Point3 point3_from_json(const Json& j, const std::string& path) {
  if (coordinate_dimension(j, path) != 3)
    throw Error(ErrorCode::ParseError, path + ": expected 3 coordinates");
  return {rational_from_json(j[0], path + "[0]"), rational_from_json(j[1], path + "[1]"),
          rational_from_json(j[2], path + "[2]")};
}

inline Json triangle2_to_json(const Triangle2& t) {
  Json j;
  j["A"] = point2_to_json(t.A);
  j["B"] = point2_to_json(t.B);
  j["C"] = point2_to_json(t.C);
  return j;
}

inline Json triangle3_to_json(const Triangle3& t) {
  Json j;
  j["A"] = point3_to_json(t.A);
  j["B"] = point3_to_json(t.B);
  j["C"] = point3_to_json(t.C);
  return j;
}

inline const Json& require_field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorCode::ParseError, path + ": missing field \"" + name + "\"");
  return j.at(name);
}

inline Triangle2 triangle2_from_json(const Json& j, const std::string& path) {
  Point2 a = point2_from_json(require_field(j, "A", path), path + ".A");
  Point2 b = point2_from_json(require_field(j, "B", path), path + ".B");
  Point2 c = point2_from_json(require_field(j, "C", path), path + ".C");
  try {
    return Triangle2(std::move(a), std::move(b), std::move(c));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

inline Triangle3 triangle3_from_json(const Json& j, const std::string& path) {
  Point3 a = point3_from_json(require_field(j, "A", path), path + ".A");
  Point3 b = point3_from_json(require_field(j, "B", path), path + ".B");
  Point3 c = point3_from_json(require_field(j, "C", path), path + ".C");
  try {
    return Triangle3(std::move(a), std::move(b), std::move(c));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

// A pair document holds two triangles of equal dimension plus free-form
// metadata that round-trips untouched.
struct PairDocument {
  std::variant<TrianglePair, TrianglePair3> pair;
  Json metadata;

  bool is_planar() const { return std::holds_alternative<TrianglePair>(pair); }
  const TrianglePair& planar() const { return std::get<TrianglePair>(pair); }
  const TrianglePair3& spatial() const { return std::get<TrianglePair3>(pair); }
};

inline PairDocument parse_pair_document(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "document: expected a JSON object");
  const Json& schema = require_field(j, "schema", "document");
  if (!schema.is_string() || schema.get<std::string>() != kSchemaId)
    throw Error(ErrorCode::ParseError,
                std::string("schema: expected \"") + kSchemaId + "\"");
  const Json& j1 = require_field(j, "triangle1", "document");
  const Json& j2 = require_field(j, "triangle2", "document");
  const std::size_t dim =
      coordinate_dimension(require_field(j1, "A", "triangle1"), "triangle1.A");
  const std::size_t dim2 =
      coordinate_dimension(require_field(j2, "A", "triangle2"), "triangle2.A");
  if (dim != dim2)
    throw Error(ErrorCode::ParseError, "triangle2: dimension differs from triangle1");
  std::optional<PairDocument> doc;
  if (dim == 2)
    doc = PairDocument{TrianglePair{triangle2_from_json(j1, "triangle1"),
                                    triangle2_from_json(j2, "triangle2")},
                       Json()};
  else
    doc = PairDocument{TrianglePair3{triangle3_from_json(j1, "triangle1"),
                                     triangle3_from_json(j2, "triangle2")},
                       Json()};
  if (j.contains("metadata")) doc->metadata = j.at("metadata");
  return std::move(*doc);
}

inline Json pair_document_to_json(const PairDocument& doc) {
  Json j;
  j["schema"] = kSchemaId;
  if (doc.is_planar()) {
    j["triangle1"] = triangle2_to_json(doc.planar().t1);
    j["triangle2"] = triangle2_to_json(doc.planar().t2);
  } else {
    j["triangle1"] = triangle3_to_json(doc.spatial().t1);
    j["triangle2"] = triangle3_to_json(doc.spatial().t2);
  }
  if (!doc.metadata.is_null()) j["metadata"] = doc.metadata;
  return j;
}

// Single-triangle documents serve the construction commands; a pair
// document is also accepted, contributing its first triangle.
inline Triangle2 parse_triangle_document(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "document: expected a JSON object");
  if (j.contains("triangle")) return triangle2_from_json(j.at("triangle"), "triangle");
  if (j.contains("triangle1")) return triangle2_from_json(j.at("triangle1"), "triangle1");
  throw Error(ErrorCode::ParseError, "document: missing field \"triangle\"");
}

inline Json triangle_document_to_json(const Triangle2& t) {
  Json j;
  j["schema"] = kSchemaId;
  j["triangle"] = triangle2_to_json(t);
  return j;
}

inline Json hpoint_to_json(const HPoint& p) {
  const HPoint c = p.canonical();
  Json j;
  if (c.at_infinity()) {
    j["at_infinity"] = true;
    j["direction"] = Json::array({rational_to_json(c.X), rational_to_json(c.Y)});
  } else {
    j["at_infinity"] = false;
    j["x"] = rational_to_json(c.X);
    j["y"] = rational_to_json(c.Y);
  }
  return j;
}

inline Json approx_point_to_json(const ApproxPoint& p) {
  Json j;
  j["approx"] = true;
  j["x"] = p.x;
  j["y"] = p.y;
  j["tol"] = p.tol;
  return j;
}

inline Json orthology_report_to_json(const OrthologyReport& report) {
  Json entries;
  for (const OrthologyEntry& e : report.entries) {
    Json entry;
    entry["deficit"] = rational_to_json(e.deficit);
    entry["orthologic"] = e.orthologic;
    if (e.center) entry["center"] = hpoint_to_json(*e.center);
    if (e.pencil_degenerate) entry["pencil_degenerate"] = true;
    entries[correspondence_name(e.corr)] = entry;
  }
  Json j;
  j["entries"] = entries;
  j["k_count"] = report.k_count;
  j["cyclic_count"] = report.cyclic_count;
  return j;
}

inline Json homology_report_to_json(const HomologyReport& report) {
  Json entries;
  for (const HomologyEntry& e : report.entries) {
    Json entry;
    entry["homological"] = e.homological;
    if (e.perspector) entry["perspector"] = hpoint_to_json(*e.perspector);
    if (e.degenerate) entry["degenerate"] = true;
    if (e.lines_coincide) entry["lines_coincide"] = true;
    entries[correspondence_name(e.corr)] = entry;
  }
  Json j;
  j["entries"] = entries;
  j["k_count"] = report.k_count;
  return j;
}

}  // namespace ortho
