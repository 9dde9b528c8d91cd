#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of the library's values.
 *
 * Rationals are strings "p/q" ("p" when q = 1); Gaussian rationals are
 * ["re", "im"]; index sets are 1-based. Objects use nlohmann::json's default
 * std::map storage, so keys always serialize sorted.
 */

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "cmarr/arrangement.hpp"
#include "cmarr/configuration.hpp"
#include "cmarr/error.hpp"
#include "cmarr/lattice.hpp"
#include "cmarr/maps.hpp"
#include "cmarr/polynomial.hpp"
#include "cmarr/rational.hpp"
#include "cmarr/sampler.hpp"

namespace cmarr::io {

using json = nlohmann::json;

inline json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const GaussianRational& z) { return json::array({z.re.to_string(), z.im.to_string()}); }

inline json to_json(const IndexSet& s) {
  json out = json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

inline json to_json(const IntCovector& v) {
  json out = json::array();
  for (const auto& c : v.coefficients()) out.push_back(to_json(c));
  return out;
}

inline json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

inline json to_json(const Configuration& c) {
  json pts = json::array();
  for (const auto& z : c.points()) pts.push_back(to_json(z));
  return {{"k", c.size()}, {"points", std::move(pts)}};
}

inline json to_json(const CollisionWitness& w) {
  return {{"s", w.s},
          {"left", to_json(w.left)},
          {"right", to_json(w.right)},
          {"common_value", to_json(w.common_value)}};
}

inline json to_json(const Parallelogram& p) {
  return {{"first", {p.first[0] + 1, p.first[1] + 1}},
          {"second", {p.second[0] + 1, p.second[1] + 1}}};
}

inline json to_json(const SubsetPair& p) {
  return {{"left", to_json(p.left)}, {"right", to_json(p.right)}};
}

inline json to_json(const Arrangement& a) {
  json hyperplanes = json::array();
  for (const auto& h : a.hyperplanes) {
    json gens = json::array();
    for (const auto& g : h.generators) gens.push_back(to_json(g));
    hyperplanes.push_back({{"normal", to_json(h.normal)}, {"generators", std::move(gens)}});
  }
  return {{"t", a.t},
          {"k", a.k},
          {"kind", std::string(to_string(a.kind))},
          {"hyperplane_count", a.size()},
          {"hyperplanes", std::move(hyperplanes)}};
}

inline json to_json(const IntersectionLattice& lattice) {
  json flats = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Flat& f = lattice.flat(i);
    json rows = json::array();
    for (const auto& r : f.integer_rows()) {
      json row = json::array();
      for (const auto& x : r) row.push_back(to_json(x));
      rows.push_back(std::move(row));
    }
    json hyperplanes = json::array();
    for (auto h : f.contained_hyperplanes()) hyperplanes.push_back(h + 1);
    flats.push_back({{"index", i},
                     {"codim", f.codim},
                     {"rows", std::move(rows)},
                     {"mobius", to_json(lattice.mobius(i))},
                     {"parents", lattice.parents(i)},
                     {"hyperplanes", std::move(hyperplanes)}});
  }
  return {{"ambient_dimension", lattice.ambient_dimension()},
          {"hyperplane_count", lattice.hyperplane_count()},
          {"flat_count", lattice.size()},
          {"flats_by_codim", lattice.flats_by_codim()},
          {"flats", std::move(flats)}};
}

inline json to_json(const ThetaImage& image) {
  json out = json::array();
  for (const auto& e : image) out.push_back({{"subset", to_json(e.subset)}, {"value", to_json(e.value)}});
  return out;
}

inline json to_json(const ChiImage& image) {
  json out = json::array();
  for (const auto& e : image) {
    json tuple = json::array();
    for (const auto& z : e.tuple) tuple.push_back(to_json(z));
    out.push_back({{"subset", to_json(e.subset)}, {"value", std::move(tuple)}});
  }
  return out;
}

inline json to_json(const SamplerSpec& s) {
  return {{"k", s.k},
          {"t", s.t},
          {"mode", std::string(to_string(s.mode))},
          {"seed", s.seed},
          {"coordinate_bound", s.coordinate_bound},
          {"max_rejections", s.max_rejections}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  raise(ErrorKind::parse, "expected a rational string \"p/q\", got " + j.dump());
}

inline GaussianRational gaussian_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    raise(ErrorKind::parse, "expected a point [\"re\", \"im\"], got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

/// Parses {"k": int, "points": [["p/q","r/s"], ...]}; "k" must match the
/// number of points.
inline Configuration configuration_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorKind::parse, "configuration must be a JSON object");
  if (!j.contains("points") || !j["points"].is_array())
    raise(ErrorKind::parse, "configuration needs a \"points\" array");
  std::vector<GaussianRational> pts;
  for (const auto& p : j["points"]) pts.push_back(gaussian_from_json(p));
  if (pts.empty()) raise(ErrorKind::parse, "configuration has no points");
  if (!j.contains("k") || !j["k"].is_number_unsigned())
    raise(ErrorKind::parse, "configuration needs a non-negative integer \"k\"");
  if (j["k"].get<std::uint64_t>() != pts.size())
    raise(ErrorKind::parse, "\"k\" is " + j["k"].dump() + " but " + std::to_string(pts.size()) +
                                " points were given");
  return Configuration(std::move(pts));
}

inline Configuration parse_configuration(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(ErrorKind::parse, "configuration file is not valid JSON");
  return configuration_from_json(j);
}

}  // namespace cmarr::io
