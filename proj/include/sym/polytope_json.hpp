#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sym/errors.hpp"
#include "sym/polytope.hpp"
#include "sym/scalar.hpp"

namespace sym {

// Polytope file format:
//   {"dim": n, "vertices": [["x", ...], ...]}
// or
//   {"dim": n, "halfspaces": [{"a": ["x", ...], "rho": "r"}, ...]}
// Scalars are strings: decimal literals or "p/q" rationals. Numeric JSON
// values are accepted on input for convenience.

namespace detail {

template <typename S>
S scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_scalar<S>(j.get<std::string>());
  if (j.is_number_integer()) return S(j.get<long long>());
  if (j.is_number_float()) return parse_scalar<S>(format_scalar(j.get<double>()));
  throw IoError("expected a scalar (string or number) in polytope JSON");
}

template <typename S>
Vec<S> vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw IoError("expected an array of scalars in polytope JSON");
  Vec<S> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json<S>(x));
  return v;
}

template <typename S>
nlohmann::json vector_to_json(const Vec<S>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(format_scalar(x));
  return arr;
}

}  // namespace detail

template <typename S>
nlohmann::json polytope_to_json(const Polytope<S>& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) verts.push_back(detail::vector_to_json(v));
  j["vertices"] = std::move(verts);
  return j;
}

template <typename S>
nlohmann::json polytope_to_json_hrep(const Polytope<S>& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : p.halfspaces()) {
    nlohmann::json entry;
    entry["a"] = detail::vector_to_json(h.normal);
    entry["rho"] = format_scalar(h.offset);
    hs.push_back(std::move(entry));
  }
  j["halfspaces"] = std::move(hs);
  return j;
}

template <typename S>
Polytope<S> polytope_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim"))
    throw IoError("polytope JSON must be an object with a \"dim\" field");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (j.contains("vertices")) {
    std::vector<Vec<S>> pts;
    for (const auto& row : j.at("vertices")) pts.push_back(detail::vector_from_json<S>(row));
    for (const auto& p : pts)
      if (p.size() != dim) throw IoError("vertex length disagrees with \"dim\"");
    return make_from_vrep(pts);
  }
  if (j.contains("halfspaces")) {
    std::vector<Halfspace<S>> hs;
    for (const auto& entry : j.at("halfspaces")) {
      Halfspace<S> h{detail::vector_from_json<S>(entry.at("a")),
                     detail::scalar_from_json<S>(entry.at("rho"))};
      if (h.normal.size() != dim) throw IoError("normal length disagrees with \"dim\"");
      hs.push_back(std::move(h));
    }
    return make_from_hrep(hs);
  }
  throw IoError("polytope JSON needs \"vertices\" or \"halfspaces\"");
}

}  // namespace sym
