#pragma once

/// JSON forms of modules and signed sequences.
///
///   module:   {"dim_vector": [d1, ..., dn], "arrows": {"a": [[row], ...], ...}}
///   sequence: [{"module": <module or name>, "shifted": false}, ...]
///
/// The matrix of an arrow i -> j has dim_vector[j] rows and dim_vector[i]
/// columns and acts on column vectors. Omitted arrows are zero.

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "stratify/errors.hpp"
#include "stratify/representation.hpp"
#include "stratify/tau_exceptional.hpp"
#include "stratify/universe.hpp"

namespace stratify {

using Json = nlohmann::json;

inline Json module_to_json(const Representation& m) {
  Json arrows = Json::object();
  const auto& a = m.algebra();
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const Matrix& x = m.map(k);
    Json rows = Json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(r, c));
      rows.push_back(std::move(row));
    }
    arrows[a.arrow(k).name] = std::move(rows);
  }
  return Json{{"dim_vector", m.dims()}, {"arrows", std::move(arrows)}};
}

inline Representation module_from_json(const Algebra& a, const Json& j) {
  if (!j.is_object() || !j.contains("dim_vector")) throw ValidationError("module JSON needs a dim_vector");
  const Json& dv = j.at("dim_vector");
  if (!dv.is_array() || dv.size() != static_cast<std::size_t>(a.vertex_count()))
    throw ValidationError("dim_vector must list one dimension per vertex");
  std::vector<std::size_t> dims;
  for (const auto& d : dv) {
    if (!d.is_number_integer() || d.get<long long>() < 0) throw ValidationError("dimensions must be non-negative integers");
    dims.push_back(d.get<std::size_t>());
  }
  const Scalar p = a.characteristic();
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a.arrow_count(); ++k) {
    const Arrow arr = a.arrow(k);
    maps.emplace_back(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)], p);
  }
  if (j.contains("arrows")) {
    const Json& arrows = j.at("arrows");
    if (!arrows.is_object()) throw ValidationError("arrows must be an object keyed by arrow name");
    for (const auto& [name, rows] : arrows.items()) {
      const int k = a.find_arrow(name);
      if (k < 0) throw ValidationError("unknown arrow '" + name + "'");
      Matrix& x = maps[static_cast<std::size_t>(k)];
      if (!rows.is_array() || rows.size() != x.rows())
        throw ValidationError("matrix of arrow '" + name + "' must have " + std::to_string(x.rows()) + " rows");
      for (std::size_t r = 0; r < x.rows(); ++r) {
        const Json& row = rows[r];
        if (!row.is_array() || row.size() != x.cols())
          throw ValidationError("matrix of arrow '" + name + "' must have " + std::to_string(x.cols()) + " columns");
        for (std::size_t c = 0; c < x.cols(); ++c) {
          if (!row[c].is_number_integer()) throw ValidationError("matrix entries must be integers");
          const long long v = row[c].get<long long>();
          const long long q = static_cast<long long>(p);
          x.set(r, c, static_cast<Scalar>(((v % q) + q) % q));
        }
      }
    }
  }
  return Representation(a, std::move(dims), std::move(maps));
}

/// A module given by a canonical universe name, a sum of names joined by '+',
/// "0", or inline JSON.
inline Representation resolve_module(const Universe& u, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ValidationError(std::string("malformed module JSON: ") + e.what());
    }
    return module_from_json(u.algebra(), j);
  }
  if (text == "0") return Representation::zero(u.algebra());
  std::vector<std::size_t> idx;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('+', start);
    const std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto i = u.find_name(part);
    if (!i) throw ValidationError("unknown module '" + part + "'");
    idx.push_back(*i);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return u.sum(idx);
}

/// Names of the summands of a module in the universe, or inline JSON when
/// some summand is not listed.
inline Json module_reference(const Universe& u, const Representation& m) {
  if (m.is_zero()) return "0";
  std::vector<std::size_t> idx;
  for (const auto& x : indecomposable_summands(m)) {
    const auto i = u.locate(x);
    if (!i) return module_to_json(m);
    idx.push_back(*i);
  }
  return u.module_label(idx);
}

inline Json sequence_to_json(const Universe& u, const SignedSequence& seq) {
  Json out = Json::array();
  for (const auto& e : seq) {
    if (e.has_shift() && !e.module_part.is_zero()) throw ValidationError("sequence entries must be indecomposable");
    const bool s = e.has_shift();
    out.push_back({{"module", module_reference(u, s ? e.shifted_part : e.module_part)}, {"shifted", s}});
  }
  return out;
}

inline SignedSequence sequence_from_json(const Universe& u, const Json& j) {
  if (!j.is_array()) throw ValidationError("a sequence is a JSON array");
  SignedSequence seq;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("module")) throw ValidationError("sequence entries need a module");
    const Json& m = e.at("module");
    Representation x = m.is_string() ? resolve_module(u, m.get<std::string>()) : module_from_json(u.algebra(), m);
    if (e.contains("shifted") && !e.at("shifted").is_boolean()) throw ValidationError("shifted must be true or false");
    const bool s = e.contains("shifted") && e.at("shifted").get<bool>();
    seq.push_back(s ? shifted(u.algebra(), std::move(x)) : unshifted(std::move(x)));
  }
  return seq;
}

}  // namespace stratify
