#pragma once

#include <fstream>
#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "liecheck/model.hpp"

namespace liecheck {

using Json = nlohmann::ordered_json;

struct ParseError : Error {
  using Error::Error;
};

// Model files are UTF-8 JSON. All rationals are strings "p" or "p/q": exact
// values survive any JSON reader. Unlisted brackets are zero and the
// antisymmetric counterpart of each listed bracket is installed
// automatically. Layout:
//
// {
//   "name": "...",
//   "dim": 9,
//   "basis": ["z", "b", ...],              // optional
//   "brackets": [{"i": 1, "j": 0, "coeffs": {"0": "2"}}, ...],
//   "subalgebra": [["0", ...], ...],       // optional generator rows
//   "complement": [["1", ...], ...],       // optional complement rows
//   "acs": [["0", ...], ...]               // optional endomorphism of the complement
// }

namespace detail {

inline QMat parse_matrix(const Json& rows, std::size_t expect_cols, const std::string& field) {
  if (!rows.is_array()) throw ParseError(field + ": expected an array of rows");
  QMat m(0, expect_cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != expect_cols)
      throw ParseError(field + "[" + std::to_string(r) + "]: expected " +
                       std::to_string(expect_cols) + " entries");
    VecQ v;
    v.reserve(expect_cols);
    for (const Json& x : row) {
      if (!x.is_string())
        throw ParseError(field + "[" + std::to_string(r) + "]: rationals must be strings");
      v.push_back(parse_rational(x.get<std::string>()));
    }
    m.append_row(v);
  }
  return m;
}

inline Json matrix_to_json(const QMat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline Model parse_model(const Json& j) {
  if (!j.is_object()) throw ParseError("model: expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<long long>() <= 0)
    throw ParseError("dim: expected a positive integer");
  const std::size_t dim = j["dim"].get<std::size_t>();

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != dim)
      throw ParseError("basis: expected " + std::to_string(dim) + " labels");
    for (const Json& l : j["basis"]) labels.push_back(l.get<std::string>());
  }

  Model m;
  m.name = j.value("name", std::string("unnamed"));
  m.algebra = LieAlgebra(dim, std::move(labels));

  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("brackets: expected an array");
    for (std::size_t e = 0; e < j["brackets"].size(); ++e) {
      const Json& entry = j["brackets"][e];
      const std::string at = "brackets[" + std::to_string(e) + "]";
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("coeffs"))
        throw ParseError(at + ": expected {i, j, coeffs}");
      if (!entry["i"].is_number_integer() || !entry["j"].is_number_integer() ||
          entry["i"].get<long long>() < 0 || entry["j"].get<long long>() < 0)
        throw ParseError(at + ": i and j must be nonnegative integers");
      const std::size_t i = entry["i"].get<std::size_t>();
      const std::size_t jj = entry["j"].get<std::size_t>();
      if (i >= dim || jj >= dim) throw ParseError(at + ": index out of range");
      if (i == jj) throw ParseError(at + ": i = j is not a bracket");
      if (seen.count({i, jj}) || seen.count({jj, i}))
        throw ParseError(at + ": duplicate bracket (" + std::to_string(i) + "," +
                         std::to_string(jj) + ")");
      seen.insert({i, jj});
      if (!entry["coeffs"].is_object()) throw ParseError(at + ".coeffs: expected an object");
      std::vector<std::pair<std::size_t, Rational>> terms;
      for (const auto& [key, value] : entry["coeffs"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw ParseError(at + ".coeffs: bad index '" + key + "'");
        }
        if (k >= dim) throw ParseError(at + ".coeffs: index " + key + " out of range");
        if (!value.is_string())
          throw ParseError(at + ".coeffs[" + key + "]: rationals must be strings");
        try {
          terms.emplace_back(k, parse_rational(value.get<std::string>()));
        } catch (const InvalidInput& err) {
          throw ParseError(at + ".coeffs[" + key + "]: " + err.what());
        }
      }
      m.algebra.set_bracket(i, jj, terms);
    }
  }

  if (j.contains("subalgebra"))
    m.subalgebra = detail::parse_matrix(j["subalgebra"], dim, "subalgebra");
  if (j.contains("complement"))
    m.complement = detail::parse_matrix(j["complement"], dim, "complement");
  if (j.contains("acs")) {
    if (!m.complement) throw ParseError("acs: requires a complement block");
    QMat a = detail::parse_matrix(j["acs"], m.complement->rows(), "acs");
    if (a.rows() != m.complement->rows()) throw ParseError("acs: must be square over the complement");
    m.acs = std::move(a);
  }
  return m;
}

inline Json serialize_model(const Model& m) {
  Json j;
  j["name"] = m.name;
  j["dim"] = m.algebra.dim;
  j["basis"] = m.algebra.labels;
  Json brackets = Json::array();
  for (std::size_t i = 0; i < m.algebra.dim; ++i)
    for (std::size_t k = i + 1; k < m.algebra.dim; ++k) {
      Json coeffs = Json::object();
      for (std::size_t t = 0; t < m.algebra.dim; ++t)
        if (m.algebra.at(i, k, t) != 0)
          coeffs[std::to_string(t)] = to_string(m.algebra.at(i, k, t));
      if (!coeffs.empty()) brackets.push_back(Json{{"i", i}, {"j", k}, {"coeffs", coeffs}});
    }
  j["brackets"] = std::move(brackets);
  if (m.subalgebra) j["subalgebra"] = detail::matrix_to_json(*m.subalgebra);
  if (m.complement) j["complement"] = detail::matrix_to_json(*m.complement);
  if (m.acs) j["acs"] = detail::matrix_to_json(*m.acs);
  return j;
}

inline Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_model(j);
}

}  // namespace liecheck
