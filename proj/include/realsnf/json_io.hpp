#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "realsnf/any_ring.hpp"
#include "realsnf/matrix.hpp"
#include "realsnf/smith.hpp"
#include "realsnf/spectrum.hpp"
#include "realsnf/suite.hpp"
#include "realsnf/verifier.hpp"

namespace realsnf {

using json = nlohmann::json;

// All numbers leave the library as decimal strings.

namespace detail {

/// Runs f, prefixing any library error with the JSON location.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(Errc::ParseError, where + ": " + e.what());
  }
}

template <class R>
typename R::Element parse_text(const R& ring, const json& j, const std::string& where) {
  return located(where, [&] { return ring.parse(j.get<std::string>()); });
}

}  // namespace detail

inline json to_json(const QuadElem& a) { return json{{"x", a.x().get_str()}, {"y", a.y().get_str()}}; }

inline json poly_to_json(const RatPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

inline Integer parse_element(const IntegerRing& ring, const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) return detail::parse_text(ring, j, where);
  throw Error(Errc::ParseError, where + ": expected an integer or integer string");
}

inline RatPoly parse_element(const PolyRing& ring, const json& j, const std::string& where) {
  if (j.is_number_integer()) return RatPoly::constant(Rational(Integer(j.dump())));
  if (j.is_string()) return detail::parse_text(ring, j, where);
  if (j.is_array()) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (!j[k].is_string() && !j[k].is_number_integer())
        throw Error(Errc::ParseError, where + "[" + std::to_string(k) + "]: expected a coefficient string");
      if (j[k].is_string())
        c.push_back(detail::located(where + "[" + std::to_string(k) + "]",
                                    [&] { return parse_rational(j[k].get<std::string>()); }));
      else
        c.push_back(Rational(Integer(j[k].dump())));
    }
    return RatPoly(std::move(c));
  }
  throw Error(Errc::ParseError, where + ": expected a polynomial string or coefficient array");
}

inline QuadElem parse_element(const QuadRing& ring, const json& j, const std::string& where) {
  if (j.is_number_integer()) return ring.element(Integer(j.dump()), 0);
  if (j.is_string()) return detail::parse_text(ring, j, where);
  if (j.is_object()) {
    if (!j.contains("x") || !j.contains("y")) throw Error(Errc::ParseError, where + ": object needs \"x\" and \"y\"");
    auto coord = [&](const char* key) {
      const json& v = j.at(key);
      if (v.is_string()) return detail::located(where + "." + key, [&] { return parse_integer(v.get<std::string>()); });
      if (v.is_number_integer()) return Integer(v.dump());
      throw Error(Errc::ParseError, where + "." + key + ": expected a decimal string");
    };
    return ring.element(coord("x"), coord("y"));
  }
  throw Error(Errc::ParseError, where + ": expected \"x+yw\", an integer or {\"x\",\"y\"}");
}

template <class R>
Matrix<typename R::Element> parse_matrix_rows(const R& ring, const json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty()) throw Error(Errc::ParseError, where + ": expected a nonempty array of rows");
  std::vector<std::vector<typename R::Element>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].empty()) throw Error(Errc::ParseError, row_where + ": expected a nonempty row array");
    std::vector<typename R::Element> row;
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      row.push_back(parse_element(ring, rows[i][k], row_where + "[" + std::to_string(k) + "]"));
    if (!out.empty() && row.size() != out.front().size())
      throw Error(Errc::ParseError, row_where + ": row length differs from row 0");
    out.push_back(std::move(row));
  }
  return Matrix<typename R::Element>::from_rows(out);
}

/// Ring named by a Matrix JSON object, if any.
inline std::optional<RingSpec> matrix_ring(const json& j) {
  if (j.is_object() && j.contains("ring")) {
    if (!j["ring"].is_string()) throw Error(Errc::ParseError, "ring: expected a string");
    return RingSpec::parse(j["ring"].get<std::string>());
  }
  return std::nullopt;
}

/// Either a bare array of rows or {"ring", "rows", "cols", "entries"}.
template <class R>
Matrix<typename R::Element> parse_matrix(const R& ring, const json& j) {
  if (j.is_array()) return parse_matrix_rows(ring, j, "entries");
  if (!j.is_object()) throw Error(Errc::ParseError, "matrix: expected an array or object");
  if (!j.contains("entries")) throw Error(Errc::ParseError, "entries: missing");
  auto m = parse_matrix_rows(ring, j["entries"], "entries");
  for (const char* key : {"rows", "cols"}) {
    if (!j.contains(key)) continue;
    const json& v = j[key];
    if (!v.is_number_unsigned() && !v.is_string()) throw Error(Errc::ParseError, std::string(key) + ": expected a count");
    std::size_t expect = 0;
    if (v.is_string()) {
      Integer n = detail::located(key, [&] { return parse_integer(v.get<std::string>()); });
      if (n < 0 || !n.fits_ulong_p()) throw Error(Errc::ParseError, std::string(key) + ": expected a count");
      expect = n.get_ui();
    } else {
      expect = v.get<std::size_t>();
    }
    std::size_t got = std::string(key) == "rows" ? m.rows() : m.cols();
    if (expect != got) throw Error(Errc::ParseError, std::string(key) + ": says " + std::to_string(expect) + ", entries have " + std::to_string(got));
  }
  return m;
}

template <class R>
json matrix_rows_json(const R& ring, const Matrix<typename R::Element>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ring.format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class R>
json matrix_json(const R& ring, const Matrix<typename R::Element>& m) {
  return json{{"ring", ring.spec().to_string()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", matrix_rows_json(ring, m)}};
}

template <class R>
json elements_json(const R& ring, const std::vector<typename R::Element>& v) {
  json arr = json::array();
  for (const auto& e : v) arr.push_back(ring.format(e));
  return arr;
}

template <class R>
json snf_json(const R& ring, const SnfResult<typename R::Element>& s) {
  return json{{"ring", ring.spec().to_string()},
              {"diagonals", elements_json(ring, s.diagonals)},
              {"rank", std::to_string(s.diagonals.size())},
              {"P", matrix_rows_json(ring, s.P)},
              {"D", matrix_rows_json(ring, s.D)},
              {"Q", matrix_rows_json(ring, s.Q)}};
}

inline json psd_json(const PsdReport& r) {
  json w = nullptr;
  if (r.witness) {
    json rows = json::array();
    for (auto i : r.witness->minor_rows) rows.push_back(std::to_string(i));
    w = json{{"minor_rows", rows}};
    w["embedding"] = r.witness->embedding ? json(*r.witness->embedding) : json(nullptr);
    w["point"] = r.witness->point ? json(to_string(*r.witness->point)) : json(nullptr);
  }
  return json{{"is_psd", r.is_psd}, {"witness", w}};
}

template <class R>
json report_json(const R& ring, const TheoremReport<typename R::Element>& rep) {
  json diag = json::array();
  for (std::size_t k = 0; k < rep.snf_diagonals.size(); ++k) {
    const auto& pos = rep.positive_associates[k];
    diag.push_back(json{{"diagonal", ring.format(rep.snf_diagonals[k])},
                        {"sign", rep.sign_data[k]},
                        {"positivizable", static_cast<bool>(rep.positivizable[k])},
                        {"positive_associate", pos ? json(ring.format(*pos)) : json(nullptr)}});
  }
  json positivizable = json::array();
  for (bool b : rep.positivizable) positivizable.push_back(b);
  return json{{"ring", ring.spec().to_string()},
              {"input_psd", rep.input_psd},
              {"psd", psd_json(rep.psd)},
              {"snf_diagonals", elements_json(ring, rep.snf_diagonals)},
              {"sign_data", diag},
              {"positivizable", positivizable},
              {"pnri", rep.pnri},
              {"conclusion", to_string(rep.conclusion)}};
}

inline json trial_json(const TrialOutcome& t) {
  json pos = json::array();
  for (bool b : t.positivizable) pos.push_back(b);
  return json{{"trial", std::to_string(t.index)},
              {"seed", std::to_string(t.seed)},
              {"size", std::to_string(t.size)},
              {"diagonals", t.diagonals},
              {"positivizable", pos},
              {"conclusion", to_string(t.conclusion)},
              {"breach", t.breach},
              {"breach_reason", t.breach ? json(t.breach_reason) : json(nullptr)}};
}

inline json summary_json(const SuiteSummary& s) {
  json counts = json::object();
  for (const auto& [k, v] : s.conclusions) counts[k] = std::to_string(v);
  return json{{"summary", json{{"trials", std::to_string(s.trials)}, {"conclusions", counts}, {"breaches", std::to_string(s.breaches)}}}};
}

}  // namespace realsnf
