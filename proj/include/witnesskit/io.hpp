#pragma once

// JSON documents: states, map specifications, witnesses, detection reports
// and certificates.
//
//   state:   {"d1": int, "d2": int, "matrix": {"re": [[...]], "im": [[...]]}}
//   mapspec: {"d1": int, "d2": int, "r00": x, "s": [...], "t": [...], "lambda": [[...]]}
//   witness: state envelope + {"coeffs": mapspec}

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "witnesskit/criteria.hpp"
#include "witnesskit/errors.hpp"
#include "witnesskit/maps.hpp"
#include "witnesskit/matcore.hpp"
#include "witnesskit/version.hpp"
#include "witnesskit/witness.hpp"

namespace witnesskit::io {

using nlohmann::json;

inline constexpr double kDefaultLoadTolerance = 1e-8;

struct StateDocument {
  int d1;
  int d2;
  HermitianMatrix rho;
};

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in the message.
    throw ParseError(source + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json load_json(const std::string& path) { return parse_text(read_file(path), path); }

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

inline int get_int(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

inline double get_double(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite number");
  return x;
}

inline RealVector vector_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  RealVector out(Index(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(Index(i)) = get_double(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

inline RealMatrix matrix_from_json(const json& v, const std::string& where, Index rows, Index cols) {
  if (!v.is_array() || v.size() != std::size_t(rows))
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  RealMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = v[std::size_t(i)];
    const std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != std::size_t(cols))
      throw ParseError(rw + ": expected " + std::to_string(cols) + " columns");
    for (Index k = 0; k < cols; ++k) out(i, k) = get_double(row[std::size_t(k)], rw + "[" + std::to_string(k) + "]");
  }
  return out;
}

inline json vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline json matrix_to_json(const RealMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

inline void check_dims(int d1, int d2, const std::string& where) {
  if (d1 < 2 || d2 < 2) throw DimensionError(where + ": d1 and d2 must be >= 2");
  if (d1 > 64 || d2 > 64) throw DimensionError(where + ": dimensions above 64 are not supported");
}

}  // namespace detail

inline json complex_matrix_to_json(const ComplexMatrix& m) {
  return {{"re", detail::matrix_to_json(m.real())}, {"im", detail::matrix_to_json(m.imag())}};
}

inline ComplexMatrix complex_matrix_from_json(const json& j, Index n, const std::string& where) {
  const RealMatrix re = detail::matrix_from_json(detail::field(j, "re", where), where + ".re", n, n);
  RealMatrix im = RealMatrix::Zero(n, n);
  if (j.contains("im")) im = detail::matrix_from_json(j.at("im"), where + ".im", n, n);
  ComplexMatrix out(n, n);
  out.real() = re;
  out.imag() = im;
  return out;
}

inline json state_to_json(const HermitianMatrix& rho, int d1, int d2) {
  return {{"d1", d1}, {"d2", d2}, {"matrix", complex_matrix_to_json(rho.matrix())}};
}

/// Loads and validates a state: square of size d1*d2, Hermitian and unit trace within `tol`.
inline StateDocument state_from_json(const json& j, double tol = kDefaultLoadTolerance,
                                     const std::string& where = "state") {
  const int d1 = detail::get_int(j, "d1", where);
  const int d2 = detail::get_int(j, "d2", where);
  detail::check_dims(d1, d2, where);
  ComplexMatrix m = complex_matrix_from_json(detail::field(j, "matrix", where), Index(d1) * d2, where + ".matrix");
  HermitianMatrix rho(std::move(m), tol);
  if (std::abs(rho.trace() - 1.0) > tol) {
    std::ostringstream os;
    os << where << ": trace is " << rho.trace() << ", expected 1";
    throw ValueError(os.str());
  }
  return {d1, d2, std::move(rho)};
}

inline json mapspec_to_json(const MapSpec& m) {
  return {{"d1", m.d1},
          {"d2", m.d2},
          {"r00", m.r00},
          {"s", detail::vector_to_json(m.s)},
          {"t", detail::vector_to_json(m.t)},
          {"lambda", detail::matrix_to_json(m.lambda)}};
}

inline MapSpec mapspec_from_json(const json& j, const std::string& where = "mapspec") {
  const int d1 = detail::get_int(j, "d1", where);
  const int d2 = detail::get_int(j, "d2", where);
  detail::check_dims(d1, d2, where);
  const Index n1 = Index(d1) * d1 - 1;
  const Index n2 = Index(d2) * d2 - 1;
  const double r00 = detail::get_double(detail::field(j, "r00", where), where + ".r00");
  RealVector s = detail::vector_from_json(detail::field(j, "s", where), where + ".s");
  RealVector t = detail::vector_from_json(detail::field(j, "t", where), where + ".t");
  if (s.size() != n1) throw DimensionError(where + ".s: length must be d1^2-1 = " + std::to_string(n1));
  if (t.size() != n2) throw DimensionError(where + ".t: length must be d2^2-1 = " + std::to_string(n2));
  RealMatrix lambda = detail::matrix_from_json(detail::field(j, "lambda", where), where + ".lambda", n2, n1);
  return MapSpec(d1, d2, r00, std::move(s), std::move(t), std::move(lambda));
}

inline json witness_to_json(const Witness& w) {
  json j = state_to_json(w.w, w.d1, w.d2);
  j["coeffs"] = mapspec_to_json(w.coeffs);
  return j;
}

/// The matrix is authoritative; an embedded coefficient record must agree with it within `tol`.
inline Witness witness_from_json(const json& j, double tol = kDefaultLoadTolerance,
                                 const std::string& where = "witness") {
  const int d1 = detail::get_int(j, "d1", where);
  const int d2 = detail::get_int(j, "d2", where);
  detail::check_dims(d1, d2, where);
  ComplexMatrix m = complex_matrix_from_json(detail::field(j, "matrix", where), Index(d1) * d2, where + ".matrix");
  Witness w = witness_from_operator(HermitianMatrix(std::move(m), tol), d1, d2);
  if (j.contains("coeffs")) {
    const MapSpec c = mapspec_from_json(j.at("coeffs"), where + ".coeffs");
    if (c.d1 != d1 || c.d2 != d2) throw DimensionError(where + ".coeffs: dimensions differ from the matrix");
    const RealMatrix diff = c.full() - w.coeffs.full();
    if (diff.norm() > tol * std::max(1.0, w.coeffs.full().norm()))
      throw ValueError(where + ".coeffs: coefficients do not match the witness matrix");
  }
  return w;
}

inline json positivity_to_json(const PositivityCertificate& c) {
  return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"margin", c.margin}, {"satisfied", c.satisfied}};
}

inline json cp_to_json(const CpCertificate& c) {
  return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"margin", c.margin}, {"satisfied", c.satisfied}};
}

inline json certificates_to_json(const MapSpec& m) {
  return {{"d1", m.d1},
          {"d2", m.d2},
          {"positivity", positivity_to_json(positivity_certificate(m))},
          {"complete_positivity", cp_to_json(cp_certificate(m))},
          {"trace_preserving", m.is_trace_preserving()},
          {"unital", m.is_unital()},
          {"tool_version", kVersion}};
}

inline json report_to_json(const DetectionReport& r) {
  json filters = json::array();
  for (std::size_t i = 0; i < r.filter_results.size(); ++i) {
    const auto& f = r.filter_results[i];
    filters.push_back({{"x1", f.params.x1},
                       {"x2", f.params.x2},
                       {"value", f.value},
                       {"bound", f.bound},
                       {"detected", bool(r.verdicts.filter[i])}});
  }
  json filter_verdicts = json::array();
  for (bool b : r.verdicts.filter) filter_verdicts.push_back(b);
  return {{"d1", r.d1},
          {"d2", r.d2},
          {"ccnr", r.ccnr},
          {"devicente", r.devicente},
          {"devicente_threshold", r.devicente_threshold},
          {"filter_results", std::move(filters)},
          {"F1", r.f1},
          {"F2", r.f2},
          {"F3", r.f3},
          {"ppt_min_eigenvalue", r.ppt_min_eigenvalue},
          {"verdicts",
           {{"ccnr", r.verdicts.ccnr},
            {"devicente", r.verdicts.devicente},
            {"ppt", r.verdicts.ppt},
            {"filter", std::move(filter_verdicts)}}},
          {"tool_version", kVersion}};
}

}  // namespace witnesskit::io
