#pragma once

// JSON / CSV serialization of catalogs, Gram blocks, matrices, spectra and
// trajectories. Every JSON document carries "schema": 1.

#include "rpbs/fock.hpp"
#include "rpbs/free_algebra.hpp"
#include "rpbs/grading.hpp"
#include "rpbs/metric.hpp"
#include "rpbs/relations.hpp"
#include "rpbs/spectra.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace rpbs {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
/// Significant digits kept for floating values in reports.
inline constexpr int kReportDigits = 12;

inline double round_for_report(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, x);
  double r = std::stod(buf);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

inline json rational_json(const Rational& q) {
  return {{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline json coefficient_json(const LaurentPoly& c) {
  json terms = json::array();
  for (const auto& [k, q] : c.terms()) terms.push_back({{"p_power", k}, {"value", to_string(q)}});
  return terms;
}

inline json word_json(const Word& w) {
  json out = json::array();
  for (auto g : w) out.push_back(std::string(to_string(g)));
  return out;
}

inline json element_json(const FAElement& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"word", word_json(w)}, {"coefficient", coefficient_json(c)}});
  return terms;
}

inline json catalog_json(const std::vector<RelationEntry>& entries) {
  json rel = json::array();
  for (const auto& e : entries) {
    rel.push_back({{"name", e.name},
                   {"group", std::string(to_string(e.group))},
                   {"source", e.source},
                   {"terms", element_json(e.element)}});
  }
  return {{"schema", kSchemaVersion}, {"relations", rel}};
}

inline json exact_matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json ket_labels_json(const std::vector<BasisKet>& kets) {
  json out = json::array();
  for (const auto& k : kets) out.push_back(label(k));
  return out;
}

inline json gram_json(const GramBlock& g, int p) {
  return {{"schema", kSchemaVersion}, {"p", p},           {"m", g.m},
          {"n", g.n},                 {"basis", ket_labels_json(g.kets)}, {"entries", exact_matrix_json(g.matrix)}};
}

inline json matrix_json(const std::string& op, int p, const std::vector<BasisKet>& kets, const ExactMatrix& m) {
  return {{"schema", kSchemaVersion},
          {"operator", op},
          {"p", p},
          {"basis", ket_labels_json(kets)},
          {"convention", "column j holds the image of basis[j]"},
          {"entries", exact_matrix_json(m)}};
}

/// Matrix as CSV with the basis ordering in a leading comment line.
inline std::string matrix_csv(const std::vector<BasisKet>& kets, const ExactMatrix& m) {
  std::ostringstream os;
  os << "# basis:";
  for (const auto& k : kets) os << " " << label(k);
  os << "\n# column j holds the image of basis[j]\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
    os << "\n";
  }
  return os.str();
}

inline json degree_json(const DegreeVerdict& v) {
  if (const auto* d = std::get_if<Degree>(&v)) return to_string(*d);
  json conflicts = json::array();
  for (const auto& [w, d] : std::get<NonHomogeneous>(v).conflicting)
    conflicts.push_back({{"word", word_json(w)}, {"degree", to_string(d)}});
  return {{"non_homogeneous", conflicts}};
}

/// Degree of every relation under each assignment.
inline json grading_json(const std::vector<RelationEntry>& entries, const std::vector<GradingAssignment>& gradings) {
  json rel = json::array();
  for (const auto& e : entries) {
    json deg;
    for (const auto& g : gradings) deg[g.name] = e.element.is_zero() ? json("zero") : degree_json(degree_element(e.element, g));
    rel.push_back({{"name", e.name}, {"degrees", deg}});
  }
  return {{"schema", kSchemaVersion}, {"relations", rel}};
}

inline json spectrum_json(const Spectrum& s, int p, const HamiltonianParams& h) {
  json ev = json::array();
  for (double x : s.eigenvalues) ev.push_back(round_for_report(x));
  return {{"schema", kSchemaVersion},
          {"p", p},
          {"K", s.K},
          {"omega_b", round_for_report(h.omega_b)},
          {"omega_f", round_for_report(h.omega_f)},
          {"lambda", round_for_report(h.lambda)},
          {"basis", ket_labels_json(s.kets)},
          {"eigenvalues", ev},
          {"asymmetry", round_for_report(s.asymmetry)}};
}

/// Columns: t, ket, re, im, abs2 (one row per time and ket); the ket label is quoted.
inline std::string trajectory_csv(const Trajectory& tr) {
  std::ostringstream os;
  os << std::setprecision(kReportDigits);
  os << "t,ket,re,im,abs2\n";
  for (std::size_t s = 0; s < tr.times.size(); ++s)
    for (std::size_t i = 0; i < tr.kets.size(); ++i) {
      const auto c = tr.coefficients[s][i];
      os << round_for_report(tr.times[s]) << ",\"" << label(tr.kets[i]) << "\"," << round_for_report(c.real()) << ","
         << round_for_report(c.imag()) << "," << round_for_report(std::norm(c)) << "\n";
    }
  return os.str();
}

inline json trajectory_json(const Trajectory& tr, int p) {
  json steps = json::array();
  for (std::size_t s = 0; s < tr.times.size(); ++s) {
    json coeffs = json::array();
    for (const auto& c : tr.coefficients[s]) coeffs.push_back({round_for_report(c.real()), round_for_report(c.imag())});
    steps.push_back({{"t", round_for_report(tr.times[s])}, {"norm", round_for_report(tr.norms[s])}, {"coefficients", coeffs}});
  }
  return {{"schema", kSchemaVersion}, {"p", p}, {"K", tr.K}, {"basis", ket_labels_json(tr.kets)}, {"steps", steps}};
}

}  // namespace rpbs
