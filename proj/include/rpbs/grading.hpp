#pragma once

#include "rpbs/fock.hpp"
#include "rpbs/free_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rpbs {

/// Element of Z2 x Z2, written additively.
struct Degree {
  int first = 0;
  int second = 0;

  friend Degree operator+(Degree a, Degree b) { return {(a.first + b.first) % 2, (a.second + b.second) % 2}; }
  friend bool operator==(const Degree&, const Degree&) = default;
};

inline std::string to_string(Degree d) {
  return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
}

struct GradingAssignment {
  std::string name;
  Degree boson;    // deg b+ = deg b-
  Degree fermion;  // deg f+ = deg f-

  Degree operator()(Generator g) const { return is_bosonic(g) ? boson : fermion; }
};

/// b -> (1,0), f -> (0,1); compatible with the Fock-space grading.
inline const GradingAssignment kMainGrading{"MAIN", {1, 0}, {0, 1}};
/// b -> (1,0), f -> (1,1); the color-Lie grading, homogeneous but not a module grading here.
inline const GradingAssignment kAltGrading{"ALT", {1, 0}, {1, 1}};

inline Degree degree_ket(const BasisKet& k) { return {k.m % 2, k.n % 2}; }

inline Degree degree_word(const Word& w, const GradingAssignment& g) {
  Degree d;
  for (auto x : w) d = d + g(x);
  return d;
}

struct NonHomogeneous {
  std::vector<std::pair<Word, Degree>> conflicting;  // one representative word per degree present
};

using DegreeVerdict = std::variant<Degree, NonHomogeneous>;

/// Degree of a nonzero element, or NonHomogeneous when its words disagree.
inline DegreeVerdict degree_element(const FAElement& e, const GradingAssignment& g) {
  if (e.is_zero()) throw std::invalid_argument("degree of the zero element is undefined");
  std::vector<std::pair<Word, Degree>> seen;
  for (const auto& [w, c] : e.terms()) {
    const Degree d = degree_word(w, g);
    bool known = false;
    for (const auto& [sw, sd] : seen) known = known || sd == d;
    if (!known) seen.emplace_back(w, d);
  }
  if (seen.size() == 1) return seen.front().second;
  return NonHomogeneous{std::move(seen)};
}

inline bool is_homogeneous(const FAElement& e, const GradingAssignment& g) {
  return std::holds_alternative<Degree>(degree_element(e, g));
}

struct GradedModuleViolation {
  Generator generator;
  BasisKet source;
  BasisKet target;
  Degree expected;
  Degree actual;
};

struct GradedModuleReport {
  bool graded = true;
  std::size_t actions_checked = 0;
  std::optional<GradedModuleViolation> counterexample;
};

/// Checks deg(x.v) = deg(v) + g(x) term by term for every generator and every
/// ket with m <= window_m - 1.
inline GradedModuleReport check_graded_module(const GradingAssignment& g, const RepParams& params) {
  if (params.window_m < 1) throw std::invalid_argument("check_graded_module needs window_m >= 1");
  GradedModuleReport report;
  for (const auto& v : enumerate_basis(RepParams(params.p, params.window_m - 1))) {
    for (auto x : kAllGenerators) {
      ++report.actions_checked;
      const Degree expected = degree_ket(v) + g(x);
      const State image = act(x, v, params);
      for (const auto& [k, c] : image.terms()) {
        if (degree_ket(k) != expected) {
          report.graded = false;
          report.counterexample = GradedModuleViolation{x, v, k, expected, degree_ket(k)};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace rpbs
