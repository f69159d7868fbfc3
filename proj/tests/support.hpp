#pragma once

// Seeded generators for the property tests.

#include "rpbs/free_algebra.hpp"
#include "rpbs/fock.hpp"

#include <random>

namespace rpbs::draw {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240607u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational() {
  int den = uniform(1, 6);
  return rat(uniform(-9, 9), den);
}

inline Generator random_generator() { return kAllGenerators[static_cast<std::size_t>(uniform(0, 3))]; }

inline Word random_word(int max_len) {
  Word w(static_cast<std::size_t>(uniform(0, max_len)));
  for (auto& g : w) g = random_generator();
  return w;
}

inline LaurentPoly random_scalar() {
  LaurentPoly c = random_rational();
  if (uniform(0, 3) == 0) c += LaurentPoly::p_power(uniform(-1, 2), random_rational());
  return c;
}

inline FAElement random_element(int terms = 3, int max_len = 3) {
  FAElement e;
  for (int i = 0; i < terms; ++i) e.add_term(random_word(max_len), random_scalar());
  return e;
}

inline State random_state(const RepParams& params, int terms = 3) {
  const auto basis = enumerate_basis(params);
  State s;
  for (int i = 0; i < terms; ++i) {
    s.add(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], random_rational());
  }
  return s;
}

}  // namespace rpbs::draw
