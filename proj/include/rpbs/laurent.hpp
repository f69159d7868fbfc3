#pragma once

#include "rpbs/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace rpbs {

/// Laurent polynomial in the representation order p with rational coefficients.
/// Negative powers carry the 1/p factors of N_s and T; evaluation needs p >= 1.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT: scalars convert implicitly
  LaurentPoly(long long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly p_power(int k, const Rational& c = 1) {
    LaurentPoly out;
    out.add_term(k, c);
    return out;
  }
  static LaurentPoly p() { return p_power(1); }

  void add_term(int power, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(power, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// Nonzero single term c*p^k; only these can be divided by.
  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational evaluate(long long p) const {
    Rational out = 0;
    const Rational pr(p);
    for (const auto& [k, c] : terms_) {
      Rational pw = 1;
      for (int i = 0; i < (k < 0 ? -k : k); ++i) pw *= pr;
      out += k < 0 ? c / pw : c * pw;
    }
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
  }
  /// Division by a monomial; throws std::domain_error otherwise.
  friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
    if (!b.is_monomial()) throw std::domain_error("division only by a nonzero monomial c*p^k");
    const auto& [k, c] = *b.terms_.begin();
    LaurentPoly out;
    for (const auto& [ka, ca] : a.terms_) out.add_term(ka - k, ca / c);
    return out;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Rational> terms_;
};

/// "3/2", "p", "2 - 1/2/p", ... in the operator-expression syntax.
inline std::string to_string(const LaurentPoly& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const auto& [k, q] = *it;
    Rational mag = q < 0 ? Rational(-q) : q;
    out += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
    if (k == 0) {
      out += to_string(mag);
    } else if (k > 0) {
      if (mag != 1) out += to_string(mag) + "*";
      out += "p";
      if (k != 1) out += "^" + std::to_string(k);
    } else {
      out += to_string(mag) + "/p";
      if (k != -1) out += "^" + std::to_string(-k);
    }
    first = false;
  }
  return out;
}

}  // namespace rpbs
