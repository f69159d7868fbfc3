#pragma once

// Free associative algebra on b+, b-, f+, f- with Laurent-polynomial (in p)
// coefficients, and its exact evaluation on the Fock-like representation.
//
// Words act right-to-left: in the word (g1 g2 ... gL) the generator gL is
// applied to the ket first.

#include "rpbs/fock.hpp"
#include "rpbs/generator.hpp"
#include "rpbs/laurent.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rpbs {

using Word = std::vector<Generator>;

inline std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += to_string(w[i]);
  }
  return out;
}

class FAElement {
 public:
  using Terms = std::map<Word, LaurentPoly>;

  FAElement() = default;

  static FAElement unit() { return scalar(LaurentPoly(1)); }
  static FAElement scalar(const LaurentPoly& c) {
    FAElement e;
    e.add_term({}, c);
    return e;
  }
  static FAElement monomial(Word w, const LaurentPoly& c = LaurentPoly(1)) {
    FAElement e;
    e.add_term(std::move(w), c);
    return e;
  }
  static FAElement generator(Generator g) { return monomial({g}); }

  void add_term(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t longest_word() const {
    std::size_t out = 0;
    for (const auto& [w, c] : terms_) out = std::max(out, w.size());
    return out;
  }

  FAElement& operator+=(const FAElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FAElement& operator-=(const FAElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend FAElement operator+(FAElement a, const FAElement& b) { return a += b; }
  friend FAElement operator-(FAElement a, const FAElement& b) { return a -= b; }
  friend FAElement operator-(const FAElement& a) { return FAElement() - a; }

  friend FAElement operator*(const FAElement& a, const FAElement& b) {
    FAElement out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    return out;
  }
  friend FAElement operator*(const LaurentPoly& s, const FAElement& a) {
    FAElement out;
    for (const auto& [w, c] : a.terms_) out.add_term(w, s * c);
    return out;
  }
  friend bool operator==(const FAElement&, const FAElement&) = default;

 private:
  Terms terms_;
};

inline FAElement word(const Word& gens) { return FAElement::monomial(gens); }
inline FAElement gen(Generator g) { return FAElement::generator(g); }

inline FAElement commutator(const FAElement& x, const FAElement& y) { return x * y - y * x; }
inline FAElement anticommutator(const FAElement& x, const FAElement& y) { return x * y + y * x; }

inline FAElement power(const FAElement& x, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  FAElement out = FAElement::unit();
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

/// Largest rise of the m index along any word of e (rightmost generator first).
/// A ket with m <= window_m - max_rise(e) never triggers WindowOverflow.
inline int max_rise(const FAElement& e) {
  int out = 0;
  for (const auto& [w, c] : e.terms()) {
    int level = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      level += m_shift(*it);
      out = std::max(out, level);
    }
  }
  return out;
}

inline std::string to_string(const FAElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      Rational q = c.constant_term();
      negative = q < 0;
      if (negative) q = -q;
      if (q != 1 || w.empty()) coeff = to_string(q);
    } else if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
      negative = true;
      coeff = to_string(-c);
    } else {
      coeff = c.terms().size() == 1 ? to_string(c) : "(" + to_string(c) + ")";
    }
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    out += coeff;
    if (!coeff.empty() && !w.empty()) out += "*";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += "*";
      out += to_string(w[i]);
    }
    first = false;
  }
  return out;
}

/// Applies a single word to a state, rightmost generator first.
inline State apply_word(const Word& w, State s, const RepParams& params) {
  for (auto it = w.rbegin(); it != w.rend() && !s.is_zero(); ++it) s = act(*it, s, params);
  return s;
}

/// Exact action of e on s with coefficients instantiated at params.p.
inline State evaluate(const FAElement& e, const State& s, const RepParams& params) {
  State out;
  for (const auto& [w, c] : e.terms()) {
    const Rational coeff = c.evaluate(params.p);
    if (coeff == 0) continue;
    out.add(apply_word(w, s, params), coeff);
  }
  return out;
}

inline State evaluate(const FAElement& e, const BasisKet& k, const RepParams& params) {
  return evaluate(e, State(k), params);
}

// ---- named operators -------------------------------------------------------

enum class NamedOperator { RPlus, RMinus, QPlus, QMinus, Nb, Nf, Ns, T };

inline std::string_view to_string(NamedOperator op) {
  switch (op) {
    case NamedOperator::RPlus: return "R+";
    case NamedOperator::RMinus: return "R-";
    case NamedOperator::QPlus: return "Q+";
    case NamedOperator::QMinus: return "Q-";
    case NamedOperator::Nb: return "Nb";
    case NamedOperator::Nf: return "Nf";
    case NamedOperator::Ns: return "Ns";
    case NamedOperator::T: return "T";
  }
  return "?";
}

inline std::optional<NamedOperator> named_operator_from_string(std::string_view s) {
  for (auto op : {NamedOperator::RPlus, NamedOperator::RMinus, NamedOperator::QPlus, NamedOperator::QMinus,
                  NamedOperator::Nb, NamedOperator::Nf, NamedOperator::Ns, NamedOperator::T})
    if (to_string(op) == s) return op;
  return std::nullopt;
}

/// Fully expanded element for R+-, Q+-, N_b, N_f, N_s, T with p kept symbolic.
inline FAElement named_operator(NamedOperator op) {
  const FAElement bp = gen(Generator::BPlus), bm = gen(Generator::BMinus);
  const FAElement fp = gen(Generator::FPlus), fm = gen(Generator::FMinus);
  const LaurentPoly half = Rational(1, 2);
  const FAElement p_half = FAElement::scalar(LaurentPoly::p_power(1, Rational(1, 2)));

  switch (op) {
    case NamedOperator::RPlus: return half * anticommutator(bp, fp);
    case NamedOperator::RMinus: return half * anticommutator(bm, fm);
    case NamedOperator::QPlus: return half * anticommutator(bm, fp);   // Q^e = 1/2 {b^-e, f^e}
    case NamedOperator::QMinus: return half * anticommutator(bp, fm);
    case NamedOperator::Nb: return half * anticommutator(bp, bm) - p_half;
    case NamedOperator::Nf: return half * commutator(fp, fm) + p_half;
    case NamedOperator::Ns: {
      const FAElement nf = named_operator(NamedOperator::Nf);
      FAElement inner = nf * nf - FAElement::scalar(LaurentPoly::p() + LaurentPoly(1)) * nf + fp * fm + p_half;
      return LaurentPoly::p_power(-1) * inner;
    }
    case NamedOperator::T: {
      const FAElement nb = named_operator(NamedOperator::Nb);
      const FAElement nf = named_operator(NamedOperator::Nf);
      const FAElement ns = named_operator(NamedOperator::Ns);
      FAElement first = named_operator(NamedOperator::RPlus) * named_operator(NamedOperator::RMinus) +
                        named_operator(NamedOperator::QPlus) * named_operator(NamedOperator::QMinus) - nb - p_half;
      FAElement second = (nb + p_half) * (nf - p_half) * ns;
      return p_half * first - LaurentPoly(2) * second;
    }
  }
  return {};
}

}  // namespace rpbs
