#pragma once

// Fock-like representation of order p: canonical basis |m,n,alpha>, |m,n,beta>
// and the exact action of b+, b-, f+, f- on it.

#include "rpbs/generator.hpp"
#include "rpbs/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpbs {

/// Order p of the representation plus the cutoff on the paraboson index.
struct RepParams {
  int p = 1;
  int window_m = 0;

  RepParams() = default;
  RepParams(int p_, int window) : p(p_), window_m(window) {
    if (p < 1) throw std::invalid_argument("representation order p must be >= 1");
    if (window_m < 0) throw std::invalid_argument("window_m must be >= 0");
  }
};

enum class Tag : std::uint8_t { Alpha, Beta };

/// Canonical basis label. Ordered by (m, n, tag) with Alpha < Beta.
struct BasisKet {
  int m = 0;
  int n = 0;
  Tag tag = Tag::Alpha;

  friend auto operator<=>(const BasisKet&, const BasisKet&) = default;
};

inline BasisKet alpha(int m, int n) { return {m, n, Tag::Alpha}; }
inline BasisKet beta(int m, int n) { return {m, n, Tag::Beta}; }
inline const BasisKet kVacuum{0, 0, Tag::Alpha};

/// "|m,n,alpha>" with Greek tags.
inline std::string to_string(const BasisKet& k) {
  std::ostringstream os;
  os << "|" << k.m << "," << k.n << "," << (k.tag == Tag::Alpha ? "α" : "β") << "⟩";
  return os.str();
}

/// Machine label "m,n,a" / "m,n,b", the form used by CLI flags and CSV files.
inline std::string label(const BasisKet& k) {
  return std::to_string(k.m) + "," + std::to_string(k.n) + "," + (k.tag == Tag::Alpha ? "a" : "b");
}

inline BasisKet parse_ket_label(std::string_view text) {
  std::string s(text);
  for (auto& c : s)
    if (c == ',') c = ' ';
  std::istringstream is(s);
  long long m = -1, n = -1;
  std::string t;
  if (!(is >> m >> n >> t) || m < 0 || n < 0 || !(t == "a" || t == "b")) {
    throw std::invalid_argument("bad ket label '" + std::string(text) + "', expected m,n,a|b");
  }
  std::string rest;
  if (is >> rest) throw std::invalid_argument("bad ket label '" + std::string(text) + "'");
  return {static_cast<int>(m), static_cast<int>(n), t == "a" ? Tag::Alpha : Tag::Beta};
}

/// True for labels that survive canonicalization.
inline bool is_canonical(const BasisKet& k, int p) {
  if (k.m < 0 || k.n < 0 || k.n > p) return false;
  if (k.tag == Tag::Beta) return k.m >= 1 && k.n >= 1 && k.n <= p - 1;
  return true;
}

/// Raised when a b+ step would leave the m-window.
class WindowOverflow : public std::runtime_error {
 public:
  WindowOverflow(const BasisKet& source, int window)
      : std::runtime_error("b+ on " + rpbs::to_string(source) + " leaves window m <= " +
                           std::to_string(window)),
        ket(source) {}
  BasisKet ket;
};

/// Raised on conditions the action formulas guarantee cannot happen.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Finite linear combination of canonical kets with nonzero rational coefficients.
class State {
 public:
  using Terms = std::map<BasisKet, Rational>;

  State() = default;
  explicit State(const BasisKet& k, Rational c = 1) { add(k, std::move(c)); }

  /// Adds c|k>. The caller guarantees k is canonical.
  void add(const BasisKet& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const State& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const BasisKet& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int max_m() const {
    int r = -1;
    for (const auto& [k, c] : terms_) r = std::max(r, k.m);
    return r;
  }

  State& operator+=(const State& o) {
    add(o);
    return *this;
  }
  State& operator-=(const State& o) {
    add(o, Rational(-1));
    return *this;
  }
  State& operator*=(const Rational& a) {
    if (a == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= a;
    }
    return *this;
  }

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Rational& a, State s) { return s *= a; }
  friend bool operator==(const State&, const State&) = default;

 private:
  Terms terms_;
};

/// "-2|1,1,alpha> + 4|1,1,beta>", or "0".
inline std::string to_string(const State& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : s.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag);
    out += to_string(k);
    first = false;
  }
  return out;
}

/// Canonical state equal to c|m,n,tag> for a raw label produced by an action formula.
inline State canonicalize(int m, int n, Tag tag, const Rational& c, const RepParams& params) {
  if (m < 0 || n < 0) {
    throw InternalInconsistency("negative label (" + std::to_string(m) + "," + std::to_string(n) +
                                ") reached canonicalize");
  }
  const int p = params.p;
  State out;
  if (c == 0 || n > p) return out;
  if (tag == Tag::Beta) {
    if (m == 0 || n == 0) return out;
    if (n == p) {
      out.add(alpha(m, p), c / p);
      return out;
    }
  }
  out.add(BasisKet{m, n, tag}, c);
  return out;
}

namespace detail {

inline void add_canonical(State& out, int m, int n, Tag tag, const Rational& c, const RepParams& params) {
  if (c == 0) return;
  out.add(canonicalize(m, n, tag, c, params));
}

inline State act_on_ket(Generator g, const BasisKet& k, const RepParams& params) {
  const int m = k.m;
  const int n = k.n;
  const long long p = params.p;
  State out;
  switch (g) {
    case Generator::BPlus: {
      if (m + 1 > params.window_m) throw WindowOverflow(k, params.window_m);
      if (k.tag == Tag::Alpha) {
        add_canonical(out, m + 1, n, Tag::Alpha, sign_pow(n), params);
        add_canonical(out, m + 1, n, Tag::Beta, Rational(sign_pow(n - 1) * 2LL * n), params);
      } else {
        add_canonical(out, m + 1, n, Tag::Beta, sign_pow(n - 1), params);
      }
      break;
    }
    case Generator::BMinus: {
      if (m == 0) break;  // b- annihilates the whole m = 0 column
      const bool even = m % 2 == 0;
      if (k.tag == Tag::Alpha) {
        if (even) {
          add_canonical(out, m - 1, n, Tag::Alpha, Rational(sign_pow(n) * 1LL * m), params);
          add_canonical(out, m - 1, n, Tag::Beta, Rational(2LL * sign_pow(n + 1) * n * m), params);
        } else {
          add_canonical(out, m - 1, n, Tag::Alpha, Rational(sign_pow(n + 1) * (2LL * n - m - (p - 1))),
                        params);
          add_canonical(out, m - 1, n, Tag::Beta, Rational(2LL * sign_pow(n + 1) * n * (m - 1)), params);
        }
      } else {
        add_canonical(out, m - 1, n, Tag::Alpha, Rational(-sign_pow(n)), params);
        if (even) {
          add_canonical(out, m - 1, n, Tag::Beta, Rational(sign_pow(n) * (2LL * n - m - p)), params);
        } else {
          add_canonical(out, m - 1, n, Tag::Beta, Rational(-sign_pow(n) * (m - 1LL)), params);
        }
      }
      break;
    }
    case Generator::FPlus: {
      if (n <= p - 1) add_canonical(out, m, n + 1, k.tag, 1, params);
      break;
    }
    case Generator::FMinus: {
      if (n == 0) break;  // n(p+1-n) vanishes; beta kets never have n = 0
      if (k.tag == Tag::Alpha) {
        add_canonical(out, m, n - 1, Tag::Alpha, Rational(n * (p + 1 - n)), params);
      } else {
        add_canonical(out, m, n - 1, Tag::Alpha, 1, params);
        add_canonical(out, m, n - 1, Tag::Beta, Rational((n - 1LL) * (p - n)), params);
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Exact action of a generator, extended linearly. Throws WindowOverflow if a b+
/// step would need m > window_m.
inline State act(Generator g, const State& s, const RepParams& params) {
  State out;
  for (const auto& [k, c] : s.terms()) out.add(detail::act_on_ket(g, k, params), c);
  return out;
}

inline State act(Generator g, const BasisKet& k, const RepParams& params) {
  return detail::act_on_ket(g, k, params);
}

/// Number of canonical kets spanning V_{m,n}: 0 outside the carrier space, else 1 or 2.
inline int block_dim(int p, int m, int n) {
  if (m < 0 || n < 0 || n > p) return 0;
  return (m >= 1 && n >= 1 && n <= p - 1) ? 2 : 1;
}

/// Canonical kets of V_{m,n} in basis order.
inline std::vector<BasisKet> block_kets(int p, int m, int n) {
  std::vector<BasisKet> out;
  const int d = block_dim(p, m, n);
  if (d >= 1) out.push_back(alpha(m, n));
  if (d == 2) out.push_back(beta(m, n));
  return out;
}

/// All canonical kets with m <= window_m, ordered by (m, n, tag).
inline std::vector<BasisKet> enumerate_basis(const RepParams& params) {
  std::vector<BasisKet> out;
  for (int m = 0; m <= params.window_m; ++m)
    for (int n = 0; n <= params.p; ++n)
      for (const auto& k : block_kets(params.p, m, n)) out.push_back(k);
  return out;
}

}  // namespace rpbs
