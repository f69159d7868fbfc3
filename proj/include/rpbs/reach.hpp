#pragma once

// Cyclicity of the Fock-like module on a finite window.
//
// Downward: every nonzero vector of V_{m,n} must be sent to a nonzero multiple
// of |0> by some annihilator word of length m+n. Equivalently the functionals
// v -> <0-component of w.v> over such words span the dual of V_{m,n}.
// Upward: creator words applied to |0> must span every V_{m,n}.

#include "rpbs/fock.hpp"
#include "rpbs/free_algebra.hpp"
#include "rpbs/linalg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rpbs {

struct CyclicityReport {
  bool cyclic = true;
  /// For each in-guard ket, an annihilator word w with nonzero <0|-component of w.ket.
  std::map<BasisKet, Word> witness_words;
  /// For each in-guard (m,n), creator words whose images of |0> span V_{m,n}.
  std::map<std::pair<int, int>, std::vector<Word>> spanning_words;
  std::optional<BasisKet> stuck_ket;
  std::string detail;
};

namespace detail {

struct Tagged {
  std::vector<Rational> vec;
  Word word;
};

// Keeps the candidates that increase the rank, up to `dim` of them.
inline std::vector<Tagged> independent_subset(const std::vector<Tagged>& cands, std::size_t dim) {
  std::vector<Tagged> kept;
  for (const auto& c : cands) {
    if (kept.size() == dim) break;
    ExactMatrix m(kept.size() + 1, dim);
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = kept[i].vec[j];
    for (std::size_t j = 0; j < dim; ++j) m(kept.size(), j) = c.vec[j];
    if (rank(m) == kept.size() + 1) kept.push_back(c);
  }
  return kept;
}

inline std::vector<Rational> block_coords(const State& s, int p, int m, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(block_dim(p, m, n)));
  for (const auto& [k, c] : s.terms()) {
    if (k.m != m || k.n != n) throw InternalInconsistency("ladder step left its target block");
    out[k.tag == Tag::Alpha ? 0 : 1] = c;
  }
  return out;
}

}  // namespace detail

/// Cyclicity over all kets with m <= window_m - guard.
inline CyclicityReport cyclicity_check(const RepParams& params, int guard) {
  if (guard < 0 || guard > params.window_m) throw std::invalid_argument("cyclicity_check needs 0 <= guard <= window_m");
  const int p = params.p;
  const int top = params.window_m - guard;
  CyclicityReport report;
  auto at = [p](int m, int n) { return static_cast<std::size_t>(m * (p + 1) + n); };
  const std::size_t cells = static_cast<std::size_t>((top + 1) * (p + 1));

  // Downward: functionals on V_{m,n}, row vectors tagged with their annihilator word.
  std::vector<std::vector<detail::Tagged>> down(cells);
  down[at(0, 0)] = {{{Rational(1)}, {}}};
  for (int m = 0; m <= top; ++m) {
    for (int n = 0; n <= p; ++n) {
      if (m == 0 && n == 0) continue;
      const auto kets = block_kets(p, m, n);
      std::vector<detail::Tagged> cands;
      auto pull_back = [&](Generator lower, int sm, int sn) {
        std::vector<std::vector<Rational>> images;
        for (const auto& k : kets) images.push_back(detail::block_coords(act(lower, k, params), p, sm, sn));
        for (const auto& phi : down[at(sm, sn)]) {
          detail::Tagged t{std::vector<Rational>(kets.size()), phi.word};
          t.word.push_back(lower);  // applied first
          for (std::size_t j = 0; j < kets.size(); ++j)
            for (std::size_t i = 0; i < phi.vec.size(); ++i) t.vec[j] += phi.vec[i] * images[j][i];
          cands.push_back(std::move(t));
        }
      };
      if (m >= 1) pull_back(Generator::BMinus, m - 1, n);
      if (n >= 1) pull_back(Generator::FMinus, m, n - 1);
      down[at(m, n)] = detail::independent_subset(cands, kets.size());
    }
  }

  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= p; ++n) {
      const auto kets = block_kets(p, m, n);
      const auto& funcs = down[at(m, n)];
      for (std::size_t j = 0; j < kets.size(); ++j) {
        const detail::Tagged* hit = nullptr;
        for (const auto& f : funcs)
          if (f.vec[j] != 0) {
            hit = &f;
            break;
          }
        if (hit) report.witness_words[kets[j]] = hit->word;
      }
      if (funcs.size() != kets.size() || report.witness_words.count(kets.back()) == 0 ||
          report.witness_words.count(kets.front()) == 0) {
        report.cyclic = false;
        if (!report.stuck_ket) {
          report.stuck_ket = kets.front();
          for (const auto& k : kets)
            if (!report.witness_words.count(k)) report.stuck_ket = k;
          report.detail = "annihilator words do not reach |0> from V_{" + std::to_string(m) + "," +
                          std::to_string(n) + "}";
        }
      }
    }

  // Upward: images of |0> under creator words.
  std::vector<std::vector<detail::Tagged>> up(cells);
  up[at(0, 0)] = {{{Rational(1)}, {}}};
  for (int m = 0; m <= top; ++m) {
    for (int n = 0; n <= p; ++n) {
      if (m == 0 && n == 0) continue;
      std::vector<detail::Tagged> cands;
      auto push_forward = [&](Generator raise, int sm, int sn) {
        const auto src = block_kets(p, sm, sn);
        for (const auto& v : up[at(sm, sn)]) {
          State s;
          for (std::size_t i = 0; i < src.size(); ++i) s.add(src[i], v.vec[i]);
          detail::Tagged t{detail::block_coords(act(raise, s, params), p, m, n), {raise}};
          t.word.insert(t.word.end(), v.word.begin(), v.word.end());
          cands.push_back(std::move(t));
        }
      };
      if (m >= 1) push_forward(Generator::BPlus, m - 1, n);
      if (n >= 1) push_forward(Generator::FPlus, m, n - 1);
      const std::size_t dim = static_cast<std::size_t>(block_dim(p, m, n));
      up[at(m, n)] = detail::independent_subset(cands, dim);
      if (up[at(m, n)].size() != dim && report.cyclic) {
        report.cyclic = false;
        report.stuck_ket = block_kets(p, m, n).back();
        report.detail = "creator words from |0> do not span V_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      }
    }
  }
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= p; ++n) {
      auto& words = report.spanning_words[{m, n}];
      for (const auto& t : up[at(m, n)]) words.push_back(t.word);
    }
  return report;
}

}  // namespace rpbs
