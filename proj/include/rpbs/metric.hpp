#pragma once

// Inner product induced by (b-)^dagger = b+, (f-)^dagger = f+ and <0|0> = 1.
//
// Gram blocks are built by recursion over creation steps. For V_{m,n} the
// candidate spanning columns are b+ applied to the kets of V_{m-1,n} and f+
// applied to the kets of V_{m,n-1}; an invertible square selection C (b+
// columns preferred) gives C^T G C = M with M_ij = <y_i, X_i^dagger X_j y_j>,
// evaluated in the already-known predecessor block of y_i.

#include "rpbs/fock.hpp"
#include "rpbs/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpbs {

struct GramBlock {
  int m = 0;
  int n = 0;
  std::vector<BasisKet> kets;  // alpha, then beta when dim = 2
  ExactMatrix matrix;
};

class PositivityFailure : public std::runtime_error {
 public:
  PositivityFailure(std::size_t minor_order, Rational minor_value)
      : std::runtime_error("leading minor of order " + std::to_string(minor_order) +
                           " is not positive: " + to_string(minor_value)),
        order(minor_order),
        value(std::move(minor_value)) {}
  std::size_t order;
  Rational value;
};

/// All Gram blocks V_{m,n} with m <= window_m, 0 <= n <= p. Immutable after construction.
class Metric {
 public:
  explicit Metric(const RepParams& params) : params_(params) {
    const int p = params_.p;
    blocks_.resize(static_cast<std::size_t>((params_.window_m + 1) * (p + 1)));
    for (int m = 0; m <= params_.window_m; ++m)
      for (int n = 0; n <= p; ++n) blocks_[index(m, n)] = build(m, n);
  }

  const RepParams& params() const { return params_; }

  const GramBlock& block(int m, int n) const {
    if (m < 0 || m > params_.window_m || n < 0 || n > params_.p) {
      throw std::out_of_range("no Gram block for (m,n) = (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    return blocks_[index(m, n)];
  }

  /// <s, t>; terms in different V_{m,n} are orthogonal.
  Rational inner(const State& s, const State& t) const {
    Rational out = 0;
    for (const auto& [ks, cs] : s.terms())
      for (const auto& [kt, ct] : t.terms()) {
        if (ks.m != kt.m || ks.n != kt.n) continue;
        const GramBlock& g = block(ks.m, ks.n);
        out += cs * ct * g.matrix(slot(ks), slot(kt));
      }
    return out;
  }

  Rational inner(const BasisKet& a, const BasisKet& b) const { return inner(State(a), State(b)); }

  /// Gram matrix of an arbitrary list of canonical kets.
  ExactMatrix gram_matrix(const std::vector<BasisKet>& kets) const {
    ExactMatrix g(kets.size(), kets.size());
    for (std::size_t i = 0; i < kets.size(); ++i)
      for (std::size_t j = 0; j < kets.size(); ++j) g(i, j) = inner(kets[i], kets[j]);
    return g;
  }

 private:
  std::size_t index(int m, int n) const { return static_cast<std::size_t>(m * (params_.p + 1) + n); }
  static std::size_t slot(const BasisKet& k) { return k.tag == Tag::Alpha ? 0 : 1; }

  // Coordinates of s in the basis of V_{m,n}; every term must lie there.
  std::vector<Rational> coords(const State& s, int m, int n) const {
    std::vector<Rational> out(static_cast<std::size_t>(block_dim(params_.p, m, n)));
    for (const auto& [k, c] : s.terms()) {
      if (k.m != m || k.n != n) throw InternalInconsistency("creation step left V_{m,n}: " + to_string(s));
      out[slot(k)] = c;
    }
    return out;
  }

  GramBlock build(int m, int n) const {
    const int p = params_.p;
    GramBlock g{m, n, block_kets(p, m, n), {}};
    const std::size_t dim = g.kets.size();
    if (m == 0 && n == 0) {
      g.matrix = ExactMatrix(1, 1);
      g.matrix(0, 0) = 1;
      return g;
    }

    struct Column {
      Generator step;
      BasisKet source;
      State image;
    };
    std::vector<Column> candidates;
    if (m >= 1)
      for (const auto& y : block_kets(p, m - 1, n)) candidates.push_back({Generator::BPlus, y, act(Generator::BPlus, y, params_)});
    if (n >= 1)
      for (const auto& y : block_kets(p, m, n - 1)) candidates.push_back({Generator::FPlus, y, act(Generator::FPlus, y, params_)});

    std::vector<Column> chosen;
    ExactMatrix cmat(dim, 0);
    for (auto& col : candidates) {
      if (chosen.size() == dim) break;
      ExactMatrix trial(dim, chosen.size() + 1);
      for (std::size_t j = 0; j < chosen.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) trial(i, j) = cmat(i, j);
      const auto v = coords(col.image, m, n);
      for (std::size_t i = 0; i < dim; ++i) trial(i, chosen.size()) = v[i];
      if (rank(trial) == chosen.size() + 1) {
        cmat = std::move(trial);
        chosen.push_back(col);
      }
    }
    if (chosen.size() != dim) {
      throw InternalInconsistency("creation steps do not span V_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    }

    ExactMatrix M(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const State back = act(dagger(chosen[i].step), chosen[j].image, params_);
        M(i, j) = inner(State(chosen[i].source), back);
      }
    const auto cinv = inverse(cmat);
    if (!cinv) throw InternalInconsistency("singular creation matrix");
    g.matrix = cinv->transpose() * M * *cinv;
    if (!g.matrix.is_symmetric()) {
      throw InternalInconsistency("Gram block (" + std::to_string(m) + "," + std::to_string(n) + ") is not symmetric");
    }
    return g;
  }

  RepParams params_;
  std::vector<GramBlock> blocks_;
};

/// Gram block of V_{m,n} for order p (builds the table up to m).
inline GramBlock gram_block(const RepParams& params, int m, int n) {
  if (n < 0 || n > params.p || m < 0 || m > params.window_m) {
    throw std::invalid_argument("gram_block needs 0 <= n <= p and 0 <= m <= window_m");
  }
  return Metric(RepParams(params.p, m)).block(m, n);
}

struct AdjointnessFailure {
  Generator raising;
  BasisKet u;
  BasisKet v;
  Rational lhs;  // <X u, v>
  Rational rhs;  // <u, X^dagger v>
};

struct AdjointnessReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::optional<AdjointnessFailure> failure;
};

/// <b+ u, v> = <u, b- v> and <f+ u, v> = <u, f- v> for all kets with m <= window_m - 1.
inline AdjointnessReport adjointness_check(const Metric& metric) {
  const RepParams& params = metric.params();
  if (params.window_m < 1) throw std::invalid_argument("adjointness_check needs window_m >= 1");
  const auto kets = enumerate_basis(RepParams(params.p, params.window_m - 1));
  AdjointnessReport report;
  for (Generator raise : {Generator::BPlus, Generator::FPlus}) {
    for (const auto& u : kets) {
      const State xu = act(raise, u, params);
      for (const auto& v : kets) {
        const Rational lhs = metric.inner(xu, State(v));
        const Rational rhs = metric.inner(State(u), act(dagger(raise), v, params));
        ++report.pairs_checked;
        if (lhs != rhs) {
          report.passed = false;
          report.failure = AdjointnessFailure{raise, u, v, lhs, rhs};
          return report;
        }
      }
    }
  }
  return report;
}

inline AdjointnessReport adjointness_check(const RepParams& params) { return adjointness_check(Metric(params)); }

/// Exact G = L D L^T plus its floating Cholesky factor L sqrt(D).
struct Orthonormalization {
  ExactLDLT exact;
  Eigen::MatrixXd lower;  // G ~= lower * lower^T
  double condition = 1.0;  // 2-norm condition number of G
};

/// Throws PositivityFailure naming the first nonpositive leading minor.
inline Orthonormalization orthonormalize(const ExactMatrix& gram) {
  Orthonormalization out{ldlt(gram), {}, 1.0};
  if (out.exact.pivot_failure) {
    const std::size_t j = *out.exact.pivot_failure;
    Rational minor = 1;
    for (std::size_t k = 0; k <= j; ++k) minor *= out.exact.diag[k];
    throw PositivityFailure(j + 1, minor);
  }
  const std::size_t n = gram.rows();
  Eigen::MatrixXd lu = out.exact.unit_lower.to_double();
  Eigen::VectorXd sd(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) sd(static_cast<Eigen::Index>(i)) = std::sqrt(to_double(out.exact.diag[i]));
  out.lower = lu * sd.asDiagonal();
  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram.to_double(), Eigen::EigenvaluesOnly);
    out.condition = es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
  }
  return out;
}

inline Orthonormalization orthonormalize(const Metric& metric, int m, int n) {
  return orthonormalize(metric.block(m, n).matrix);
}

}  // namespace rpbs
