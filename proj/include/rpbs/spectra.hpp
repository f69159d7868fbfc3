#pragma once

// Finite invariant blocks, exact operator matrices, the T operator inside
// V_{m,n}, and the generalized Jaynes-Cummings Hamiltonian
//   H = w_b N_b + w_f N_f + lambda (Q+ + Q-)
// restricted to blocks of fixed K = m + n.

#include "rpbs/fock.hpp"
#include "rpbs/free_algebra.hpp"
#include "rpbs/linalg.hpp"
#include "rpbs/metric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpbs {

class BlockEscape : public std::runtime_error {
 public:
  BlockEscape(const BasisKet& source, const BasisKet& escaped)
      : std::runtime_error("image of " + to_string(source) + " has a component on " + to_string(escaped) +
                           " outside the block"),
        from(source),
        to(escaped) {}
  BasisKet from;
  BasisKet to;
};

/// Kets of total excitation K = m + n (m <= window_m, n <= p) in basis order.
inline std::vector<BasisKet> k_block_kets(const RepParams& params, int K) {
  std::vector<BasisKet> out;
  for (const auto& k : enumerate_basis(params))
    if (k.m + k.n == K) out.push_back(k);
  return out;
}

struct KBlock {
  int K = 0;
  std::vector<BasisKet> kets;
  ExactMatrix gram;
  std::size_t dim() const { return kets.size(); }
};

inline KBlock make_k_block(const Metric& metric, int K) {
  if (K < 0 || K > metric.params().window_m) throw std::invalid_argument("K-block does not fit the window");
  KBlock b{K, k_block_kets(metric.params(), K), {}};
  b.gram = metric.gram_matrix(b.kets);
  return b;
}

/// Exact matrix of e on span(kets): column j holds the coordinates of e.kets[j].
/// Throws BlockEscape if an image leaves the span.
inline ExactMatrix materialize(const FAElement& e, const RepParams& params, const std::vector<BasisKet>& kets) {
  std::map<BasisKet, std::size_t> index;
  for (std::size_t i = 0; i < kets.size(); ++i) index[kets[i]] = i;
  ExactMatrix out(kets.size(), kets.size());
  for (std::size_t j = 0; j < kets.size(); ++j) {
    const State image = evaluate(e, kets[j], params);
    for (const auto& [k, c] : image.terms()) {
      auto it = index.find(k);
      if (it == index.end()) throw BlockEscape(kets[j], k);
      out(it->second, j) = c;
    }
  }
  return out;
}

// ---- T inside V_{m,n} -----------------------------------------------------

struct TBlock {
  int m = 0;
  int n = 0;
  ExactMatrix matrix;
};

struct TLadderReport {
  bool block_preserving = true;
  bool interchanges_all_2d = true;  // no 2-dim block has a diagonal T matrix
  std::size_t two_dim_blocks = 0;
  std::vector<TBlock> blocks;
  std::string detail;
};

/// T on every V_{m,n} with m <= window_m - max_rise(T).
inline TLadderReport t_ladder_report(const RepParams& params) {
  const FAElement t = named_operator(NamedOperator::T);
  const int top = params.window_m - max_rise(t);
  if (top < 0) throw std::invalid_argument("window_m too small for T");
  TLadderReport report;
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= params.p; ++n) {
      const auto kets = block_kets(params.p, m, n);
      try {
        TBlock b{m, n, materialize(t, params, kets)};
        if (kets.size() == 2) {
          ++report.two_dim_blocks;
          if (b.matrix.is_diagonal()) {
            report.interchanges_all_2d = false;
            if (report.detail.empty())
              report.detail = "T is diagonal on V_{" + std::to_string(m) + "," + std::to_string(n) + "}";
          }
        }
        report.blocks.push_back(std::move(b));
      } catch (const BlockEscape& e) {
        report.block_preserving = false;
        if (report.detail.empty()) report.detail = e.what();
      }
    }
  return report;
}

// ---- Hamiltonian ------------------------------------------------------------

struct HamiltonianParams {
  double omega_b = 1.0;
  double omega_f = 1.0;
  double lambda = 0.1;
  /// Optional per-(m,n) energies replacing omega_b / omega_f on V_{m,n}.
  std::function<double(int, int)> omega_b_at;
  std::function<double(int, int)> omega_f_at;
};

/// H split into exact parts; the real weights enter only after materialization.
struct Hamiltonian {
  FAElement number_b;     // N_b
  FAElement number_f;     // N_f
  FAElement interaction;  // Q+ + Q-
  HamiltonianParams weights;
};

inline Hamiltonian hamiltonian(const HamiltonianParams& h) {
  return {named_operator(NamedOperator::Nb), named_operator(NamedOperator::Nf),
          named_operator(NamedOperator::QPlus) + named_operator(NamedOperator::QMinus), h};
}

/// Exact element w_b N_b + w_f N_f + lambda (Q+ + Q-) for rational parameters.
inline FAElement hamiltonian_exact(const Rational& omega_b, const Rational& omega_f, const Rational& lambda) {
  const Hamiltonian parts = hamiltonian({});
  return LaurentPoly(omega_b) * parts.number_b + LaurentPoly(omega_f) * parts.number_f +
         LaurentPoly(lambda) * parts.interaction;
}

/// H on a K-block, expressed in the orthonormal basis obtained from the exact
/// factorization G = L D L^T: S = D^{1/2} L^T H L^{-T} D^{-1/2}.
struct OrthonormalBlock {
  int K = 0;
  std::vector<BasisKet> kets;
  ExactMatrix gram;
  ExactLDLT factor;
  Eigen::MatrixXd matrix;  // S, before symmetrization
  double asymmetry = 0.0;  // max |S - S^T|
};

inline OrthonormalBlock orthonormal_hamiltonian(const Metric& metric, const Hamiltonian& h, int K) {
  const RepParams& params = metric.params();
  if (K + 1 > params.window_m) throw std::invalid_argument("K-block needs window_m >= K + 1");
  KBlock block = make_k_block(metric, K);
  OrthonormalBlock out{K, block.kets, block.gram, orthonormalize(block.gram).exact, {}, 0.0};
  const std::size_t d = block.dim();

  const ExactMatrix& lu = out.factor.unit_lower;
  const auto lu_inv = inverse(lu);
  if (!lu_inv) throw InternalInconsistency("unit lower factor is singular");
  const ExactMatrix left = lu.transpose();
  const ExactMatrix right = lu_inv->transpose();

  auto conj = [&](const FAElement& e) { return left * materialize(e, params, block.kets) * right; };
  const ExactMatrix sb = conj(h.number_b);
  const ExactMatrix sf = conj(h.number_f);
  const ExactMatrix si = conj(h.interaction);

  const HamiltonianParams& w = h.weights;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const auto& kj = block.kets[j];
    const double wb = w.omega_b_at ? w.omega_b_at(kj.m, kj.n) : w.omega_b;
    const double wf = w.omega_f_at ? w.omega_f_at(kj.m, kj.n) : w.omega_f;
    for (std::size_t i = 0; i < d; ++i) {
      double v = 0.0;
      if (sb(i, j) != 0) v += wb * to_double(sb(i, j));
      if (sf(i, j) != 0) v += wf * to_double(sf(i, j));
      if (si(i, j) != 0) v += w.lambda * to_double(si(i, j));
      if (v != 0.0 && i != j) v *= std::sqrt(to_double(out.factor.diag[i] / out.factor.diag[j]));
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  out.matrix = s;
  out.asymmetry = d ? (s - s.transpose()).cwiseAbs().maxCoeff() : 0.0;
  return out;
}

struct Spectrum {
  int K = 0;
  std::vector<BasisKet> kets;
  std::vector<double> eigenvalues;  // ascending
  Eigen::MatrixXd eigenvectors;     // orthonormal-basis columns
  double asymmetry = 0.0;
};

namespace detail {

inline void diagonalize(const Eigen::MatrixXd& s, std::vector<double>& values, Eigen::MatrixXd& vectors) {
  const Eigen::Index d = s.rows();
  Eigen::MatrixXd off = s;
  off.diagonal().setZero();
  if (d == 0) return;
  if ((off.array() == 0.0).all()) {
    // Exactly diagonal: keep the entries bit-for-bit.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return s(a, a) < s(b, b); });
    vectors = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      const Eigen::Index r = order[static_cast<std::size_t>(c)];
      values.push_back(s(r, r));
      vectors(r, c) = 1.0;
    }
    return;
  }
  const Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  for (Eigen::Index i = 0; i < d; ++i) values.push_back(es.eigenvalues()(i));
  vectors = es.eigenvectors();
}

}  // namespace detail

inline Spectrum spectrum(const Metric& metric, const HamiltonianParams& h, int K) {
  const OrthonormalBlock ob = orthonormal_hamiltonian(metric, hamiltonian(h), K);
  Spectrum out{K, ob.kets, {}, {}, ob.asymmetry};
  detail::diagonalize(ob.matrix, out.eigenvalues, out.eigenvectors);
  return out;
}

/// Convenience overload sizing the window to the block.
inline Spectrum spectrum(int p, const HamiltonianParams& h, int K) {
  return spectrum(Metric(RepParams(p, K + 1)), h, K);
}

struct Trajectory {
  int K = 0;
  std::vector<BasisKet> kets;
  std::vector<double> times;
  std::vector<std::vector<std::complex<double>>> coefficients;  // in the ket basis
  std::vector<std::vector<std::complex<double>>> amplitudes;    // in the orthonormal basis
  std::vector<double> norms;                                    // Gram norm squared of each state
};

/// exp(-iHt) applied to `initial` (rescaled to unit Gram norm) for each t.
inline Trajectory evolve(const Metric& metric, const HamiltonianParams& h, int K, const State& initial,
                         const std::vector<double>& times) {
  const OrthonormalBlock ob = orthonormal_hamiltonian(metric, hamiltonian(h), K);
  const std::size_t d = ob.kets.size();
  const auto di = static_cast<Eigen::Index>(d);

  std::map<BasisKet, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[ob.kets[i]] = i;
  std::vector<Rational> x0(d);
  for (const auto& [k, c] : initial.terms()) {
    auto it = index.find(k);
    if (it == index.end()) throw std::invalid_argument("initial state has " + to_string(k) + " outside the K-block");
    x0[it->second] = c;
  }
  Rational norm2 = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) norm2 += x0[i] * ob.gram(i, j) * x0[j];
  if (norm2 <= 0) throw std::invalid_argument("initial state has zero norm");

  // z0 = D^{1/2} L^T x0 / |x0|
  const double scale = 1.0 / std::sqrt(to_double(norm2));
  Eigen::VectorXd sqrt_d(di);
  for (std::size_t i = 0; i < d; ++i) sqrt_d(static_cast<Eigen::Index>(i)) = std::sqrt(to_double(ob.factor.diag[i]));
  Eigen::VectorXd z0 = Eigen::VectorXd::Zero(di);
  for (std::size_t i = 0; i < d; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < d; ++j) acc += ob.factor.unit_lower(j, i) * x0[j];
    z0(static_cast<Eigen::Index>(i)) = sqrt_d(static_cast<Eigen::Index>(i)) * to_double(acc) * scale;
  }

  std::vector<double> values;
  Eigen::MatrixXd vectors;
  detail::diagonalize(ob.matrix, values, vectors);
  const Eigen::VectorXd c0 = vectors.transpose() * z0;

  const auto lu_inv = inverse(ob.factor.unit_lower);
  const Eigen::MatrixXd back = lu_inv->transpose().to_double();  // L_u^{-T}
  const Eigen::MatrixXd gram = ob.gram.to_double();

  Trajectory out{K, ob.kets, times, {}, {}, {}};
  for (double t : times) {
    Eigen::VectorXcd phases(di);
    for (Eigen::Index i = 0; i < di; ++i)
      phases(i) = c0(i) * std::exp(std::complex<double>(0.0, -values[static_cast<std::size_t>(i)] * t));
    const Eigen::VectorXcd z = vectors.cast<std::complex<double>>() * phases;
    Eigen::VectorXcd x = back.cast<std::complex<double>>() * z.cwiseQuotient(sqrt_d.cast<std::complex<double>>());
    const double n2 = (x.adjoint() * gram.cast<std::complex<double>>() * x)(0, 0).real();
    out.coefficients.emplace_back(x.data(), x.data() + di);
    out.amplitudes.emplace_back(z.data(), z.data() + di);
    out.norms.push_back(n2);
  }
  return out;
}

}  // namespace rpbs
