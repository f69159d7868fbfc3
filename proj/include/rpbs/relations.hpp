#pragma once

// Catalog of the defining trilinear relations, the R+ bracket identities and the
// normal-ordering lemma families, each stored as an element that must act as 0.

#include "rpbs/fock.hpp"
#include "rpbs/free_algebra.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpbs {

enum class RelationGroup { MixedTrilinear, PureTrilinear, RBracket, Auxiliary, LemmaFamily };

inline std::string_view to_string(RelationGroup g) {
  switch (g) {
    case RelationGroup::MixedTrilinear: return "trilinear/mixed";
    case RelationGroup::PureTrilinear: return "trilinear/pure";
    case RelationGroup::RBracket: return "R+ brackets";
    case RelationGroup::Auxiliary: return "auxiliary";
    case RelationGroup::LemmaFamily: return "lemma family";
  }
  return "?";
}

/// `name` reads "lhs = rhs" in the operator-expression syntax; `element` is lhs - rhs.
struct RelationEntry {
  std::string name;
  FAElement element;
  RelationGroup group;
  std::string source;
};

namespace detail {

struct Gens {
  FAElement bp = gen(Generator::BPlus);
  FAElement bm = gen(Generator::BMinus);
  FAElement fp = gen(Generator::FPlus);
  FAElement fm = gen(Generator::FMinus);
  FAElement rp = named_operator(NamedOperator::RPlus);
};

inline RelationEntry entry(std::string lhs_text, std::string rhs_text, const FAElement& lhs, const FAElement& rhs,
                           RelationGroup group, std::string source) {
  return {lhs_text + " = " + rhs_text, lhs - rhs, group, std::move(source)};
}

}  // namespace detail

/// The 24 mixed and 8 pure trilinear relations, in presentation order (row by row).
inline std::vector<RelationEntry> trilinear_relations() {
  using detail::entry;
  const detail::Gens g;
  const auto& [bp, bm, fp, fm, rp] = g;
  const FAElement zero;
  auto C = [](const FAElement& x, const FAElement& y) { return commutator(x, y); };
  auto A = [](const FAElement& x, const FAElement& y) { return anticommutator(x, y); };
  const LaurentPoly two = 2;
  const auto mixed = RelationGroup::MixedTrilinear;
  const auto pure = RelationGroup::PureTrilinear;
  const std::string ms = "mixed", ps = "pure";

  return {
      entry("[{b+,b+},f-]", "0", C(A(bp, bp), fm), zero, mixed, ms),
      entry("[[f+,f-],b-]", "0", C(C(fp, fm), bm), zero, mixed, ms),
      entry("[{b+,b+},f+]", "0", C(A(bp, bp), fp), zero, mixed, ms),
      entry("[{b-,b-},f+]", "0", C(A(bm, bm), fp), zero, mixed, ms),

      entry("[{b-,b-},f-]", "0", C(A(bm, bm), fm), zero, mixed, ms),
      entry("[{b+,b-},f-]", "0", C(A(bp, bm), fm), zero, mixed, ms),
      entry("[{f-,b-},b-]", "0", C(A(fm, bm), bm), zero, mixed, ms),
      entry("[{f-,b+},b+]", "0", C(A(fm, bp), bp), zero, mixed, ms),

      entry("[{f-,b+},b-]", "-2*f-", C(A(fm, bp), bm), -(two * fm), mixed, ms),
      entry("{{b-,f+},f-}", "2*b-", A(A(bm, fp), fm), two * bm, mixed, ms),
      entry("[{f+,b+},b+]", "0", C(A(fp, bp), bp), zero, mixed, ms),
      entry("[{f+,b-},b-]", "0", C(A(fp, bm), bm), zero, mixed, ms),

      entry("[{b-,f-},b+]", "2*f-", C(A(bm, fm), bp), two * fm, mixed, ms),
      entry("{{f-,b-},f+}", "2*b-", A(A(fm, bm), fp), two * bm, mixed, ms),
      entry("{{b-,f-},f-}", "0", A(A(bm, fm), fm), zero, mixed, ms),
      entry("{{b-,f+},f+}", "0", A(A(bm, fp), fp), zero, mixed, ms),

      entry("[{b-,b+},f+]", "0", C(A(bm, bp), fp), zero, mixed, ms),
      entry("[[f-,f+],b+]", "0", C(C(fm, fp), bp), zero, mixed, ms),
      entry("{{b+,f+},f+}", "0", A(A(bp, fp), fp), zero, mixed, ms),
      entry("{{b+,f-},f-}", "0", A(A(bp, fm), fm), zero, mixed, ms),

      entry("[{f+,b-},b+]", "2*f+", C(A(fp, bm), bp), two * fp, mixed, ms),
      entry("[{b+,f+},b-]", "-2*f+", C(A(bp, fp), bm), -(two * fp), mixed, ms),
      entry("{{b+,f-},f+}", "2*b+", A(A(bp, fm), fp), two * bp, mixed, ms),
      entry("{{f+,b+},f-}", "2*b+", A(A(fp, bp), fm), two * bp, mixed, ms),

      entry("[b-,{b+,b-}]", "2*b-", C(bm, A(bp, bm)), two * bm, pure, ps),
      entry("[b+,{b+,b+}]", "0", C(bp, A(bp, bp)), zero, pure, ps),
      entry("[b+,{b-,b-}]", "-4*b-", C(bp, A(bm, bm)), LaurentPoly(-4) * bm, pure, ps),
      entry("[f-,[f+,f-]]", "2*f-", C(fm, C(fp, fm)), two * fm, pure, ps),
      entry("[b-,{b-,b-}]", "0", C(bm, A(bm, bm)), zero, pure, ps),
      entry("[b-,{b+,b+}]", "4*b+", C(bm, A(bp, bp)), LaurentPoly(4) * bp, pure, ps),
      entry("[b+,{b-,b+}]", "-2*b+", C(bp, A(bm, bp)), -(two * bp), pure, ps),
      entry("[f+,[f-,f+]]", "2*f+", C(fp, C(fm, fp)), two * fp, pure, ps),
  };
}

/// Bracket identities of R+ with the generators.
inline std::vector<RelationEntry> r_plus_identities() {
  using detail::entry;
  const detail::Gens g;
  const FAElement zero;
  const auto grp = RelationGroup::RBracket;
  return {
      entry("[R+,b-]", "-f+", commutator(g.rp, g.bm), -g.fp, grp, "R+ brackets"),
      entry("{R+,f-}", "b+", anticommutator(g.rp, g.fm), g.bp, grp, "R+ brackets"),
      entry("[R+,b+]", "0", commutator(g.rp, g.bp), zero, grp, "R+ brackets"),
      entry("{R+,f+}", "0", anticommutator(g.rp, g.fp), zero, grp, "R+ brackets"),
  };
}

/// The 32 trilinear relations followed by the 4 R+ bracket identities.
inline std::vector<RelationEntry> relation_catalog() {
  auto out = trilinear_relations();
  for (auto& e : r_plus_identities()) out.push_back(std::move(e));
  return out;
}

/// Non-parametric consequences used by the normal-ordering arguments.
inline std::vector<RelationEntry> auxiliary_identities() {
  using detail::entry;
  const detail::Gens g;
  const FAElement zero;
  const auto grp = RelationGroup::Auxiliary;
  const FAElement bp2 = g.bp * g.bp;
  return {
      entry("(R+)^2", "0", g.rp * g.rp, zero, grp, "R+ nilpotent"),
      entry("[f-,(b+)^2]", "0", commutator(g.fm, bp2), zero, grp, "f commutes with (b+)^2"),
      entry("[f+,(b+)^2]", "0", commutator(g.fp, bp2), zero, grp, "f commutes with (b+)^2"),
  };
}

enum class LemmaFamily {
  BMinusFPlusPower,   // b- (f+)^k
  BMinusBPlusPower,   // b- (b+)^m
  FPlusBPlusPower,    // f+ (b+)^n
  BPlusFPlusPower,    // b+ (f+)^k
  FMinusFPlusPower,   // f- (f+)^m
  FMinusBPlusPower,   // f- (b+)^n
};

inline constexpr std::array<LemmaFamily, 6> kAllLemmaFamilies = {
    LemmaFamily::BMinusFPlusPower, LemmaFamily::BMinusBPlusPower, LemmaFamily::FPlusBPlusPower,
    LemmaFamily::BPlusFPlusPower,  LemmaFamily::FMinusFPlusPower, LemmaFamily::FMinusBPlusPower};

/// One instance of a normal-ordering identity, exponent k >= 0.
inline RelationEntry lemma_instance(LemmaFamily family, int k) {
  if (k < 0) throw std::invalid_argument("lemma exponent must be >= 0");
  const detail::Gens g;
  const auto& [bp, bm, fp, fm, rp] = g;
  auto pw = [](const FAElement& x, int e) { return e < 0 ? FAElement() : power(x, e); };
  const LaurentPoly kk = k;
  const LaurentPoly sgn = sign_pow(k + 1);
  const std::string ks = std::to_string(k);
  const bool even = k % 2 == 0;
  const auto grp = RelationGroup::LemmaFamily;

  switch (family) {
    case LemmaFamily::BMinusFPlusPower: {
      FAElement rhs = sgn * LaurentPoly(k - 1) * (pw(fp, k) * bm) + sgn * kk * (pw(fp, k - 1) * bm * fp);
      return detail::entry("b- (f+)^" + ks,
                           "(-1)^(k+1) (k-1) (f+)^k b- + (-1)^(k+1) k (f+)^(k-1) b- f+ at k=" + ks,
                           bm * pw(fp, k), rhs, grp, "b- past powers of f+");
    }
    case LemmaFamily::BMinusBPlusPower: {
      FAElement rhs = even ? pw(bp, k) * bm + kk * pw(bp, k - 1)
                           : pw(bp, k - 1) * bm * bp + LaurentPoly(k - 1) * pw(bp, k - 1);
      return detail::entry("b- (b+)^" + ks,
                           even ? "(b+)^m b- + m (b+)^(m-1) at m=" + ks
                                : "(b+)^(m-1) b- b+ + (m-1) (b+)^(m-1) at m=" + ks,
                           bm * pw(bp, k), rhs, grp, "b- past powers of b+");
    }
    case LemmaFamily::FPlusBPlusPower: {
      FAElement rhs = even ? pw(bp, k) * fp : pw(bp, k - 1) * fp * bp;
      return detail::entry("f+ (b+)^" + ks, even ? "(b+)^n f+ at n=" + ks : "(b+)^(n-1) f+ b+ at n=" + ks,
                           fp * pw(bp, k), rhs, grp, "f+ past powers of b+");
    }
    case LemmaFamily::BPlusFPlusPower: {
      FAElement rhs = LaurentPoly(sign_pow(k)) * (pw(fp, k) * bp) + LaurentPoly(2 * k) * (rp * pw(fp, k - 1));
      return detail::entry("b+ (f+)^" + ks, "(-f+)^k b+ + 2k R+ (f+)^(k-1) at k=" + ks, bp * pw(fp, k), rhs,
                           grp, "b+ past powers of f+");
    }
    case LemmaFamily::FMinusFPlusPower: {
      FAElement rhs = LaurentPoly(-(k - 1)) * (pw(fp, k) * fm) + kk * (pw(fp, k - 1) * fm * fp) -
                      LaurentPoly(static_cast<long long>(k) * (k - 1)) * pw(fp, k - 1);
      return detail::entry("f- (f+)^" + ks,
                           "-(m-1) (f+)^m f- + m (f+)^(m-1) f- f+ - m(m-1) (f+)^(m-1) at m=" + ks,
                           fm * pw(fp, k), rhs, grp, "f- past powers of f+");
    }
    case LemmaFamily::FMinusBPlusPower: {
      FAElement rhs = even ? pw(bp, k) * fm : pw(bp, k - 1) * fm * bp;
      return detail::entry("f- (b+)^" + ks, even ? "(b+)^n f- at n=" + ks : "(b+)^(n-1) f- b+ at n=" + ks,
                           fm * pw(bp, k), rhs, grp, "f- past powers of b+");
    }
  }
  throw std::invalid_argument("unknown lemma family");
}

/// Every lemma family instantiated for exponents 0..bound.
inline std::vector<RelationEntry> lemma_identities(int bound) {
  std::vector<RelationEntry> out;
  for (auto f : kAllLemmaFamilies)
    for (int k = 0; k <= bound; ++k) out.push_back(lemma_instance(f, k));
  return out;
}

// ---- checking against the representation ----------------------------------

struct Counterexample {
  BasisKet ket;
  State image;
};

struct IdentityReport {
  bool holds = true;
  std::size_t kets_checked = 0;
  std::optional<Counterexample> counterexample;
};

/// Evaluates e on every basis ket with m <= window_m - max_rise(e); e holds iff all
/// images vanish. Throws std::invalid_argument when the guard band leaves no kets.
inline IdentityReport check_identity(const FAElement& e, const RepParams& params) {
  const int limit = params.window_m - max_rise(e);
  if (limit < 0) {
    throw std::invalid_argument("window_m=" + std::to_string(params.window_m) +
                                " is smaller than the m-rise " + std::to_string(max_rise(e)) + " of the element");
  }
  IdentityReport report;
  for (const auto& k : enumerate_basis(RepParams(params.p, limit))) {
    State image = evaluate(e, k, params);
    ++report.kets_checked;
    if (!image.is_zero()) {
      report.holds = false;
      report.counterexample = Counterexample{k, std::move(image)};
      return report;
    }
  }
  return report;
}

}  // namespace rpbs
