#pragma once

// Levi-movability.
//
// For a tuple of classes [X_{w_1}]..[X_{w_s}] on G/P (geometric labels,
// codimensions summing to dim G/P), movability under the Levi subgroup of P
// is decided numerically: the top constant c must be nonzero and, for every
// simple root alpha_i outside Delta(P), the residue
//
//   ( sum_k chi^P_{w_k} - chi^P_e )(x_i),   chi^P_w = rho - 2 rho^P + w^{-1} rho,
//
// must vanish.  The chi weights lie in the root lattice, so residues are
// integers; a fractional residue indicates an internal bug and throws.
//
// verify_levi_descent requires a movable tuple and checks its descent through
// a chain Delta(P) subset Delta(Q): the u-parts must be movable on G/Q, the
// v-parts movable on the Levi flag variety of Q, and c_w = c_u c_v.  Failures
// there are internal errors, not user errors.  levi_from_parts is the
// converse: it decides movability of the w-tuple from (i) u movable, (ii) v
// movable, (iii) the w-residues all vanish, and cross-checks that verdict
// against the direct criterion.  The extra condition (iii) is genuinely
// needed: movable parts alone do not force a movable product tuple.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "weyl.hpp"

namespace flagcalc {

struct LeviReport {
  BigInt c = 0;
  std::map<int, Rational> residues;  // 1-based simple-root index -> residue
  bool movable = false;
};

struct LeviDescentReport {
  LeviReport w;                   // the input tuple on G/P
  bool u_condition = false;       // u-side codimension condition on G/Q
  LeviReport u;                   // zero/empty unless u_condition holds
  LeviReport v;                   // residues keyed by ambient letters in Delta(Q)\Delta(P)
  bool multiplicative = false;    // c_w == c_u * c_v
  std::vector<CosetFactorization> factorizations;
};

inline Weight levi_chi(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& P) {
  rs.check_parabolic(P);
  if (w.has_right_descent_in(P))
    throw ValidationError("element '" + w.word_string() +
                          "' is not a minimal representative for P = " + P.to_string());
  return rs.rho() - Rational(2) * rs.rho_levi(P) + w.inverse().apply(rs.rho());
}

namespace detail {

inline void check_levi_tuple(const FlagContext& ctx, const std::vector<WeylElement>& ws,
                             const ParabolicSubset& P) {
  ctx.roots().check_parabolic(P);
  if (ws.size() < 2) throw ValidationError("need at least two classes");
  Int codim = 0;
  for (const WeylElement& w : ws) {
    if (!ctx.weyl().is_min_rep(w, P))
      throw ValidationError("element '" + w.word_string() +
                            "' is not a minimal representative for P = " + P.to_string());
    codim += ctx.weyl().codim(w, P);
  }
  if (codim != ctx.weyl().dim_flag(P))
    throw ValidationError("codimensions sum to " + std::to_string(codim) +
                          ", expected dim G/P = " + std::to_string(ctx.weyl().dim_flag(P)));
}

}  // namespace detail

// Residues of the tuple at every x_i with alpha_i outside Delta(P).
inline std::map<int, Rational> chi_residues(const FlagContext& ctx,
                                           const std::vector<WeylElement>& ws,
                                           const ParabolicSubset& P) {
  const RootSystem& rs = ctx.roots();
  Weight total = Rational(-1) * levi_chi(rs, ctx.weyl().identity(), P);
  for (const WeylElement& w : ws) total += levi_chi(rs, w, P);
  std::map<int, Rational> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (P.contains(i)) continue;
    Rational r = rs.pair(total, rs.fundamental_coweight(i));
    if (!is_integer(r)) throw InternalError("movability residue is not an integer");
    out.emplace(i, std::move(r));
  }
  return out;
}

inline LeviReport is_levi_movable(const FlagContext& ctx, const std::vector<WeylElement>& ws,
                                  const ParabolicSubset& P) {
  detail::check_levi_tuple(ctx, ws, P);
  LeviReport report;
  report.c = ctx.top_constant(ws, P);
  report.residues = chi_residues(ctx, ws, P);
  report.movable = (report.c != 0);
  for (const auto& [i, r] : report.residues)
    if (r != 0) report.movable = false;
  return report;
}

// chi is compatible with the factorization w = u v through Q: both sides
// agree on every x_i with alpha_i outside Delta(Q).
inline bool chi_projection_identity(const FlagContext& ctx, const WeylElement& w,
                                    const ParabolicSubset& P, const ParabolicSubset& Q) {
  const RootSystem& rs = ctx.roots();
  CosetFactorization f = ctx.weyl().factorize(w, P, Q);
  Weight chi_w = levi_chi(rs, w, P);
  Weight chi_u = levi_chi(rs, f.u, Q);
  for (int i = 1; i <= rs.rank(); ++i) {
    if (Q.contains(i)) continue;
    if (rs.pair(chi_w, rs.fundamental_coweight(i)) !=
        rs.pair(chi_u, rs.fundamental_coweight(i)))
      return false;
  }
  return true;
}

namespace detail {

// Shared by verify_levi_descent and levi_from_parts: factorize and evaluate
// both parts.  Assumes the w-side query is already validated.
inline LeviDescentReport analyze_descent(const FlagContext& ctx,
                                         const std::vector<WeylElement>& ws,
                                         const ParabolicSubset& P, const ParabolicSubset& Q,
                                         LeviReport w_report) {
  LeviDescentReport report;
  report.w = std::move(w_report);

  Int u_codim = 0;
  for (const WeylElement& w : ws) {
    report.factorizations.push_back(ctx.weyl().factorize(w, P, Q));
    u_codim += ctx.weyl().codim(report.factorizations.back().u, Q);
  }
  report.u_condition = (u_codim == ctx.weyl().dim_flag(Q));
  if (!report.u_condition) return report;

  std::vector<WeylElement> us;
  for (const auto& f : report.factorizations) us.push_back(f.u);
  report.u = is_levi_movable(ctx, us, Q);

  const FlagContext& sub = ctx.subsystem(Q);
  const ParabolicSubset Psub = ctx.parabolic_in_subsystem(P, Q);
  std::vector<WeylElement> vs;
  for (const auto& f : report.factorizations) vs.push_back(ctx.to_subsystem(f.v, Q));
  LeviReport vrep = is_levi_movable(sub, vs, Psub);
  report.v.c = vrep.c;
  report.v.movable = vrep.movable;
  for (const auto& [isub, r] : vrep.residues)
    report.v.residues.emplace(ctx.letter_from_subsystem(isub, Q), r);

  report.multiplicative = (report.w.c == report.u.c * report.v.c);
  return report;
}

}  // namespace detail

// Descent check for a movable tuple: both parts must come out movable and the
// constants multiplicative.  Rejects non-movable input as a user error; a
// failure of the conclusions is an internal error.
inline LeviDescentReport verify_levi_descent(const FlagContext& ctx,
                                             const std::vector<WeylElement>& ws,
                                             const ParabolicSubset& P,
                                             const ParabolicSubset& Q) {
  ctx.roots().check_parabolic(Q);
  if (!P.subset_of(Q))
    throw ValidationError("Delta(P) = " + P.to_string() + " is not a subset of Delta(Q) = " +
                          Q.to_string());
  LeviReport w_report = is_levi_movable(ctx, ws, P);
  if (!w_report.movable)
    throw ValidationError("tuple is not Levi-movable for P = " + P.to_string() +
                          " (required by the descent theorem)");
  LeviDescentReport report = detail::analyze_descent(ctx, ws, P, Q, std::move(w_report));
  if (!report.u_condition)
    throw InternalError("movable tuple fails the u-side codimension condition");
  if (!report.u.movable) throw InternalError("movable tuple has a non-movable u-part");
  if (!report.v.movable) throw InternalError("movable tuple has a non-movable v-part");
  if (!report.multiplicative)
    throw InternalError("movable tuple violates the multiplicative formula");
  return report;
}

// Converse criterion: the w-tuple is movable iff (i) the u-tuple is movable
// on G/Q, (ii) the v-tuple is movable on the Levi flag variety, and (iii) the
// w-residues all vanish.  The verdict is cross-checked against the direct
// criterion on every call.
struct LeviFromPartsResult {
  bool movable = false;
  LeviDescentReport report;
};

inline LeviFromPartsResult levi_from_parts(const FlagContext& ctx,
                                           const std::vector<WeylElement>& ws,
                                           const ParabolicSubset& P, const ParabolicSubset& Q) {
  ctx.roots().check_parabolic(Q);
  if (!P.subset_of(Q))
    throw ValidationError("Delta(P) = " + P.to_string() + " is not a subset of Delta(Q) = " +
                          Q.to_string());
  LeviFromPartsResult result;
  result.report = detail::analyze_descent(ctx, ws, P, Q, is_levi_movable(ctx, ws, P));
  bool residues_vanish = true;
  for (const auto& [i, r] : result.report.w.residues)
    if (r != 0) residues_vanish = false;
  result.movable = result.report.u_condition && result.report.u.movable &&
                   result.report.v.movable && residues_vanish;
  if (result.movable != result.report.w.movable)
    throw InternalError("movability characterization disagrees with the direct criterion");
  return result;
}

}  // namespace flagcalc
