#pragma once

// Exhaustive desk-scale verification of the product formula and the
// movability descent.
//
// For every chain Delta(P) strictly inside Delta(Q) and every s-tuple over
// W^P whose codimensions sum to dim G/P:
//   - if the u-side codimension condition also holds, check the
//     multiplicative formula c_w = c_u * c_v  (the thm1 counters);
//   - if the tuple is Levi-movable, check that the u- and v-parts are
//     movable and the constants multiply with all factors positive
//     (the thm2 counters).
// The sweep counts violations instead of throwing, so a completed run
// reports exactly what was checked; zero violations is the expected outcome.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "levi.hpp"
#include "numeric.hpp"
#include "weyl.hpp"

namespace flagcalc {

struct ChainStats {
  ParabolicSubset P;
  ParabolicSubset Q;
  Int tuples = 0;           // tuples meeting the w-side codimension condition
  Int thm1_checked = 0;     // of those, tuples meeting the u-side condition
  Int thm1_violations = 0;  // c_w != c_u * c_v among thm1_checked
  Int movable = 0;          // Levi-movable tuples
  Int thm2_violations = 0;  // movable tuples with non-movable parts or bad product
};

struct SweepResult {
  std::vector<ChainStats> chains;
  Int total_tuples = 0;
  Int total_violations = 0;
};

namespace detail {

// All s-tuples over W^P with codimensions summing to dim G/P, in
// lexicographic order of (length, shortlex)-ordered representatives.
template <typename Fn>
void for_each_codim_tuple(const FlagContext& ctx, const ParabolicSubset& P, int s, Fn&& fn) {
  const WeylGroup& W = ctx.weyl();
  const std::vector<int>& reps = W.min_rep_indices(P);
  const Int dim = W.dim_flag(P);
  std::vector<WeylElement> tuple;
  tuple.reserve(static_cast<std::size_t>(s));
  auto recurse = [&](auto&& self, int pos, Int partial) -> void {
    if (pos == s) {
      fn(tuple);
      return;
    }
    for (int rep : reps) {
      const Int lo = partial + W.codim(W.element(rep), P);
      if (lo > dim) continue;
      if (lo + Int(s - pos - 1) * dim < dim) break;
      tuple.push_back(W.element(rep));
      self(self, pos + 1, lo);
      tuple.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

inline std::vector<ParabolicSubset> all_parabolics(int n) {
  std::vector<ParabolicSubset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    out.emplace_back(std::move(idx), n);
  }
  std::sort(out.begin(), out.end(), [](const ParabolicSubset& a, const ParabolicSubset& b) {
    if (a.indices().size() != b.indices().size()) return a.indices().size() < b.indices().size();
    return a.indices() < b.indices();
  });
  return out;
}

}  // namespace detail

// Restricting to a fixed P and/or Q narrows the sweep to matching chains.
inline SweepResult run_verification_sweep(const FlagContext& ctx, int s, const BigInt& budget,
                                          const std::optional<ParabolicSubset>& only_p = {},
                                          const std::optional<ParabolicSubset>& only_q = {}) {
  if (s < 2) throw ValidationError("arity must be at least 2");
  const WeylGroup& W = ctx.weyl();

  std::vector<std::pair<ParabolicSubset, ParabolicSubset>> chains;
  const std::vector<ParabolicSubset> subsets = detail::all_parabolics(ctx.rank());
  for (const ParabolicSubset& P : subsets) {
    if (only_p && !(P == *only_p)) continue;
    for (const ParabolicSubset& Q : subsets) {
      if (only_q && !(Q == *only_q)) continue;
      if (!(P.subset_of(Q)) || P == Q) continue;
      chains.emplace_back(P, Q);
    }
  }
  if (chains.empty()) throw ValidationError("no chains Delta(P) strictly inside Delta(Q) match");

  BigInt projected = 0;
  for (const auto& [P, Q] : chains) {
    BigInt count = 1;
    for (int k = 0; k < s; ++k) count *= BigInt(W.min_rep_indices(P).size());
    projected += count;
  }
  if (projected > budget)
    throw BudgetError("sweep of " + projected.str() + " tuples exceeds the budget of " +
                          budget.str(),
                      projected.str());

  SweepResult result;
  for (const auto& [P, Q] : chains) {
    ChainStats stats;
    stats.P = P;
    stats.Q = Q;
    const FlagContext& sub = ctx.subsystem(Q);
    const ParabolicSubset Psub = ctx.parabolic_in_subsystem(P, Q);
    detail::for_each_codim_tuple(ctx, P, s, [&](const std::vector<WeylElement>& ws) {
      ++stats.tuples;

      std::vector<WeylElement> us, vs;
      Int u_codim = 0;
      for (const WeylElement& w : ws) {
        CosetFactorization f = W.factorize(w, P, Q);
        u_codim += W.codim(f.u, Q);
        us.push_back(std::move(f.u));
        vs.push_back(ctx.to_subsystem(f.v, Q));
      }
      const bool u_condition = (u_codim == W.dim_flag(Q));

      const BigInt c_w = ctx.top_constant(ws, P);
      BigInt c_u = 0, c_v = 0;
      if (u_condition) {
        ++stats.thm1_checked;
        c_u = ctx.top_constant(us, Q);
        c_v = sub.top_constant(vs, Psub);
        if (c_w != c_u * c_v) ++stats.thm1_violations;
      }

      bool w_movable = (c_w != 0);
      for (const auto& [i, r] : chi_residues(ctx, ws, P))
        if (r != 0) w_movable = false;
      if (w_movable) {
        ++stats.movable;
        bool ok = u_condition && c_u > 0 && c_v > 0 && c_w == c_u * c_v;
        if (ok) {
          for (const auto& [i, r] : chi_residues(ctx, us, Q))
            if (r != 0) ok = false;
          for (const auto& [i, r] : chi_residues(sub, vs, Psub))
            if (r != 0) ok = false;
        }
        if (!ok) ++stats.thm2_violations;
      }
    });
    result.total_tuples += stats.tuples;
    result.total_violations += stats.thm1_violations + stats.thm2_violations;
    result.chains.push_back(std::move(stats));
  }
  return result;
}

}  // namespace flagcalc
