#pragma once

// Faces of the tensor cone.
//
// A Levi-movable tuple (w_1..w_s) in (W^P)^s with top constant 1 cuts out a
// face of the cone of s-tuples of dominant weights (a_1..a_s) with
// asymptotically nonvanishing invariants: for every simple root alpha_i
// outside Delta(P) the functional
//
//   (a_1..a_s) |-> sum_k a_k( w_k(x_i) )
//
// vanishes on the face.  Descriptors record these zero-sets only; which side
// of each hyperplane contains the cone is deliberately not asserted.
//
// Functional coefficients are stored two ways: as the exact coweights
// w_k(x_i) (integer x-coordinates) for fast evaluation, and as the rational
// coefficient vector against the fundamental-weight coordinates of the a_k
// (the form used for serialization and deduplication).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "levi.hpp"
#include "numeric.hpp"
#include "weyl.hpp"

namespace flagcalc {

struct MovableTuple {
  std::vector<WeylElement> tuple;
  LeviReport report;
};

struct FaceFunctional {
  int alpha = 0;                    // 1-based simple-root index i
  std::vector<Coweight> coweights;  // s entries, the w_k(x_i)
  std::vector<Rational> fw_coeffs;  // s*rank entries: coefficient of the j-th
                                    // fundamental-weight coordinate of a_k at
                                    // position (k-1)*rank + (j-1)
};

struct FaceDescriptor {
  ParabolicSubset P;
  std::vector<std::vector<WeylElement>> witnesses;  // all generating tuples
  int codim = 0;                                    // |Delta \ Delta(P)|
  std::vector<FaceFunctional> functionals;          // one per alpha, ascending
};

inline void check_dominant(const RootSystem& rs, const std::vector<Weight>& weights) {
  for (const Weight& w : weights) {
    if (static_cast<int>(w.fw_coords().size()) != rs.rank())
      throw ValidationError("weight rank mismatch");
    for (const Rational& c : w.fw_coords())
      if (c < 0) throw ValidationError("weight is not dominant");
  }
}

// The functionals of the would-be face of a tuple in (W^P)^s; no movability
// requirement, the map is defined for every tuple.
inline std::vector<FaceFunctional> face_functionals(const FlagContext& ctx,
                                                    const std::vector<WeylElement>& ws,
                                                    const ParabolicSubset& P) {
  const RootSystem& rs = ctx.roots();
  rs.check_parabolic(P);
  for (const WeylElement& w : ws)
    if (!ctx.weyl().is_min_rep(w, P))
      throw ValidationError("element '" + w.word_string() +
                            "' is not a minimal representative for P = " + P.to_string());
  std::vector<FaceFunctional> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (P.contains(i)) continue;
    FaceFunctional f;
    f.alpha = i;
    for (const WeylElement& w : ws) {
      Coweight moved = w.apply(rs.fundamental_coweight(i));
      for (int j = 1; j <= rs.rank(); ++j)
        f.fw_coeffs.push_back(rs.pair(rs.fundamental_weight(j), moved));
      f.coweights.push_back(std::move(moved));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline Rational evaluate_functional(const RootSystem& rs, const FaceFunctional& f,
                                    const std::vector<Weight>& weights) {
  if (weights.size() != f.coweights.size())
    throw ValidationError("weight tuple arity does not match the functional");
  Rational total(0);
  for (std::size_t k = 0; k < weights.size(); ++k)
    total += rs.pair(weights[k], f.coweights[k]);
  return total;
}

// All Levi-movable s-tuples over W^P (geometric labels), in lexicographic
// order of the (length, shortlex)-ordered representatives, optionally
// filtered by the exact value of the top constant.
inline std::vector<MovableTuple> enumerate_levi_movable(const FlagContext& ctx,
                                                        const ParabolicSubset& P, int s,
                                                        std::optional<BigInt> c_filter,
                                                        const BigInt& budget) {
  ctx.roots().check_parabolic(P);
  if (s < 2) throw ValidationError("arity must be at least 2");
  const std::vector<int>& reps = ctx.weyl().min_rep_indices(P);
  BigInt projected = 1;
  for (int k = 0; k < s; ++k) projected *= BigInt(reps.size());
  if (projected > budget)
    throw BudgetError("enumeration of " + projected.str() + " tuples exceeds the budget of " +
                          budget.str(),
                      projected.str());

  const WeylGroup& W = ctx.weyl();
  const Int dim = W.dim_flag(P);
  std::vector<MovableTuple> out;
  std::vector<int> choice(static_cast<std::size_t>(s), 0);  // indices into reps

  // Depth-first in lexicographic order over representative indices, pruning
  // on the partial codimension sum.  Representatives are length-ascending, so
  // codimensions descend with the index: once the remaining slots cannot
  // reach dim, later choices cannot either.
  auto recurse = [&](auto&& self, int pos, Int partial) -> void {
    if (pos == s) {
      std::vector<WeylElement> tuple;
      for (int c : choice) tuple.push_back(W.element(reps[static_cast<std::size_t>(c)]));
      LeviReport report = is_levi_movable(ctx, tuple, P);
      if (report.movable && (!c_filter || report.c == *c_filter))
        out.push_back(MovableTuple{std::move(tuple), std::move(report)});
      return;
    }
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const Int lo = partial + W.codim(W.element(reps[c]), P);
      if (lo > dim) continue;                       // later entries are shorter
      if (lo + Int(s - pos - 1) * dim < dim) break; // unreachable from here on
      choice[static_cast<std::size_t>(pos)] = static_cast<int>(c);
      self(self, pos + 1, lo);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

namespace detail {

// Canonical content key of a face: the sorted multiset of fundamental-weight
// coefficient vectors of its functionals.
using FaceKey = std::vector<std::vector<Rational>>;

inline FaceKey face_key(const std::vector<FaceFunctional>& fs) {
  FaceKey key;
  for (const FaceFunctional& f : fs) key.push_back(f.fw_coeffs);
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace detail

// Face descriptors over every standard parabolic with 1 <= |Delta \ Delta(P)|
// <= max_codim: one descriptor per distinct functional multiset, carrying all
// witnessing tuples, in a canonical content-determined order.
inline std::vector<FaceDescriptor> enumerate_faces(const FlagContext& ctx, int s, int max_codim,
                                                   const BigInt& budget) {
  if (s < 2) throw ValidationError("arity must be at least 2");
  if (max_codim < 1) throw ValidationError("max codimension must be at least 1");
  const int n = ctx.rank();

  std::vector<ParabolicSubset> parabolics;
  BigInt projected = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    const int codim = n - static_cast<int>(idx.size());
    if (codim < 1 || codim > max_codim) continue;
    ParabolicSubset P(std::move(idx), n);
    BigInt count = 1;
    for (int k = 0; k < s; ++k) count *= BigInt(ctx.weyl().min_rep_indices(P).size());
    projected += count;
    parabolics.push_back(std::move(P));
  }
  if (projected > budget)
    throw BudgetError("enumeration of " + projected.str() + " tuples exceeds the budget of " +
                          budget.str(),
                      projected.str());

  // Parabolics in a deterministic order: by codim, then indices.
  std::sort(parabolics.begin(), parabolics.end(),
            [n](const ParabolicSubset& a, const ParabolicSubset& b) {
              const int ca = n - static_cast<int>(a.indices().size());
              const int cb = n - static_cast<int>(b.indices().size());
              if (ca != cb) return ca < cb;
              return a.indices() < b.indices();
            });

  std::map<detail::FaceKey, FaceDescriptor> faces;
  for (const ParabolicSubset& P : parabolics) {
    for (MovableTuple& mt :
         enumerate_levi_movable(ctx, P, s, std::optional<BigInt>(BigInt(1)), budget)) {
      if (!mt.report.movable || mt.report.c != 1)
        throw InternalError("face enumeration received a non-qualifying tuple");
      std::vector<FaceFunctional> fs = face_functionals(ctx, mt.tuple, P);
      detail::FaceKey key = detail::face_key(fs);
      auto it = faces.find(key);
      if (it == faces.end()) {
        FaceDescriptor d;
        d.P = P;
        d.codim = ctx.rank() - static_cast<int>(P.indices().size());
        d.functionals = std::move(fs);
        d.witnesses.push_back(std::move(mt.tuple));
        faces.emplace(std::move(key), std::move(d));
      } else {
        it->second.witnesses.push_back(std::move(mt.tuple));
      }
    }
  }

  std::vector<FaceDescriptor> out;
  for (auto& [key, d] : faces) out.push_back(std::move(d));
  return out;
}

// The containment identity behind "the w-face lies in the u-face": after
// factorizing w_k = u_k v_k through Q, the Q-level functional data coincide,
// because v_k fixes every x_i with alpha_i outside Delta(Q).  Requires a
// Levi-movable tuple with top constant 1.
inline bool check_face_containment(const FlagContext& ctx, const std::vector<WeylElement>& ws,
                                   const ParabolicSubset& P, const ParabolicSubset& Q) {
  ctx.roots().check_parabolic(Q);
  if (!P.subset_of(Q))
    throw ValidationError("Delta(P) = " + P.to_string() + " is not a subset of Delta(Q) = " +
                          Q.to_string());
  LeviReport report = is_levi_movable(ctx, ws, P);
  if (!report.movable || report.c != 1)
    throw ValidationError("tuple is not Levi-movable with top constant 1");
  const RootSystem& rs = ctx.roots();
  for (const WeylElement& w : ws) {
    CosetFactorization f = ctx.weyl().factorize(w, P, Q);
    for (int i = 1; i <= rs.rank(); ++i) {
      if (Q.contains(i)) continue;
      if (!(w.apply(rs.fundamental_coweight(i)) == f.u.apply(rs.fundamental_coweight(i))))
        return false;
    }
  }
  return true;
}

}  // namespace flagcalc
