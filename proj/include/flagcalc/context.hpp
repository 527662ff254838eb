#pragma once

// FlagContext bundles one root system with its Weyl group and Schubert
// calculus, caches the Levi subsystems attached to parabolic subsets, and
// exposes the two verification entry points built on the coset factorization:
// the multiplicative formula for top structure constants and the geometric
// (codimension-labelled) index translation.
//
// Surface convention: a word tuple passed to verify_product_formula labels
// classes geometrically, [X_w] of codimension dim - length(w); internally a
// single Poincare dual converts to the CELL indexing of SchubertCalculus.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "schubert.hpp"
#include "weyl.hpp"

namespace flagcalc {

struct ProductFormulaReport {
  BigInt c_w = 0;
  BigInt c_u = 0;
  BigInt c_v = 0;
  bool holds = false;
  std::vector<CosetFactorization> factorizations;  // one per tuple entry
};

class FlagContext {
 public:
  explicit FlagContext(CartanDatum datum) : rs_(std::move(datum)), W_(rs_), calc_(W_) {}

  static FlagContext from_label(std::string_view label) {
    return FlagContext(CartanDatum::from_label(label));
  }

  FlagContext(const FlagContext&) = delete;
  FlagContext& operator=(const FlagContext&) = delete;

  const RootSystem& roots() const { return rs_; }
  const WeylGroup& weyl() const { return W_; }
  const SchubertCalculus& calc() const { return calc_; }
  const std::string& label() const { return rs_.label(); }
  int rank() const { return rs_.rank(); }

  // -------------------------------------------------------------------------
  // Levi subsystems.
  // -------------------------------------------------------------------------

  // The root system of the Levi factor attached to Q: the principal Cartan
  // submatrix on Delta(Q), with simple roots renumbered 1..|Q| in the order
  // they appear in Delta(Q).
  const FlagContext& subsystem(const ParabolicSubset& Q) const {
    rs_.check_parabolic(Q);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = subsystems_.find(Q.indices());
    if (it != subsystems_.end()) return *it->second;
    const auto& idx = Q.indices();
    IntMatrix sub(idx.size(), std::vector<Int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        sub[i][j] = rs_.cartan()[idx[i] - 1][idx[j] - 1];
    std::string label = "levi:" + rs_.label() + "|" + Q.to_string();
    auto ctx = std::unique_ptr<FlagContext>(
        new FlagContext(CartanDatum::from_matrix(std::move(sub), std::move(label))));
    return *subsystems_.emplace(Q.indices(), std::move(ctx)).first->second;
  }

  // Renumber ambient simple-root indices within Delta(Q) to subsystem letters.
  int letter_to_subsystem(int i, const ParabolicSubset& Q) const {
    const auto& idx = Q.indices();
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == i) return static_cast<int>(k) + 1;
    throw InternalError("letter " + std::to_string(i) + " is not in " + Q.to_string());
  }

  int letter_from_subsystem(int k, const ParabolicSubset& Q) const {
    const auto& idx = Q.indices();
    if (k < 1 || k > static_cast<int>(idx.size()))
      throw InternalError("subsystem letter out of range");
    return idx[static_cast<std::size_t>(k) - 1];
  }

  // Translate an element of the standard parabolic W_Q into the subsystem's
  // Weyl group (length-preserving), and back.
  WeylElement to_subsystem(const WeylElement& v, const ParabolicSubset& Q) const {
    const FlagContext& sub = subsystem(Q);
    std::vector<int> letters;
    for (int i : v.word()) letters.push_back(letter_to_subsystem(i, Q));
    WeylElement out = sub.weyl().from_word(letters);
    if (out.length() != v.length())
      throw InternalError("subsystem translation changed the length");
    return out;
  }

  WeylElement from_subsystem(const WeylElement& v_sub, const ParabolicSubset& Q) const {
    std::vector<int> letters;
    for (int k : v_sub.word()) letters.push_back(letter_from_subsystem(k, Q));
    WeylElement out = W_.from_word(letters);
    if (out.length() != v_sub.length())
      throw InternalError("subsystem translation changed the length");
    return out;
  }

  // Delta(P) as a parabolic subset of the subsystem attached to Q.
  ParabolicSubset parabolic_in_subsystem(const ParabolicSubset& P,
                                         const ParabolicSubset& Q) const {
    if (!P.subset_of(Q)) throw InternalError("parabolic is not contained in the subsystem");
    std::vector<int> out;
    for (int i : P.indices()) out.push_back(letter_to_subsystem(i, Q));
    return ParabolicSubset(std::move(out), static_cast<int>(Q.indices().size()));
  }

  // -------------------------------------------------------------------------
  // Geometric (codimension) labels vs internal CELL labels.
  // -------------------------------------------------------------------------

  // Both directions are the same involution w -> w_0 w w_{0,P} on W^P.
  WeylElement geometric_to_cell(const WeylElement& w, const ParabolicSubset& P) const {
    return W_.dual_index(w, P);
  }
  WeylElement cell_to_geometric(const WeylElement& w, const ParabolicSubset& P) const {
    return W_.dual_index(w, P);
  }

  // Coefficient of the point class in prod_k [X_{w_k}] on G/P, classes
  // labelled geometrically.  Requires sum of codimensions equal to dim G/P.
  BigInt top_constant(const std::vector<WeylElement>& ws, const ParabolicSubset& P) const {
    if (ws.size() < 2) throw ValidationError("need at least two classes");
    std::vector<int> cells;
    for (const WeylElement& w : ws)
      cells.push_back(W_.index_of(geometric_to_cell(w, P)));
    return calc_.top_constant_cell(cells, P);
  }

  // -------------------------------------------------------------------------
  // The multiplicative formula.
  // -------------------------------------------------------------------------

  // For Delta(P) subset Delta(Q) and a tuple in W^P whose codimensions on G/P
  // sum to dim G/P (else ValidationError naming the failed side), factor each
  // w_k = u_k v_k.  If the u-side codimensions on G/Q also sum to dim G/Q,
  // compute all three top constants and report whether c_w = c_u c_v.
  ProductFormulaReport verify_product_formula(const std::vector<WeylElement>& ws,
                                              const ParabolicSubset& P,
                                              const ParabolicSubset& Q) const {
    rs_.check_parabolic(P);
    rs_.check_parabolic(Q);
    if (!P.subset_of(Q))
      throw ValidationError("Delta(P) = " + P.to_string() + " is not a subset of Delta(Q) = " +
                            Q.to_string());
    if (ws.size() < 2) throw ValidationError("need at least two classes");

    Int w_codim = 0;
    for (const WeylElement& w : ws) {
      if (!W_.is_min_rep(w, P))
        throw ValidationError("element '" + w.word_string() +
                              "' is not a minimal representative for P = " + P.to_string());
      w_codim += W_.codim(w, P);
    }
    if (w_codim != W_.dim_flag(P))
      throw ValidationError("w-side codimensions sum to " + std::to_string(w_codim) +
                            ", expected dim G/P = " + std::to_string(W_.dim_flag(P)));

    ProductFormulaReport report;
    Int u_codim = 0;
    for (const WeylElement& w : ws) {
      report.factorizations.push_back(W_.factorize(w, P, Q));
      u_codim += W_.codim(report.factorizations.back().u, Q);
    }
    if (u_codim != W_.dim_flag(Q))
      throw ValidationError("u-side codimensions sum to " + std::to_string(u_codim) +
                            ", expected dim G/Q = " + std::to_string(W_.dim_flag(Q)));

    report.c_w = top_constant(ws, P);

    std::vector<WeylElement> us;
    for (const auto& f : report.factorizations) us.push_back(f.u);
    report.c_u = top_constant(us, Q);

    // v-side: inside the Levi of Q, relative to the image of P.  Its
    // codimension condition is forced by the other two.
    const FlagContext& sub = subsystem(Q);
    const ParabolicSubset Psub = parabolic_in_subsystem(P, Q);
    std::vector<WeylElement> vs;
    Int v_codim = 0;
    for (const auto& f : report.factorizations) {
      vs.push_back(to_subsystem(f.v, Q));
      v_codim += sub.weyl().codim(vs.back(), Psub);
    }
    if (v_codim != sub.weyl().dim_flag(Psub))
      throw InternalError("v-side codimension condition failed to follow from the other two");
    report.c_v = sub.top_constant(vs, Psub);

    report.holds = (report.c_w == report.c_u * report.c_v);
    return report;
  }

 private:
  RootSystem rs_;
  WeylGroup W_;
  SchubertCalculus calc_;

  mutable std::mutex mutex_;
  mutable std::map<std::vector<int>, std::unique_ptr<FlagContext>> subsystems_;
};

}  // namespace flagcalc
