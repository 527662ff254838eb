#pragma once

// Schubert calculus on G/B and G/P, computed exactly.
//
// Internal indexing is the CELL convention: sigma_w is the class of the
// closure of the cell attached to w, of codimension length(w), and sigma_e is
// the unit.  The geometric (codimension = dim - length) labels used at the
// surface of the CLI are translated by one Poincare dual before they reach
// this layer.
//
// The engine is equivariant: the restriction xi^v(w) of an equivariant class
// to a torus fixed point is a polynomial in the simple roots, computed by the
// reduced-subword sum over a fixed reduced word of w.  Multiplying two classes
// and restricting to fixed points then determines every structure constant by
// triangular elimination, and the classical numbers are the degree-zero slice.
// Several identities that the theory forces (homogeneity, positivity, support
// in the Bruhat interval, parabolic support) are asserted on every computed
// value; a violation throws InternalError rather than returning bad data.

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "rootpoly.hpp"
#include "weyl.hpp"

namespace flagcalc {

// A finite Z-combination of CELL-convention Schubert classes on G/P, keyed by
// Weyl group element index.  Only nonzero coefficients are stored.
struct CohomologyElement {
  ParabolicSubset P;
  std::map<int, BigInt> coeff;

  void add(int idx, const BigInt& c) {
    if (c == 0) return;
    auto it = coeff.find(idx);
    if (it == coeff.end()) {
      coeff.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second == 0) coeff.erase(it);
    }
  }

  bool is_zero() const { return coeff.empty(); }

  BigInt coefficient(int idx) const {
    auto it = coeff.find(idx);
    return it == coeff.end() ? BigInt(0) : it->second;
  }

  std::string to_string(const WeylGroup& W) const {
    if (coeff.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : coeff) {
      if (!first) out << " + ";
      first = false;
      if (c != 1) out << c.str() << "*";
      out << "s[" << W.element(idx).word_string() << "]";
    }
    return out.str();
  }
};

class SchubertCalculus {
 public:
  explicit SchubertCalculus(const WeylGroup& W) : W_(W), rs_(W.root_system()) {}

  SchubertCalculus(const SchubertCalculus&) = delete;
  SchubertCalculus& operator=(const SchubertCalculus&) = delete;

  const WeylGroup& weyl() const { return W_; }

  // xi^v(w): restriction of the equivariant class of v to the fixed point w.
  // Homogeneous of degree length(v), nonnegative integer coefficients, and
  // nonzero exactly when v <= w.
  const RootPolynomial& restriction(int v, int w) const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto key = std::make_pair(v, w);
    auto it = restrictions_.find(key);
    if (it != restrictions_.end()) return it->second;
    RootPolynomial value = compute_restriction(v, w);
    const bool leq = W_.bruhat_leq_idx(v, w);
    if (value.is_zero() != !leq)
      throw InternalError("restriction support disagrees with Bruhat order");
    if (!value.is_zero() &&
        (!value.is_homogeneous() || value.total_degree() != W_.length(v) ||
         !value.all_coefficients_nonnegative()))
      throw InternalError("restriction violates degree or positivity");
    return restrictions_.emplace(key, std::move(value)).first->second;
  }

  // Full equivariant expansion sigma_u * sigma_v = sum_z c^z_{uv} sigma_z on
  // G/B; the returned map holds exactly the nonzero c^z_{uv}.
  const std::map<int, RootPolynomial>& pair_expansion(int u, int v) const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto key = std::minmax(u, v);
    auto it = pair_tables_.find(key);
    if (it != pair_tables_.end()) return it->second;
    std::map<int, RootPolynomial> table = compute_pair_table(key.first, key.second);
    return pair_tables_.emplace(key, std::move(table)).first->second;
  }

  RootPolynomial equivariant_constant(int u, int v, int z) const {
    const auto& table = pair_expansion(u, v);
    auto it = table.find(z);
    return it == table.end() ? RootPolynomial::zero(rs_.rank()) : it->second;
  }

  // Classical structure constant on G/B: the degree-zero slice.
  BigInt classical_constant(int u, int v, int z) const {
    if (W_.length(z) != W_.length(u) + W_.length(v)) return 0;
    return equivariant_constant(u, v, z).constant_term();
  }

  // Classical structure constant on G/P for minimal representatives; the
  // pullback to G/B is an injective ring map matching sigma^P_w to sigma_w,
  // so the number is read off the G/B table after membership validation.
  BigInt structure_constant(int u, int v, int w, const ParabolicSubset& P) const {
    require_min_rep(u, P);
    require_min_rep(v, P);
    require_min_rep(w, P);
    return classical_constant(u, v, w);
  }

  CohomologyElement schubert_class(int w, const ParabolicSubset& P) const {
    require_min_rep(w, P);
    CohomologyElement out;
    out.P = P;
    out.add(w, 1);
    return out;
  }

  CohomologyElement unit(const ParabolicSubset& P) const {
    return schubert_class(0, P);
  }

  CohomologyElement product(const CohomologyElement& a, const CohomologyElement& b) const {
    if (!(a.P == b.P)) throw InternalError("multiplying classes on different flag varieties");
    CohomologyElement out;
    out.P = a.P;
    for (const auto& [u, cu] : a.coeff)
      for (const auto& [v, cv] : b.coeff) {
        const int target_len = W_.length(u) + W_.length(v);
        const auto& table = pair_expansion(u, v);
        for (const auto& [z, poly] : table) {
          if (W_.length(z) != target_len) continue;
          if (!W_.is_min_rep(W_.element(z), a.P))
            throw InternalError("product of parabolic classes left the parabolic span");
          out.add(z, cu * cv * poly.constant_term());
        }
      }
    return out;
  }

  // Chevalley rule on G/B, used as an independent cross-check of product():
  // sigma_{s_i} * sigma_w = sum over positive roots beta with
  // length(w s_beta) = length(w) + 1 of <pi_i, beta^vee> sigma_{w s_beta}.
  CohomologyElement chevalley_product(int i, const CohomologyElement& a) const {
    rs_.check_index(i);
    if (!a.P.empty()) throw InternalError("Chevalley rule is implemented on G/B only");
    CohomologyElement out;
    out.P = a.P;
    const auto& roots = rs_.positive_roots();
    for (const auto& [w, cw] : a.coeff) {
      for (std::size_t r = 0; r < roots.size(); ++r) {
        const WeylElement& refl = W_.reflection(static_cast<int>(r));
        const WeylElement moved = W_.element(w) * refl;
        if (moved.length() != W_.length(w) + 1) continue;
        // <pi_i, beta^vee> is the i-th simple-coroot coordinate of beta^vee.
        BigInt mult(roots[r].alpha_vee[static_cast<std::size_t>(i - 1)]);
        out.add(W_.index_of(moved), cw * mult);
      }
    }
    return out;
  }

  // Coefficient of the point class in a product of CELL classes on G/P whose
  // lengths sum to the dimension.
  BigInt top_constant_cell(const std::vector<int>& ws, const ParabolicSubset& P) const {
    if (ws.empty()) throw ValidationError("empty class list");
    Int total = 0;
    for (int w : ws) {
      require_min_rep(w, P);
      total += W_.length(w);
    }
    if (total != W_.dim_flag(P))
      throw ValidationError("codimensions sum to " + std::to_string(total) + ", expected " +
                            std::to_string(W_.dim_flag(P)) + " for " + rs_.label() + " with P = " +
                            P.to_string());
    CohomologyElement acc = schubert_class(ws[0], P);
    for (std::size_t k = 1; k < ws.size(); ++k)
      acc = product(acc, schubert_class(ws[k], P));
    return acc.coefficient(W_.top_class_index(P));
  }

 private:
  void require_min_rep(int w, const ParabolicSubset& P) const {
    if (!W_.is_min_rep(W_.element(w), P))
      throw ValidationError("element '" + W_.element(w).word_string() +
                            "' is not a minimal representative for P = " + P.to_string());
  }

  // Reduced-subword sum over the canonical reduced word of w.  States map a
  // partial product v' (arising from a reduced subword of a prefix) to the
  // accumulated sum of products of prefix-reflected roots; only v' that can
  // still grow into v survive.
  RootPolynomial compute_restriction(int v, int w) const {
    const int n = rs_.rank();
    const std::vector<int>& word = W_.element(w).word();
    const int lv = W_.length(v);
    std::map<int, RootPolynomial> states;
    states.emplace(0, RootPolynomial::one(n));
    WeylElement prefix = WeylElement::identity(rs_);
    for (std::size_t j = 0; j < word.size(); ++j) {
      const int letter = word[j];
      const Root beta = prefix.apply(rs_.simple_root(letter));
      const RootPolynomial beta_poly = RootPolynomial::linear_form(beta.alpha);
      prefix = prefix * W_.simple(letter);
      const int remaining = static_cast<int>(word.size() - j) - 1;
      std::map<int, RootPolynomial> next;
      for (auto& [state, poly] : states) {
        const int extended = W_.right_mult(state, letter);
        // Skip the letter.
        merge_state(next, state, poly, remaining, lv, v);
        // Take the letter, if doing so keeps the subword reduced.
        if (W_.length(extended) > W_.length(state))
          merge_state(next, extended, poly * beta_poly, remaining, lv, v);
      }
      states = std::move(next);
    }
    auto it = states.find(v);
    return it == states.end() ? RootPolynomial::zero(n) : std::move(it->second);
  }

  void merge_state(std::map<int, RootPolynomial>& next, int state, RootPolynomial poly,
                   int remaining, int lv, int v) const {
    if (W_.length(state) + remaining < lv) return;
    if (W_.length(state) > lv) return;
    if (!W_.bruhat_leq_idx(state, v)) return;
    auto it = next.find(state);
    if (it == next.end()) {
      next.emplace(state, std::move(poly));
    } else {
      it->second += poly;
    }
  }

  // Triangular elimination over fixed points.  Element order refines Bruhat
  // order, so when z is processed every nonzero c^w with w < z is known:
  //   c^z = [xi^u(z) xi^v(z) - sum_{w} c^w xi^w(z)] / xi^z(z).
  std::map<int, RootPolynomial> compute_pair_table(int u, int v) const {
    const int lu = W_.length(u), lv = W_.length(v);
    const int bound = lu + lv;
    std::map<int, RootPolynomial> table;
    for (int z = 0; z < static_cast<int>(W_.size()); ++z) {
      if (W_.length(z) > bound) break;
      RootPolynomial numer = restriction(u, z) * restriction(v, z);
      for (const auto& [w, cw] : table) {
        const RootPolynomial& xi = restriction(w, z);
        if (!xi.is_zero()) numer -= cw * xi;
      }
      if (numer.is_zero()) continue;
      RootPolynomial c = numer.exact_divide(restriction(z, z));
      if (!c.is_homogeneous() || c.total_degree() != bound - W_.length(z))
        throw InternalError("structure constant fails homogeneity");
      if (!c.all_coefficients_nonnegative())
        throw InternalError("structure constant fails positivity");
      if (!W_.bruhat_leq_idx(u, z) || !W_.bruhat_leq_idx(v, z))
        throw InternalError("structure constant outside the Bruhat interval");
      table.emplace(z, std::move(c));
    }
    return table;
  }

  const WeylGroup& W_;
  const RootSystem& rs_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<int, int>, RootPolynomial> restrictions_;
  mutable std::map<std::pair<int, int>, std::map<int, RootPolynomial>> pair_tables_;
};

}  // namespace flagcalc
