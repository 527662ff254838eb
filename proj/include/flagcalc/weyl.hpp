#pragma once

// Weyl groups.
//
// An element is stored as the exact integer matrix of its action on the
// coweight lattice in the basis {x_1..x_n} dual to the simple roots, together
// with the matrix of its inverse and a cached shortlex-minimal reduced word.
// The matrix is the canonical form: two elements are equal iff their matrices
// agree, so braid-equivalent words collapse automatically.
//
// Conventions: products compose like functions, (uv)(x) = u(v(x)); word
// letters are 1-based simple-root indices; s_i is a left descent of w iff
// w^{-1}(alpha_i) < 0 and a right descent iff w(alpha_i) < 0.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace flagcalc {

namespace detail {

// Row-major n x n integer matrix helpers.
inline IntVec mat_identity(int n) {
  IntVec m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

inline IntVec mat_mul(const IntVec& a, const IntVec& b, int n) {
  IntVec out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return out;
}

// Matrix of s_i on the coweight lattice: s_i(x_i) = x_i - alpha_i^vee,
// alpha_i^vee = sum_j a[i][j] x_j; all other x_l are fixed.
inline IntVec generator_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  IntVec m = mat_identity(n);
  for (int k = 0; k < n; ++k)
    m[static_cast<std::size_t>(k) * n + (i - 1)] -= rs.cartan()[i - 1][k];
  return m;
}

}  // namespace detail

class WeylElement {
 public:
  WeylElement() = default;  // invalid until assigned

  static WeylElement identity(const RootSystem& rs) {
    WeylElement w;
    w.rs_ = &rs;
    w.fwd_ = detail::mat_identity(rs.rank());
    w.inv_ = w.fwd_;
    return w;
  }

  static WeylElement simple_reflection(const RootSystem& rs, int i) {
    rs.check_index(i);
    WeylElement w;
    w.rs_ = &rs;
    w.fwd_ = detail::generator_matrix(rs, i);
    w.inv_ = w.fwd_;
    w.word_ = {i};
    return w;
  }

  // Fold generators left to right: {1,2,1} denotes s_1 s_2 s_1.  The input
  // word need not be reduced; the cached word is recomputed canonically.
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& letters) {
    const int n = rs.rank();
    IntVec fwd = detail::mat_identity(n);
    IntVec inv = fwd;
    for (int i : letters) {
      rs.check_index(i);
      IntVec g = detail::generator_matrix(rs, i);
      fwd = detail::mat_mul(fwd, g, n);
      inv = detail::mat_mul(g, inv, n);
    }
    return from_matrices(rs, std::move(fwd), std::move(inv));
  }

  // The reflection s_beta for a positive root beta (by index into
  // positive_roots()): s_beta(x) = x - beta(x) beta^vee.
  static WeylElement reflection(const RootSystem& rs, int root_idx) {
    const Root& beta = rs.positive_roots().at(static_cast<std::size_t>(root_idx));
    const int n = rs.rank();
    Coweight bv = rs.coweight_of_coroot(beta.alpha_vee);
    IntVec m = detail::mat_identity(n);
    for (int l = 0; l < n; ++l) {
      if (beta.alpha[l] == 0) continue;
      for (int k = 0; k < n; ++k) {
        const Rational& c = bv[static_cast<std::size_t>(k)];
        if (!is_integer(c))
          throw InternalError("coroot has non-integral coweight coordinates");
        m[static_cast<std::size_t>(k) * n + l] -=
            beta.alpha[l] * static_cast<Int>(numerator(c));
      }
    }
    IntVec inv = m;  // reflections are involutions
    return from_matrices(rs, std::move(m), std::move(inv));
  }

  const RootSystem& root_system() const { return *rs_; }
  int rank() const { return rs_->rank(); }
  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }
  const IntVec& matrix() const { return fwd_; }

  bool operator==(const WeylElement& o) const { return fwd_ == o.fwd_; }
  bool operator!=(const WeylElement& o) const { return fwd_ != o.fwd_; }

  WeylElement operator*(const WeylElement& o) const {
    const int n = rank();
    return from_matrices(*rs_, detail::mat_mul(fwd_, o.fwd_, n),
                         detail::mat_mul(o.inv_, inv_, n));
  }

  WeylElement inverse() const {
    WeylElement w;
    w.rs_ = rs_;
    w.fwd_ = inv_;
    w.inv_ = fwd_;
    w.word_ = canonical_word(*rs_, w.fwd_);
    return w;
  }

  // Descents.  Row i-1 of the matrix of w holds the simple-root coordinates
  // of w^{-1}(alpha_i); likewise the inverse matrix gives w(alpha_i).
  bool has_left_descent(int i) const { return row_nonpositive(fwd_, i - 1, rank()); }
  bool has_right_descent(int i) const { return row_nonpositive(inv_, i - 1, rank()); }

  bool has_right_descent_in(const ParabolicSubset& P) const {
    for (int i : P.indices())
      if (has_right_descent(i)) return true;
    return false;
  }

  // Actions ------------------------------------------------------------------

  IntVec apply_root_coords(const IntVec& b) const {
    const int n = rank();
    IntVec out(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      if (b[k] == 0) continue;
      for (int l = 0; l < n; ++l) out[l] += b[k] * inv_[static_cast<std::size_t>(k) * n + l];
    }
    return out;
  }

  Root apply(const Root& r) const {
    // Letter-by-letter application keeps the coroot coordinates integral;
    // w = s_{i1}..s_{il} acts with the last letter first.
    Root out = r;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
      out.alpha = rs_->reflect_root_coords(*it, std::move(out.alpha));
      out.alpha_vee = rs_->reflect_coroot_coords(*it, std::move(out.alpha_vee));
    }
    return out;
  }

  Weight apply(const Weight& w) const {
    std::vector<Rational> t = rs_->root_coords(w);
    const int n = rank();
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int k = 0; k < n; ++k) {
      if (t[k] == 0) continue;
      for (int l = 0; l < n; ++l)
        out[l] += t[k] * Rational(inv_[static_cast<std::size_t>(k) * n + l]);
    }
    return rs_->weight_from_root_coords(out);
  }

  Coweight apply(const Coweight& c) const {
    const int n = rank();
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int l = 0; l < n; ++l) {
      if (c[static_cast<std::size_t>(l)] == 0) continue;
      for (int k = 0; k < n; ++k)
        out[k] += Rational(fwd_[static_cast<std::size_t>(k) * n + l]) *
                  c[static_cast<std::size_t>(l)];
    }
    return Coweight(std::move(out));
  }

  std::string word_string() const {
    if (word_.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < word_.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(word_[k]);
    }
    return s;
  }

 private:
  static WeylElement from_matrices(const RootSystem& rs, IntVec fwd, IntVec inv) {
    WeylElement w;
    w.rs_ = &rs;
    w.fwd_ = std::move(fwd);
    w.inv_ = std::move(inv);
    w.word_ = canonical_word(rs, w.fwd_);
    // Round-trip guard: the word must regenerate both matrices.
    const int n = rs.rank();
    IntVec f = detail::mat_identity(n), v = f;
    for (int i : w.word_) {
      IntVec g = detail::generator_matrix(rs, i);
      f = detail::mat_mul(f, g, n);
      v = detail::mat_mul(g, v, n);
    }
    if (f != w.fwd_ || v != w.inv_)
      throw InternalError("matrix is not consistent with a Weyl group element");
    return w;
  }

  // Shortlex-minimal reduced word: repeatedly strip the least left descent.
  static std::vector<int> canonical_word(const RootSystem& rs, IntVec m) {
    const int n = rs.rank();
    const IntVec id = detail::mat_identity(n);
    std::vector<int> word;
    const std::size_t cap = rs.positive_roots().size() + 1;
    while (m != id) {
      int descent = 0;
      for (int i = 1; i <= n; ++i) {
        if (row_nonpositive(m, i - 1, n)) {
          descent = i;
          break;
        }
      }
      if (descent == 0 || word.size() >= cap)
        throw InternalError("matrix is not a Weyl group element");
      word.push_back(descent);
      m = detail::mat_mul(detail::generator_matrix(rs, descent), m, n);
    }
    return word;
  }

  // Row `row` of an n x n matrix is nonpositive and nonzero, i.e. the
  // corresponding image root is negative.
  static bool row_nonpositive(const IntVec& m, int row, int n) {
    bool any_nonzero = false;
    for (int j = 0; j < n; ++j) {
      Int v = m[static_cast<std::size_t>(row) * n + j];
      if (v > 0) return false;
      if (v != 0) any_nonzero = true;
    }
    return any_nonzero;
  }

  const RootSystem* rs_ = nullptr;
  IntVec fwd_;  // action on coweights, x-basis, columns are images
  IntVec inv_;  // same for the inverse element
  std::vector<int> word_;
};

struct CosetFactorization {
  WeylElement u;  // minimal representative in W^Q
  WeylElement v;  // element of W^P intersect W_Q
  WeylElement w;  // the input, w = u v with additive lengths
};

// ---------------------------------------------------------------------------
// WeylGroup: the full enumeration of W for one root system, in (length,
// shortlex) order, plus Bruhat order and coset machinery.  Lazy caches are
// populate-once behind a mutex, so const references are safe to share.
// ---------------------------------------------------------------------------
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs) : rs_(rs) {
    enumerate();
    build_tables();
  }

  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return elements_.size(); }

  const WeylElement& element(int idx) const {
    return elements_.at(static_cast<std::size_t>(idx));
  }
  const std::vector<WeylElement>& elements() const { return elements_; }

  int index_of(const WeylElement& w) const {
    auto it = index_.find(w.matrix());
    if (it == index_.end()) throw InternalError("element is not in this Weyl group");
    return it->second;
  }

  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }
  const WeylElement& simple(int i) const {
    rs_.check_index(i);
    return element(right_mult_[static_cast<std::size_t>(i - 1)][0]);
  }

  WeylElement from_word(const std::vector<int>& letters) const {
    for (int i : letters)
      if (i < 1 || i > rank())
        throw ValidationError("word index " + std::to_string(i) + " out of range for " +
                              rs_.label() + " (rank " + std::to_string(rank()) + ")");
    return WeylElement::from_word(rs_, letters);
  }

  int length(int idx) const { return element(idx).length(); }

  int right_mult(int idx, int i) const {  // index of w s_i
    return right_mult_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(idx)];
  }
  int left_mult(int idx, int i) const {  // index of s_i w
    return left_mult_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(idx)];
  }

  // The reflection s_beta, by index into rs.positive_roots().
  const WeylElement& reflection(int root_idx) const {
    return element(reflections_.at(static_cast<std::size_t>(root_idx)));
  }

  // Bruhat order (memoized lifting-property recursion).
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const {
    return bruhat_leq_idx(index_of(u), index_of(w));
  }

  bool bruhat_leq_idx(int u, int w) const {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure_bruhat_table();
    return bruhat_rec(u, w) != 0;
  }

  // Minimal coset representatives W^P, in enumeration order.
  const std::vector<int>& min_rep_indices(const ParabolicSubset& P) const {
    rs_.check_parabolic(P);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = min_reps_.find(P.indices());
    if (it != min_reps_.end()) return it->second;
    std::vector<int> out;
    for (std::size_t k = 0; k < elements_.size(); ++k)
      if (!elements_[k].has_right_descent_in(P)) out.push_back(static_cast<int>(k));
    return min_reps_.emplace(P.indices(), std::move(out)).first->second;
  }

  std::vector<WeylElement> min_reps(const ParabolicSubset& P) const {
    std::vector<WeylElement> out;
    for (int idx : min_rep_indices(P)) out.push_back(element(idx));
    return out;
  }

  bool is_min_rep(const WeylElement& w, const ParabolicSubset& P) const {
    rs_.check_parabolic(P);
    return !w.has_right_descent_in(P);
  }

  // w lies in the standard parabolic subgroup W_P iff its canonical reduced
  // word only uses letters from Delta(P).
  bool in_parabolic(const WeylElement& w, const ParabolicSubset& P) const {
    rs_.check_parabolic(P);
    for (int i : w.word())
      if (!P.contains(i)) return false;
    return true;
  }

  // w = rep * tail with rep in W^P, tail in W_P, lengths additive.
  std::pair<WeylElement, WeylElement> min_rep_split(const WeylElement& w,
                                                    const ParabolicSubset& P) const {
    rs_.check_parabolic(P);
    WeylElement rep = w;
    WeylElement tail = WeylElement::identity(rs_);
    for (;;) {
      int descent = 0;
      for (int i : P.indices())
        if (rep.has_right_descent(i)) {
          descent = i;
          break;
        }
      if (descent == 0) break;
      const WeylElement& s = simple(descent);
      rep = rep * s;
      tail = s * tail;
    }
    if (rep.length() + tail.length() != w.length())
      throw InternalError("coset split lost length additivity");
    return {std::move(rep), std::move(tail)};
  }

  WeylElement min_rep(const WeylElement& w, const ParabolicSubset& P) const {
    return min_rep_split(w, P).first;
  }

  // Parabolic factorization w = u v for w in W^P and Delta(P) subset Delta(Q):
  // u in W^Q, v in W^P intersect W_Q, lengths additive, both unique.
  CosetFactorization factorize(const WeylElement& w, const ParabolicSubset& P,
                               const ParabolicSubset& Q) const {
    rs_.check_parabolic(P);
    rs_.check_parabolic(Q);
    if (!P.subset_of(Q))
      throw ValidationError("Delta(P) = " + P.to_string() + " is not a subset of Delta(Q) = " +
                            Q.to_string());
    if (!is_min_rep(w, P))
      throw ValidationError("element '" + w.word_string() + "' is not a minimal representative for P = " +
                            P.to_string());
    auto [u, v] = min_rep_split(w, Q);
    if (!in_parabolic(v, Q) || !is_min_rep(v, P))
      throw InternalError("factorization tail is not in W^P intersect W_Q");
    return CosetFactorization{std::move(u), std::move(v), w};
  }

  // Longest element of the standard parabolic W_P.
  WeylElement longest_in_parabolic(const ParabolicSubset& P) const {
    rs_.check_parabolic(P);
    WeylElement w = WeylElement::identity(rs_);
    for (;;) {
      int up = 0;
      for (int i : P.indices())
        if (!w.has_right_descent(i)) {
          up = i;
          break;
        }
      if (up == 0) return w;
      w = w * simple(up);
    }
  }

  // Poincare dual index on W^P: w* = w_0 w w_{0,P}; exchanges the CELL and
  // GEOMETRIC labels of one and the same Schubert class.
  WeylElement dual_index(const WeylElement& w, const ParabolicSubset& P) const {
    if (!is_min_rep(w, P))
      throw ValidationError("element '" + w.word_string() + "' is not a minimal representative for P = " +
                            P.to_string());
    WeylElement dual = longest() * w * longest_in_parabolic(P);
    if (dual.length() != dim_flag(P) - w.length() || !is_min_rep(dual, P))
      throw InternalError("dual index violates its length or membership invariant");
    return dual;
  }

  Int dim_flag(const ParabolicSubset& P) const { return rs_.dim_flag(P); }

  // GEOMETRIC-convention codimension of the Schubert variety X_w in G/P.
  Int codim(const WeylElement& w, const ParabolicSubset& P) const {
    return dim_flag(P) - w.length();
  }

  // Index of the CELL-convention point class sigma_{w_0 w_{0,P}}.
  int top_class_index(const ParabolicSubset& P) const {
    return index_of(dual_index(WeylElement::identity(rs_), P));
  }

 private:
  void enumerate() {
    elements_.push_back(WeylElement::identity(rs_));
    std::map<IntVec, int> seen;
    seen[elements_[0].matrix()] = 0;
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (int i = 1; i <= rank(); ++i) {
        WeylElement next = elements_[head] * WeylElement::simple_reflection(rs_, i);
        if (seen.emplace(next.matrix(), 0).second) elements_.push_back(std::move(next));
      }
    }
    std::sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.word() < b.word();
    });
    for (std::size_t k = 0; k < elements_.size(); ++k)
      index_[elements_[k].matrix()] = static_cast<int>(k);
  }

  void build_tables() {
    const std::size_t n = static_cast<std::size_t>(rank());
    const std::size_t sz = elements_.size();
    right_mult_.assign(n, std::vector<int>(sz));
    left_mult_.assign(n, std::vector<int>(sz));
    for (int i = 1; i <= rank(); ++i) {
      WeylElement s = WeylElement::simple_reflection(rs_, i);
      for (std::size_t k = 0; k < sz; ++k) {
        right_mult_[i - 1][k] = index_.at((elements_[k] * s).matrix());
        left_mult_[i - 1][k] = index_.at((s * elements_[k]).matrix());
      }
    }
    reflections_.resize(rs_.positive_roots().size());
    for (std::size_t r = 0; r < reflections_.size(); ++r)
      reflections_[r] = index_.at(WeylElement::reflection(rs_, static_cast<int>(r)).matrix());
  }

  void ensure_bruhat_table() const {
    if (bruhat_.empty()) bruhat_.assign(elements_.size() * elements_.size(), -1);
  }

  // u <= w by the lifting property: for a left descent i of w,
  //   u <= w  <=>  (s_i u <= s_i w  if i is a left descent of u, else u <= s_i w).
  std::int8_t bruhat_rec(int u, int w) const {
    if (u == 0) return 1;
    if (u == w) return 1;
    const int lu = elements_[static_cast<std::size_t>(u)].length();
    const int lw = elements_[static_cast<std::size_t>(w)].length();
    if (lu >= lw) return 0;
    std::int8_t& memo = bruhat_[static_cast<std::size_t>(u) * elements_.size() +
                          static_cast<std::size_t>(w)];
    if (memo >= 0) return memo;
    int i = 0;
    for (int j = 1; j <= rank(); ++j)
      if (elements_[static_cast<std::size_t>(w)].has_left_descent(j)) {
        i = j;
        break;
      }
    const int sw = left_mult_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(w)];
    const int su = left_mult_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(u)];
    const bool u_descends = elements_[static_cast<std::size_t>(su)].length() < lu;
    memo = u_descends ? bruhat_rec(su, sw) : bruhat_rec(u, sw);
    return memo;
  }

  const RootSystem& rs_;
  std::vector<WeylElement> elements_;
  std::map<IntVec, int> index_;
  std::vector<std::vector<int>> right_mult_;  // [i-1][idx] -> idx of w s_i
  std::vector<std::vector<int>> left_mult_;   // [i-1][idx] -> idx of s_i w
  std::vector<int> reflections_;              // positive root index -> element index

  mutable std::mutex mutex_;
  mutable std::vector<std::int8_t> bruhat_;  // -1 unknown, 0 false, 1 true
  mutable std::map<std::vector<int>, std::vector<int>> min_reps_;
};

}  // namespace flagcalc
