#pragma once

// Independent oracle for type-A structure constants, using Schubert
// polynomials and divided-difference operators on Z[x1..xn].  Deliberately
// self-contained: it shares no code with the library under test.
//
// Conventions (classical):
//   * permutations in one-line notation, 1-based images;
//   * s_i swaps values in positions i, i+1 when multiplied on the right;
//   * S_{w0} = x1^{n-1} x2^{n-2} ... x_{n-1};
//   * S_w = d_{w^{-1} w0} S_{w0}, where d_v = d_{i1} ... d_{ik} for any
//     reduced word v = s_{i1} ... s_{ik};
//   * d_v S_w = S_{w v^{-1}} when lengths subtract, else 0, hence
//     c^w_{uv} = constant term of d_w (S_u S_v) when l(w) = l(u) + l(v).
//
// These constants are the CELL-convention structure constants of the full
// flag variety of SL_n (sigma_w of codimension l(w)).

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, long long>;

class CoinvariantOracle {
 public:
  explicit CoinvariantOracle(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CoinvariantOracle: n must be >= 1");
  }

  // --- permutations --------------------------------------------------------

  std::vector<int> identity_perm() const {
    std::vector<int> w(n_);
    for (int i = 0; i < n_; ++i) w[i] = i + 1;
    return w;
  }

  std::vector<int> longest_perm() const {
    std::vector<int> w(n_);
    for (int i = 0; i < n_; ++i) w[i] = n_ - i;
    return w;
  }

  // Right multiplication by s_i: swap positions i, i+1 (1-based letter i).
  static std::vector<int> mult_s(std::vector<int> w, int i) {
    std::swap(w[i - 1], w[i]);
    return w;
  }

  std::vector<int> perm_from_word(const std::vector<int>& word) const {
    std::vector<int> w = identity_perm();
    for (int i : word) {
      if (i < 1 || i >= n_) throw std::invalid_argument("perm_from_word: bad letter");
      w = mult_s(std::move(w), i);
    }
    return w;
  }

  static std::vector<int> inverse_perm(const std::vector<int>& w) {
    std::vector<int> inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
    return inv;
  }

  static int inversions(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++count;
    return count;
  }

  // A reduced word via descent stripping: if w(i) > w(i+1) then
  // l(w s_i) = l(w) - 1 and word(w) = word(w s_i) + [i].
  static std::vector<int> reduced_word(std::vector<int> w) {
    std::vector<int> rev;
    for (;;) {
      int descent = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
          descent = static_cast<int>(i) + 1;
          break;
        }
      if (descent == 0) break;
      rev.push_back(descent);
      w = mult_s(std::move(w), descent);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

  static std::vector<int> compose(const std::vector<int>& u, const std::vector<int>& v) {
    // (u v)(i) = u(v(i)).
    std::vector<int> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[v[i] - 1];
    return w;
  }

  // --- polynomials ----------------------------------------------------------

  // d_i f = (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial with
  // the exact telescoping formula:
  //   d_i x^a y^b =  sum_{j=b}^{a-1} x^j y^{a+b-1-j}   (a > b)
  //              = -(sum_{j=a}^{b-1} x^j y^{a+b-1-j})  (a < b)
  //              =  0                                  (a = b)
  Poly divided_difference(int i, const Poly& f) const {
    Poly out;
    for (const auto& [e, coeff] : f) {
      const int a = e[i - 1];
      const int b = e[i];
      if (a == b) continue;
      const int lo = std::min(a, b);
      const int hi = std::max(a, b);
      const long long sign = (a > b) ? coeff : -coeff;
      for (int j = lo; j < hi; ++j) {
        Exponents m = e;
        m[i - 1] = j;
        m[i] = a + b - 1 - j;
        out[m] += sign;
        if (out[m] == 0) out.erase(m);
      }
    }
    return out;
  }

  Poly multiply(const Poly& f, const Poly& g) const {
    Poly out;
    for (const auto& [ef, cf] : f)
      for (const auto& [eg, cg] : g) {
        Exponents e(n_);
        for (int i = 0; i < n_; ++i) e[i] = ef[i] + eg[i];
        out[e] += cf * cg;
        if (out[e] == 0) out.erase(e);
      }
    return out;
  }

  // Schubert polynomial S_w for a permutation given by any word.
  Poly schubert(const std::vector<int>& word) const {
    Poly top;
    Exponents staircase(n_);
    for (int i = 0; i < n_; ++i) staircase[i] = n_ - 1 - i;
    top[staircase] = 1;

    const std::vector<int> w = perm_from_word(word);
    const std::vector<int> chain = compose(inverse_perm(w), longest_perm());
    Poly f = std::move(top);
    // d_v = d_{i1} ... d_{ik} applied as a composition, innermost last letter.
    const std::vector<int> v_word = reduced_word(chain);
    for (auto it = v_word.rbegin(); it != v_word.rend(); ++it)
      f = divided_difference(*it, f);
    return f;
  }

  long long constant_term(const Poly& f) const {
    Exponents zero(n_, 0);
    auto it = f.find(zero);
    return it == f.end() ? 0 : it->second;
  }

  // c^w_{uv} in the coinvariant algebra (CELL convention, full flag variety).
  long long structure_constant(const std::vector<int>& word_u, const std::vector<int>& word_v,
                               const std::vector<int>& word_w) const {
    const std::vector<int> u = perm_from_word(word_u);
    const std::vector<int> v = perm_from_word(word_v);
    const std::vector<int> w = perm_from_word(word_w);
    if (inversions(u) + inversions(v) != inversions(w)) return 0;
    Poly product = multiply(schubert(word_u), schubert(word_v));
    const std::vector<int> w_word = reduced_word(w);
    for (auto it = w_word.rbegin(); it != w_word.rend(); ++it)
      product = divided_difference(*it, product);
    return constant_term(product);
  }

  int n() const { return n_; }

 private:
  int n_;
};

}  // namespace oracle
