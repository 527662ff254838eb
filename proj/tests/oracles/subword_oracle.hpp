#pragma once

// Independent localization oracle.  The restriction of an equivariant
// Schubert class to a fixed point is computed as a sum over reduced subwords
// of an arbitrary reduced word for the point, with each position weighted by
// the prefix-rotated simple root.  The engine uses a dynamic program over a
// single canonical word; this oracle re-derives the value from scratch for
// any word, so agreement across all reduced words is a real invariance test.

#include <cstddef>
#include <vector>

#include <flagcalc/context.hpp>
#include <flagcalc/rootpoly.hpp>
#include <flagcalc/weyl.hpp>

namespace oracle {

inline flagcalc::RootPolynomial restriction_by_subwords(const flagcalc::FlagContext& ctx,
                                                        const std::vector<int>& word,
                                                        const flagcalc::WeylElement& v) {
  using flagcalc::RootPolynomial;
  using flagcalc::WeylElement;
  const flagcalc::RootSystem& rs = ctx.roots();
  const flagcalc::WeylGroup& W = ctx.weyl();
  const int n = rs.rank();
  std::vector<RootPolynomial> beta;
  for (std::size_t j = 0; j < word.size(); ++j) {
    const WeylElement prefix =
        W.from_word(std::vector<int>(word.begin(), word.begin() + static_cast<long>(j)));
    beta.push_back(RootPolynomial::linear_form(prefix.apply(rs.simple_root(word[j])).alpha));
  }
  RootPolynomial total = RootPolynomial::zero(n);
  const int target = v.length();
  auto rec = [&](auto&& self, std::size_t pos, const WeylElement& partial, int taken,
                 const RootPolynomial& prod) -> void {
    if (taken == target) {
      if (partial == v) total += prod;
      return;
    }
    if (pos == word.size() || static_cast<int>(word.size() - pos) < target - taken) return;
    self(self, pos + 1, partial, taken, prod);
    const WeylElement next = partial * W.simple(word[pos]);
    if (next.length() == taken + 1) self(self, pos + 1, next, taken + 1, prod * beta[pos]);
  };
  rec(rec, 0, W.identity(), 0, RootPolynomial::one(n));
  return total;
}

inline void all_reduced_words(const flagcalc::WeylGroup& W, const flagcalc::WeylElement& w,
                              std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 1; i <= W.rank(); ++i)
    if (w.has_left_descent(i)) {
      prefix.push_back(i);
      all_reduced_words(W, W.simple(i) * w, prefix, out);
      prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> all_reduced_words(const flagcalc::WeylGroup& W,
                                                       const flagcalc::WeylElement& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  all_reduced_words(W, w, prefix, out);
  return out;
}

}  // namespace oracle
