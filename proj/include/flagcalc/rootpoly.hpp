#pragma once

// Sparse polynomials over Z in the simple roots a_1..a_n.
//
// These carry restrictions of equivariant Schubert classes to torus fixed
// points, so every arithmetic operation must be exact: coefficients are
// arbitrary-precision integers and division is performed symbolically with a
// hard failure if it does not come out even.
//
// Monomials are ordered by graded lexicographic order; the leading term of a
// nonzero polynomial is the grlex-largest monomial.

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace flagcalc {

using Exponents = std::vector<int>;

struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

class RootPolynomial {
 public:
  RootPolynomial() : nvars_(0) {}
  explicit RootPolynomial(int nvars) : nvars_(nvars) {}

  static RootPolynomial zero(int nvars) { return RootPolynomial(nvars); }

  static RootPolynomial constant(int nvars, BigInt c) {
    RootPolynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
  }

  static RootPolynomial one(int nvars) { return constant(nvars, 1); }

  // The simple root a_i as a degree-one polynomial (1-based i).
  static RootPolynomial variable(int nvars, int i) {
    RootPolynomial p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.terms_.emplace(std::move(e), BigInt(1));
    return p;
  }

  // A linear form sum_i c_i a_i from integer root coordinates.
  static RootPolynomial linear_form(const IntVec& coords) {
    RootPolynomial p(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0) continue;
      Exponents e(coords.size(), 0);
      e[i] = 1;
      p.terms_.emplace(std::move(e), BigInt(coords[i]));
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<Exponents, BigInt, GrlexLess>& terms() const { return terms_; }

  BigInt constant_term() const {
    if (terms_.empty()) return 0;
    const auto& [e, c] = *terms_.begin();
    for (int v : e)
      if (v != 0) return 0;
    return c;
  }

  int total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.rbegin()->first;
    int d = 0;
    for (int e : lead) d += e;
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int de = 0;
      for (int v : e) de += v;
      if (d < 0) d = de;
      if (de != d) return false;
    }
    return true;
  }

  bool all_coefficients_nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  RootPolynomial& operator+=(const RootPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  RootPolynomial& operator-=(const RootPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend RootPolynomial operator+(RootPolynomial a, const RootPolynomial& b) { return a += b; }
  friend RootPolynomial operator-(RootPolynomial a, const RootPolynomial& b) { return a -= b; }

  friend RootPolynomial operator*(const RootPolynomial& a, const RootPolynomial& b) {
    a.check_compatible(b);
    RootPolynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  RootPolynomial& operator*=(const RootPolynomial& o) { return *this = *this * o; }

  RootPolynomial& operator*=(const BigInt& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend RootPolynomial operator*(RootPolynomial a, const BigInt& c) { return a *= c; }
  friend RootPolynomial operator*(const BigInt& c, RootPolynomial a) { return a *= c; }

  bool operator==(const RootPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const RootPolynomial& o) const { return !(*this == o); }

  // Exact division: *this must equal q * d for some polynomial q over Z.
  // Greedy leading-term elimination; grlex is a monomial order, so whenever
  // the quotient exists the leading term of the remainder stays divisible by
  // the leading term of d and the loop terminates with remainder zero.
  RootPolynomial exact_divide(const RootPolynomial& d) const {
    check_compatible(d);
    if (d.is_zero()) throw InternalError("exact division by the zero polynomial");
    RootPolynomial q(nvars_);
    RootPolynomial r(*this);
    const auto& [ed, cd] = *d.terms_.rbegin();
    while (!r.is_zero()) {
      const auto& [er, cr] = *r.terms_.rbegin();
      Exponents diff(er);
      for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] -= ed[i];
        if (diff[i] < 0) throw InternalError("exact division failed: monomials do not divide");
      }
      if (cr % cd != 0) throw InternalError("exact division failed: coefficients do not divide");
      BigInt cq = cr / cd;
      RootPolynomial t(nvars_);
      t.terms_.emplace(std::move(diff), cq);
      q += t;
      r -= t * d;
    }
    return q;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Print from the grlex-largest term down, the usual human order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt a = c;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool has_vars = false;
      std::ostringstream vars;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (has_vars) vars << "*";
        vars << "a" << (i + 1);
        if (e[i] > 1) vars << "^" << e[i];
        has_vars = true;
      }
      if (!has_vars) {
        out << a;
      } else if (a == 1) {
        out << vars.str();
      } else {
        out << a << "*" << vars.str();
      }
    }
    return out.str();
  }

 private:
  void check_compatible(const RootPolynomial& o) const {
    if (nvars_ != o.nvars_)
      throw InternalError("mixing polynomials in different numbers of variables");
  }

  void add_term(Exponents e, BigInt c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int nvars_;
  std::map<Exponents, BigInt, GrlexLess> terms_;
};

}  // namespace flagcalc
