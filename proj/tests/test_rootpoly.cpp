#include <catch2/catch_amalgamated.hpp>

#include <flagcalc/errors.hpp>
#include <flagcalc/rootpoly.hpp>

using namespace flagcalc;

namespace {

RootPolynomial a(int i) { return RootPolynomial::variable(2, i); }

}  // namespace

TEST_CASE("construction and basic queries", "[rootpoly]") {
  const RootPolynomial zero = RootPolynomial::zero(2);
  CHECK(zero.is_zero());
  CHECK(zero.total_degree() == -1);
  CHECK(zero.constant_term() == 0);
  CHECK(zero.to_string() == "0");

  const RootPolynomial one = RootPolynomial::one(2);
  CHECK(one.constant_term() == 1);
  CHECK(one.total_degree() == 0);
  CHECK(one.is_homogeneous());

  const RootPolynomial c = RootPolynomial::constant(2, BigInt(-7));
  CHECK(c.constant_term() == -7);

  CHECK(a(1).total_degree() == 1);
  CHECK(a(1).to_string() == "a1");
  CHECK(RootPolynomial::linear_form({2, -1}).to_string() == "2*a1 - a2");
}

TEST_CASE("arithmetic", "[rootpoly]") {
  const RootPolynomial s = a(1) + a(2);
  CHECK((s * s).to_string() == "a1^2 + 2*a1*a2 + a2^2");
  CHECK((s - a(2)) == a(1));
  CHECK((s - s).is_zero());
  CHECK((s * RootPolynomial::zero(2)).is_zero());
  CHECK((s * BigInt(3)).to_string() == "3*a1 + 3*a2");
  CHECK((BigInt(0) * s).is_zero());

  // Ring laws on small samples.
  const RootPolynomial p = a(1) * a(1) - a(2);
  const RootPolynomial q = a(2) + RootPolynomial::one(2);
  CHECK(p * q == q * p);
  CHECK((p + q) * s == p * s + q * s);
}

TEST_CASE("grlex term order drives printing", "[rootpoly]") {
  // Higher total degree first; within a degree, lexicographically larger
  // exponent vector first.
  const RootPolynomial p =
      a(2) * a(2) * a(2) + a(1) + RootPolynomial::one(2) + a(1) * a(2);
  CHECK(p.to_string() == "a2^3 + a1*a2 + a1 + 1");
}

TEST_CASE("homogeneity and positivity predicates", "[rootpoly]") {
  CHECK((a(1) * a(1) + a(1) * a(2)).is_homogeneous());
  CHECK_FALSE((a(1) * a(1) + a(2)).is_homogeneous());
  CHECK((a(1) + a(2)).all_coefficients_nonnegative());
  CHECK_FALSE((a(1) - a(2)).all_coefficients_nonnegative());
  // The zero polynomial is vacuously homogeneous and nonnegative.
  CHECK(RootPolynomial::zero(2).is_homogeneous());
  CHECK(RootPolynomial::zero(2).all_coefficients_nonnegative());
}

TEST_CASE("exact division", "[rootpoly]") {
  const RootPolynomial s = a(1) + a(2);
  const RootPolynomial t = a(1) + a(2) + a(2);  // a1 + 2 a2
  CHECK((s * t).exact_divide(s) == t);
  CHECK((s * t).exact_divide(t) == s);
  CHECK((s * s * t).exact_divide(s * s) == t);
  CHECK(RootPolynomial::zero(2).exact_divide(s).is_zero());

  // Non-divisible pairs throw: dividing would leave a remainder.
  CHECK_THROWS_AS((a(1) * a(1) + a(2) * a(2)).exact_divide(s), InternalError);
  CHECK_THROWS_AS(RootPolynomial::one(2).exact_divide(a(1)), InternalError);
}
