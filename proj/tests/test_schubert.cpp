#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <flagcalc/context.hpp>
#include <flagcalc/errors.hpp>
#include <flagcalc/rootpoly.hpp>
#include <flagcalc/schubert.hpp>

#include "oracles/subword_oracle.hpp"
#include "oracles/coinvariant_oracle.hpp"
#include "oracles/lr_oracle.hpp"

using namespace flagcalc;

namespace {

IntVec integer_root_coords(const RootSystem& rs, const Weight& w) {
  IntVec out;
  for (const Rational& c : rs.root_coords(w)) {
    REQUIRE(is_integer(c));
    out.push_back(static_cast<Int>(numerator(c)));
  }
  return out;
}

}  // namespace

TEST_CASE("pinned restriction values in A2", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A2");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  const int s1 = W.index_of(W.simple(1));
  const int s12 = W.index_of(W.from_word({1, 2}));
  const int w0 = W.index_of(W.longest());

  CHECK(calc.restriction(s1, w0).to_string() == "a1 + a2");
  CHECK(calc.restriction(s12, s12).to_string() == "a1^2 + a1*a2");
  CHECK(calc.restriction(0, w0).to_string() == "1");
  // xi^w(w) is the product of the inversion roots; for w0 that is all of R+.
  CHECK(calc.restriction(w0, w0).to_string() == "a1^2*a2 + a1*a2^2");
}

TEST_CASE("restriction support, degree, and positivity", "[schubert]") {
  for (const std::string label : {"A2", "B2"}) {
    FlagContext ctx = FlagContext::from_label(label);
    const WeylGroup& W = ctx.weyl();
    const SchubertCalculus& calc = ctx.calc();
    for (int v = 0; v < static_cast<int>(W.size()); ++v)
      for (int w = 0; w < static_cast<int>(W.size()); ++w) {
        const RootPolynomial& xi = calc.restriction(v, w);
        CHECK(xi.is_zero() == !W.bruhat_leq_idx(v, w));
        if (!xi.is_zero()) {
          CHECK(xi.is_homogeneous());
          CHECK(xi.total_degree() == W.length(v));
          CHECK(xi.all_coefficients_nonnegative());
        }
      }
  }
}

TEST_CASE("restrictions agree with the subword oracle on every reduced word", "[schubert]") {
  for (const std::string label : {"A2", "B2"}) {
    FlagContext ctx = FlagContext::from_label(label);
    const WeylGroup& W = ctx.weyl();
    const SchubertCalculus& calc = ctx.calc();
    for (const WeylElement& w : W.elements()) {
      const std::vector<std::vector<int>> words = oracle::all_reduced_words(W, w);
      REQUIRE(!words.empty());
      for (const WeylElement& v : W.elements()) {
        const RootPolynomial& engine = calc.restriction(W.index_of(v), W.index_of(w));
        for (const std::vector<int>& word : words)
          CHECK(oracle::restriction_by_subwords(ctx, word, v) == engine);
      }
    }
  }
}

TEST_CASE("degree-one restrictions are w_i minus its translate", "[schubert]") {
  for (const std::string label : {"A2", "B2"}) {
    FlagContext ctx = FlagContext::from_label(label);
    const WeylGroup& W = ctx.weyl();
    const RootSystem& rs = ctx.roots();
    const SchubertCalculus& calc = ctx.calc();
    for (int i = 1; i <= rs.rank(); ++i)
      for (const WeylElement& w : W.elements()) {
        const Weight diff = rs.fundamental_weight(i) - w.apply(rs.fundamental_weight(i));
        const RootPolynomial expected = RootPolynomial::linear_form(integer_root_coords(rs, diff));
        CHECK(calc.restriction(W.index_of(W.simple(i)), W.index_of(w)) == expected);
      }
  }
}

TEST_CASE("equivariant structure constants: examples and properties", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A2");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  const int e = 0;
  const int s1 = W.index_of(W.simple(1));
  const int s2 = W.index_of(W.simple(2));
  const int s12 = W.index_of(W.from_word({1, 2}));

  for (int w = 0; w < static_cast<int>(W.size()); ++w)
    CHECK(calc.equivariant_constant(e, w, w) == RootPolynomial::one(2));
  CHECK(calc.equivariant_constant(s1, s2, s12) == RootPolynomial::one(2));
  CHECK(calc.equivariant_constant(s1, s1, s12).is_zero());
  CHECK(calc.equivariant_constant(s1, s1, s1) == RootPolynomial::variable(2, 1));
  CHECK(calc.equivariant_constant(s2, s2, s2) == RootPolynomial::variable(2, 2));

  for (const std::string label : {"A2", "B2"}) {
    FlagContext c = FlagContext::from_label(label);
    const WeylGroup& Wl = c.weyl();
    const SchubertCalculus& calcl = c.calc();
    for (int u = 0; u < static_cast<int>(Wl.size()); ++u)
      for (int v = u; v < static_cast<int>(Wl.size()); ++v)
        for (const auto& [z, poly] : calcl.pair_expansion(u, v)) {
          if (poly.is_zero()) continue;
          // Graham positivity, homogeneity, Bruhat support.
          CHECK(poly.all_coefficients_nonnegative());
          CHECK(poly.is_homogeneous());
          CHECK(poly.total_degree() == Wl.length(u) + Wl.length(v) - Wl.length(z));
          CHECK(Wl.bruhat_leq_idx(u, z));
          CHECK(Wl.bruhat_leq_idx(v, z));
        }
  }
}

TEST_CASE("full classical ring of A2 matches the coinvariant oracle", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A2");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  oracle::CoinvariantOracle co(3);
  for (const WeylElement& u : W.elements())
    for (const WeylElement& v : W.elements())
      for (const WeylElement& w : W.elements()) {
        const BigInt engine = calc.classical_constant(W.index_of(u), W.index_of(v), W.index_of(w));
        const long long expected = co.structure_constant(u.word(), v.word(), w.word());
        CHECK(engine == BigInt(expected));
      }
}

TEST_CASE("full classical ring of A3 matches the coinvariant oracle", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A3");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  oracle::CoinvariantOracle co(4);

  // Precompute oracle Schubert polynomials once.
  std::vector<oracle::Poly> schub;
  for (const WeylElement& w : W.elements()) schub.push_back(co.schubert(w.word()));

  for (int u = 0; u < static_cast<int>(W.size()); ++u)
    for (int v = u; v < static_cast<int>(W.size()); ++v) {
      const oracle::Poly product = co.multiply(schub[u], schub[v]);
      for (int w = 0; w < static_cast<int>(W.size()); ++w) {
        if (W.length(w) != W.length(u) + W.length(v)) continue;
        oracle::Poly extracted = product;
        const std::vector<int> w_word = W.element(w).word();
        for (auto it = w_word.rbegin(); it != w_word.rend(); ++it)
          extracted = co.divided_difference(*it, extracted);
        CHECK(calc.classical_constant(u, v, w) == BigInt(co.constant_term(extracted)));
      }
    }
}

TEST_CASE("Gr(2,4) matches the Littlewood-Richardson oracle", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A3");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  const ParabolicSubset P({1, 3}, 3);

  std::vector<oracle::Partition> box;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= a; ++b) box.push_back(oracle::normalize_partition({a, b}));

  auto element_of = [&](const oracle::Partition& lam) {
    return W.index_of(W.from_word(
        oracle::reduced_word_of_perm(oracle::grassmannian_from_partition(lam, 2, 4))));
  };

  for (const auto& lam : box)
    for (const auto& mu : box)
      for (const auto& nu : box) {
        const BigInt engine =
            calc.structure_constant(element_of(lam), element_of(mu), element_of(nu), P);
        CHECK(engine == BigInt(oracle::lr_coefficient(lam, mu, nu)));
      }

  // The classical quantitative anchor, cell convention: sigma_{(1)}^2
  // decomposes as sigma_{(2)} + sigma_{(1,1)}.
  const int sq = element_of({1});
  CHECK(calc.structure_constant(sq, sq, element_of({2}), P) == 1);
  CHECK(calc.structure_constant(sq, sq, element_of({1, 1}), P) == 1);
  CHECK(W.element(element_of({1, 1})).word() == std::vector<int>{1, 2});
  CHECK(W.element(element_of({2})).word() == std::vector<int>{3, 2});
}

TEST_CASE("projective space Gr(1,3) matches the LR oracle", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A2");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  const ParabolicSubset P({2}, 2);
  std::vector<oracle::Partition> box = {{}, {1}, {2}};
  auto element_of = [&](const oracle::Partition& lam) {
    return W.index_of(W.from_word(
        oracle::reduced_word_of_perm(oracle::grassmannian_from_partition(lam, 1, 3))));
  };
  for (const auto& lam : box)
    for (const auto& mu : box)
      for (const auto& nu : box)
        CHECK(calc.structure_constant(element_of(lam), element_of(mu), element_of(nu), P) ==
              BigInt(oracle::lr_coefficient(lam, mu, nu)));
}

TEST_CASE("Poincare duality on G/B", "[schubert]") {
  for (const std::string label : {"A2", "B2"}) {
    FlagContext ctx = FlagContext::from_label(label);
    const WeylGroup& W = ctx.weyl();
    const SchubertCalculus& calc = ctx.calc();
    const ParabolicSubset borel({}, ctx.rank());
    const int w0 = W.index_of(W.longest());
    for (const WeylElement& u : W.elements()) {
      const WeylElement dual = W.dual_index(u, borel);
      for (const WeylElement& v : W.elements()) {
        if (v.length() != W.longest().length() - u.length()) continue;
        const BigInt c = calc.classical_constant(W.index_of(u), W.index_of(v), w0);
        CHECK(c == BigInt(v == dual ? 1 : 0));
      }
    }
  }
}

TEST_CASE("products on G/P are supported on minimal representatives", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A3");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  const ParabolicSubset P({1, 3}, 3);
  for (const WeylElement& u : W.min_reps(P))
    for (const WeylElement& v : W.min_reps(P)) {
      const CohomologyElement prod =
          calc.product(calc.schubert_class(W.index_of(u), P), calc.schubert_class(W.index_of(v), P));
      for (const auto& [w, c] : prod.coeff) {
        CHECK(W.is_min_rep(W.element(w), P));
        CHECK(c > 0);
        CHECK(W.length(w) == u.length() + v.length());
        CHECK(c == calc.structure_constant(W.index_of(u), W.index_of(v), w, P));
      }
    }
}

TEST_CASE("ring laws and the Chevalley cross-check", "[schubert]") {
  for (const std::string label : {"A2", "B2"}) {
    FlagContext ctx = FlagContext::from_label(label);
    const WeylGroup& W = ctx.weyl();
    const SchubertCalculus& calc = ctx.calc();
    const ParabolicSubset borel({}, ctx.rank());

    for (const WeylElement& u : W.elements())
      for (const WeylElement& v : W.elements()) {
        const CohomologyElement a = calc.schubert_class(W.index_of(u), borel);
        const CohomologyElement b = calc.schubert_class(W.index_of(v), borel);
        const CohomologyElement ab = calc.product(a, b);
        CHECK(calc.product(b, a).coeff == ab.coeff);
        // Degree-one products agree with the Chevalley formula.
        for (int i = 1; i <= ctx.rank(); ++i) {
          const CohomologyElement by_product =
              calc.product(calc.schubert_class(W.index_of(W.simple(i)), borel), a);
          const CohomologyElement by_chevalley = calc.chevalley_product(i, a);
          CHECK(by_product.coeff == by_chevalley.coeff);
        }
      }

    // Associativity on a sample of triples.
    const std::vector<WeylElement> sample = {W.identity(), W.simple(1), W.simple(2),
                                             W.from_word({1, 2})};
    for (const WeylElement& x : sample)
      for (const WeylElement& y : sample)
        for (const WeylElement& z : sample) {
          const CohomologyElement cx = calc.schubert_class(W.index_of(x), borel);
          const CohomologyElement cy = calc.schubert_class(W.index_of(y), borel);
          const CohomologyElement cz = calc.schubert_class(W.index_of(z), borel);
          CHECK(calc.product(calc.product(cx, cy), cz).coeff ==
                calc.product(cx, calc.product(cy, cz)).coeff);
        }

    // The unit is neutral.
    for (const WeylElement& u : W.elements()) {
      const CohomologyElement a = calc.schubert_class(W.index_of(u), borel);
      CHECK(calc.product(calc.unit(borel), a).coeff == a.coeff);
    }
  }
}

TEST_CASE("cell-convention top constants", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A2");
  const WeylGroup& W = ctx.weyl();
  const SchubertCalculus& calc = ctx.calc();
  const ParabolicSubset borel({}, 2);

  const int s1 = W.index_of(W.simple(1));
  const int s2 = W.index_of(W.simple(2));
  CHECK(calc.top_constant_cell({s1, s1, s2}, borel) == 1);
  CHECK(calc.top_constant_cell({s1, s2, s2}, borel) == 1);
  CHECK(calc.top_constant_cell({s1, s1, s1}, borel) == 0);
  CHECK(calc.top_constant_cell({0, W.index_of(W.longest())}, borel) == 1);

  CHECK_THROWS_AS(calc.top_constant_cell({}, borel), ValidationError);
  CHECK_THROWS_AS(calc.top_constant_cell({s1, s2}, borel), ValidationError);  // wrong degree sum
}

TEST_CASE("geometric top constants and the indexing flip", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A2");
  const WeylGroup& W = ctx.weyl();
  const ParabolicSubset borel({}, 2), q2({2}, 2);

  // The running example: [X_{s1s2}] [X_{s1s2}] [X_{s2s1}] = 1 [pt] on G/B.
  const std::vector<WeylElement> tuple = {W.from_word({1, 2}), W.from_word({1, 2}),
                                          W.from_word({2, 1})};
  CHECK(ctx.top_constant(tuple, borel) == 1);

  // [X_e] is the point class: pairing the unit with the point gives 1.
  CHECK(ctx.top_constant({W.from_word({2, 1}), W.identity()}, q2) == 1);
  CHECK(ctx.top_constant({W.longest(), W.identity()}, borel) == 1);

  // Geometric and cell conventions are exchanged by the dual involution.
  for (const WeylElement& w : W.elements()) {
    CHECK(ctx.geometric_to_cell(w, borel) == W.dual_index(w, borel));
    CHECK(ctx.cell_to_geometric(ctx.geometric_to_cell(w, borel), borel) == w);
  }

  // Gr(2,4): fourth power of the geometric codimension-one class.
  FlagContext a3 = FlagContext::from_label("A3");
  const ParabolicSubset p13({1, 3}, 3);
  const WeylElement h = a3.weyl().from_word({1, 3, 2});
  CHECK(a3.weyl().codim(h, p13) == 1);
  CHECK(a3.top_constant({h, h, h, h}, p13) == 2);

  // Validation: arity, membership, codimension sum.
  CHECK_THROWS_AS(ctx.top_constant({W.longest()}, borel), ValidationError);
  CHECK_THROWS_AS(ctx.top_constant({W.from_word({2}), W.identity()}, q2), ValidationError);
  CHECK_THROWS_AS(ctx.top_constant({W.identity(), W.identity()}, borel), ValidationError);
}

TEST_CASE("product formula verification on a chain", "[schubert]") {
  FlagContext ctx = FlagContext::from_label("A2");
  const WeylGroup& W = ctx.weyl();
  const ParabolicSubset borel({}, 2), q2({2}, 2);

  const std::vector<WeylElement> tuple = {W.from_word({1, 2}), W.from_word({1, 2}),
                                          W.from_word({2, 1})};
  const ProductFormulaReport report = ctx.verify_product_formula(tuple, borel, q2);
  CHECK(report.c_w == 1);
  CHECK(report.c_u == 1);
  CHECK(report.c_v == 1);
  CHECK(report.holds);
  REQUIRE(report.factorizations.size() == 3);
  CHECK(report.factorizations[0].u == W.simple(1));
  CHECK(report.factorizations[0].v == W.simple(2));
  CHECK(report.factorizations[2].u == W.from_word({2, 1}));
  CHECK(report.factorizations[2].v == W.identity());

  // Chain through Q = G: u-parts are trivial, v-parts reproduce the input.
  const ProductFormulaReport full = ctx.verify_product_formula(tuple, borel,
                                                               ParabolicSubset::full(2));
  CHECK(full.c_u == 1);
  CHECK(full.c_v == full.c_w);
  CHECK(full.holds);

  CHECK_THROWS_AS(ctx.verify_product_formula(tuple, q2, borel), ValidationError);
}
