#include <gtest/gtest.h>

#include <algorithm>

#include "properties.hpp"
#include "qmalg/errors.hpp"
#include "qmalg/minimality.hpp"

using namespace qmalg;
using qmalg::test::fixture;

TEST(MuQuasiMultiplicative, ZeroAlgebraHolds) {
  EXPECT_TRUE(is_mu_quasi_multiplicative(fixture("zero")).ok);
  EXPECT_TRUE(is_mu_quasi_multiplicative(fixture("zero_u")).ok);
}

TEST(MuQuasiMultiplicative, GroupAlgebraHolds) {
  const auto alg = fixture("grp2");
  EXPECT_TRUE(is_mu_quasi_multiplicative(alg).ok);
  // 0 in mu(~1, (1)) and e0 = <e1, e1>
  const auto sym = symbolic_of_concrete(alg);
  EXPECT_TRUE(eval_mu(sym, ExtIndex::bar_idx(1), ArgPack{{ExtIndex::idx(1)}}).contains(ExtIndex::idx(0)));
}

TEST(MuQuasiMultiplicative, Sl2FailsAtFWithHeadH) {
  const auto alg = fixture("sl2");
  EXPECT_FALSE(is_mu_quasi_multiplicative(alg).ok);
  const auto failures = mu_quasi_multiplicative_failures(alg);
  const auto f = *alg.find("f");
  const auto h = *alg.find("h");
  const auto e = *alg.find("e");
  const auto it = std::find_if(failures.begin(), failures.end(), [&](const MuFailure& m) {
    return m.i == f && m.head == ExtIndex::idx(h) && m.tail == ArgPack{{ExtIndex::bar_idx(e)}};
  });
  ASSERT_NE(it, failures.end());
  // both orders of (h, e) only reach the line of e
  for (const auto& p : it->products) EXPECT_EQ(support(p), std::vector<std::size_t>{static_cast<std::size_t>(e)});
}

TEST(MuQuasiMultiplicative, HeisenbergWitness) {
  const auto alg = fixture("heisenberg");
  const auto m = is_mu_quasi_multiplicative(alg);
  ASSERT_FALSE(m.ok);
  EXPECT_EQ(to_string(alg, *m.witness), "i = 2, tuple (v,~1), products {0}");
}

TEST(MinimalByTheorem, Examples) {
  EXPECT_EQ(minimal_by_theorem(fixture("grp2")).verdict, Verdict::minimal);
  const auto sl2 = minimal_by_theorem(fixture("sl2"));
  EXPECT_EQ(sl2.verdict, Verdict::hypotheses_not_met);
  ASSERT_TRUE(sl2.failed_hypothesis);
  EXPECT_NE(sl2.failed_hypothesis->find("mu-quasi-multiplicativity"), std::string::npos);
  EXPECT_EQ(minimal_by_theorem(fixture("two_block")).verdict, Verdict::hypotheses_not_met);
  EXPECT_EQ(minimal_by_theorem(fixture("grp2_double")).verdict, Verdict::not_minimal);
}

TEST(MinimalByTheorem, UntightNamesTheHypothesis) {
  const auto alg = fixture("zero_u");
  const auto v = minimal_by_theorem(alg);
  EXPECT_EQ(v.verdict, Verdict::hypotheses_not_met);
  EXPECT_EQ(to_string(alg, v), "hypotheses-not-met (V is not tight, u is not a product)");
}

TEST(MinimalBruteForce, Examples) {
  const auto heis = fixture("heisenberg");
  const auto v = minimal_brute_force(heis);
  EXPECT_EQ(v.verdict, Verdict::not_minimal);
  ASSERT_TRUE(v.ideal_witness);
  EXPECT_EQ(to_string(heis, *v.ideal_witness), "({1}, span{z})");
  EXPECT_TRUE(is_ideal(heis, *v.ideal_witness).ok);
  EXPECT_EQ(minimal_brute_force(fixture("grp2")).verdict, Verdict::minimal);
  EXPECT_EQ(minimal_brute_force(fixture("zero_single")).verdict, Verdict::minimal);
}

TEST(MinimalBruteForce, NotMinimalAlwaysCarriesAProperIdeal) {
  for (const auto& name : test::valid_fixtures()) {
    const auto alg = fixture(name);
    const auto v = minimal_brute_force(alg);
    if (v.verdict != Verdict::not_minimal) continue;
    ASSERT_TRUE(v.ideal_witness) << name;
    EXPECT_TRUE(is_ideal(alg, *v.ideal_witness).ok) << name;
    EXPECT_GT(v.ideal_witness->dim(), 0u) << name;
    EXPECT_LT(v.ideal_witness->dim(), static_cast<std::size_t>(alg.dim())) << name;
  }
}

TEST(MinimalBruteForce, BoundsAreEnforced) {
  EXPECT_THROW(minimal_brute_force(fixture("sl2_double"), OracleBounds{4, 4}), BoundExceeded);
  EXPECT_THROW(minimal_brute_force(fixture("heisenberg_u"), OracleBounds{6, 1}), BoundExceeded);
}

TEST(GeneratingFamily, Heisenberg) {
  const auto fam = generating_family(fixture("heisenberg_u"));
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam[0], (Vec{1, 0}));
  EXPECT_EQ(fam[1], (Vec{0, 1}));
  EXPECT_EQ(spanned_subspaces(2, fam).size(), 4u);
}

TEST(Restriction, ComponentsOfADoubleAreGroupAlgebras) {
  const auto alg = fixture("grp2_double");
  const auto dec = decompose(alg);
  ASSERT_EQ(dec.ideals.size(), 2u);
  for (const auto& ideal : dec.ideals) {
    const auto sub = restrict_to_ideal(alg, ideal);
    EXPECT_TRUE(validate_algebra(sub).ok());
    EXPECT_EQ(sub.w_dim(), 2);
    EXPECT_EQ(sub.bicharacter(), alg.bicharacter());
    EXPECT_EQ(minimal_by_theorem(sub).verdict, Verdict::minimal);
  }
}

TEST(Restriction, KeepsVPartNamesAndRejectsOpenSubspaces) {
  const auto alg = fixture("sl2_split_double");
  const auto dec = decompose(alg);
  const auto sub = restrict_to_ideal(alg, dec.ideals[1]);
  EXPECT_EQ(sub.v_basis().front().id, "h2");
  const auto heis = fixture("heisenberg");
  EXPECT_THROW(restrict_to_ideal(heis, make_candidate(heis, {0, 1}, {})), StructuralError);
}

TEST(MinimalDecomposition, GroupAlgebra) {
  const auto rep = minimal_decomposition_check(fixture("grp2"));
  EXPECT_TRUE(rep.hypotheses_met);
  ASSERT_EQ(rep.components.size(), 1u);
  ASSERT_TRUE(rep.components[0].oracle);
  EXPECT_TRUE(rep.ok());
}

TEST(MinimalDecomposition, DoubledGroupAlgebra) {
  const auto rep = minimal_decomposition_check(fixture("grp2_double"));
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.direct);
  ASSERT_EQ(rep.components.size(), 2u);
  for (const auto& c : rep.components) {
    EXPECT_EQ(c.theorem.verdict, Verdict::minimal);
    ASSERT_TRUE(c.oracle);
    EXPECT_EQ(c.oracle->verdict, Verdict::minimal);
  }
  EXPECT_TRUE(rep.ok());
}

TEST(MinimalDecomposition, HeisenbergFailsTheHypotheses) {
  const auto rep = minimal_decomposition_check(fixture("heisenberg"));
  EXPECT_FALSE(rep.hypotheses_met);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.components.empty());
}

TEST(Agreement, Fixtures) {
  test::PropertyResult r;
  for (const auto& name : test::valid_fixtures()) test::check_agreement(fixture(name), r, name);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_GE(r.cases, 4u);
}

TEST(Agreement, GeneratedMultiplicative) {
  const auto a = test::minimality_agreement_property(500);
  EXPECT_TRUE(a.result.ok()) << a.result.summary();
  EXPECT_GT(a.minimal, 0u);
  EXPECT_GT(a.not_minimal, 0u);
}
