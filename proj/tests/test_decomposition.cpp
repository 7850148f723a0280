#include <gtest/gtest.h>

#include "properties.hpp"
#include "qmalg/decomposition.hpp"
#include "qmalg/errors.hpp"

using namespace qmalg;
using qmalg::test::fixture;

namespace {

std::vector<std::string> ideal_strings(const ConcreteAlgebra& alg, const Decomposition& dec) {
  std::vector<std::string> out;
  for (const auto& ideal : dec.ideals) out.push_back(to_string(alg, ideal));
  return out;
}

IdealDescription whole(const ConcreteAlgebra& alg) {
  std::vector<int> w(static_cast<std::size_t>(alg.w_dim()));
  for (int i = 0; i < alg.w_dim(); ++i) w[static_cast<std::size_t>(i)] = i;
  std::vector<Vec> rows;
  for (int b = 0; b < alg.v_dim(); ++b) rows.push_back(unit_vec(static_cast<std::size_t>(alg.v_dim()), static_cast<std::size_t>(b)));
  return make_candidate(alg, w, rows);
}

}  // namespace

TEST(IsIdeal, WholeAlgebra) {
  for (const auto& name : test::valid_fixtures()) {
    const auto alg = fixture(name);
    EXPECT_TRUE(is_ideal(alg, whole(alg)).ok) << name;
  }
}

TEST(IsIdeal, HeisenbergCandidates) {
  const auto alg = fixture("heisenberg");
  const auto bare = is_ideal(alg, make_candidate(alg, {0}, {}));
  ASSERT_FALSE(bare.ok);
  ASSERT_TRUE(bare.witness);
  EXPECT_EQ(to_string(alg, *bare.witness), "<1, 2>_[1,2] = z");
  EXPECT_TRUE(is_ideal(alg, make_candidate(alg, {0}, {Vec{1}})).ok);
}

TEST(MakeCandidate, RejectsMalformedInput) {
  const auto alg = fixture("heisenberg_u");
  EXPECT_THROW(make_candidate(alg, {0, 0}, {}), StructuralError);
  EXPECT_THROW(make_candidate(alg, {5}, {}), StructuralError);
  EXPECT_THROW(make_candidate(alg, {0}, {Vec{1}}), StructuralError);
  EXPECT_THROW(make_candidate(alg, {0}, {Vec{1, 0}, Vec{2, 0}}), StructuralError);
  const auto c = make_candidate(alg, {1, 0}, {Vec{0, 3}});
  EXPECT_EQ(c.w_part, (std::vector<int>{0, 1}));
  EXPECT_EQ(to_string(alg, c), "({1,2}, span{u})");
}

TEST(MakeCandidate, RejectsInhomogeneousRows) {
  const auto alg = fixture("sl2_split_double");
  EXPECT_NO_THROW(make_candidate(alg, {}, {Vec{1, 1}}));
  const GradingGroup z2({2});
  const ConcreteAlgebra graded(2, Bicharacter::trivial(z2), {{"a", {0}}}, {{"p", {0}}, {"q", {1}}}, {});
  EXPECT_THROW(make_candidate(graded, {0}, {Vec{1, 1}}), StructuralError);
}

TEST(Decompose, TwoBlock) {
  const auto alg = fixture("two_block");
  const auto dec = decompose(alg);
  EXPECT_TRUE(dec.complement.empty());
  EXPECT_EQ(ideal_strings(alg, dec), (std::vector<std::string>{"({1,2}, span{z})", "({3}, 0)"}));
  EXPECT_TRUE(dec.all_ideals());
  EXPECT_TRUE(dec.all_orthogonal());
}

TEST(Decompose, ZeroWithInertV) {
  const auto alg = fixture("zero_u");
  const auto dec = decompose(alg);
  EXPECT_EQ(dec.complement, Subspace::whole(1));
  EXPECT_EQ(ideal_strings(alg, dec), (std::vector<std::string>{"({1}, 0)", "({2}, 0)"}));
}

TEST(Decompose, HeisenbergWithInertV) {
  const auto alg = fixture("heisenberg_u");
  const auto dec = decompose(alg);
  const std::vector<Vec> u{Vec{0, 1}};
  EXPECT_EQ(dec.complement, Subspace::span(2, u));
  EXPECT_EQ(ideal_strings(alg, dec), (std::vector<std::string>{"({1,2}, span{z})"}));
  EXPECT_TRUE(dec.all_ideals());
}

TEST(Decompose, SpanIdentity) {
  for (const auto& name : test::valid_fixtures()) {
    const auto alg = fixture(name);
    const auto dec = decompose(alg);
    std::vector<Vec> all;
    std::size_t total = dec.complement.dim();
    for (const auto& row : dec.complement.basis()) all.push_back(embed_v(alg, row));
    for (const auto& ideal : dec.ideals) {
      total += ideal.dim();
      for (const auto& v : joint_basis(alg, ideal)) all.push_back(v);
    }
    EXPECT_EQ(rank(all, static_cast<std::size_t>(alg.dim())), static_cast<std::size_t>(alg.dim())) << name;
    EXPECT_GE(total, static_cast<std::size_t>(alg.dim())) << name;
    if (center(alg).empty() && is_tight(alg).tight) {
      EXPECT_EQ(total, static_cast<std::size_t>(alg.dim())) << name;
      EXPECT_TRUE(dec.direct()) << name;
    }
  }
}

TEST(ComponentIdeal, Examples) {
  const auto heis = fixture("heisenberg");
  EXPECT_EQ(to_string(heis, component_ideal(heis, {0, 1})), "({1,2}, span{z})");
  const auto zero = fixture("zero");
  EXPECT_EQ(to_string(zero, component_ideal(zero, {0})), "({1}, 0)");
  const auto tb = fixture("two_block");
  EXPECT_EQ(to_string(tb, component_ideal(tb, {2})), "({3}, 0)");
  EXPECT_THROW(component_ideal(tb, {0}), StructuralError);
}

TEST(Orthogonality, Examples) {
  const auto tb = fixture("two_block");
  EXPECT_TRUE(orthogonality_witness(tb, {0, 1}, {2}).ok);
  EXPECT_TRUE(orthogonality_witness(fixture("zero"), {0}, {1}).ok);
  EXPECT_THROW(orthogonality_witness(tb, {2}, {2}), StructuralError);
}

TEST(Orthogonality, PlantedCrossProductIsFound) {
  // <e1, e3> = e1 puts 1 and 3 in one class; split them by hand
  const GradingGroup g;
  ProductMap products{{{0, 2}, Vec{1, 0, 0}}};
  const ConcreteAlgebra alg(2, Bicharacter::trivial(g), {{"1", {}}, {"2", {}}, {"3", {}}}, {}, products);
  EXPECT_EQ(classes(symbolic_of_concrete(alg)).class_of(0), classes(symbolic_of_concrete(alg)).class_of(2));
  const auto check = orthogonality_witness(alg, make_candidate(alg, {0, 1}, {}), make_candidate(alg, {2}, {}));
  ASSERT_FALSE(check.ok);
  EXPECT_EQ(to_string(alg, *check.witness), "<1, 3>_[1,2] = 1");
}

TEST(Center, Examples) {
  EXPECT_EQ(center(fixture("zero")).dim(), 2u);
  EXPECT_TRUE(center(fixture("sl2")).empty());
  const std::vector<Vec> z{Vec{0, 0, 1}};
  EXPECT_EQ(center(fixture("heisenberg")), Subspace::span(3, z));
}

TEST(Center, ClosedUnderProducts) {
  for (const auto& name : test::valid_fixtures()) {
    const auto alg = fixture(name);
    const auto c = center(alg);
    if (c.empty()) continue;
    for (const auto& x : c.basis()) {
      for (int b = 0; b < alg.dim(); ++b) {
        for (const auto& sigma : Permutation::all(2)) {
          const std::vector<Vec> args{x, unit_vec(static_cast<std::size_t>(alg.dim()), static_cast<std::size_t>(b))};
          const auto y = eval_product(alg, sigma, args);
          EXPECT_TRUE(c.contains(y)) << name;
        }
      }
    }
  }
}

TEST(Tight, Examples) {
  EXPECT_TRUE(is_tight(fixture("sl2")).tight);
  EXPECT_TRUE(is_tight(fixture("heisenberg")).tight);
  const auto t = is_tight(fixture("heisenberg_u"));
  EXPECT_FALSE(t.tight);
  ASSERT_TRUE(t.witness);
  EXPECT_EQ(*t.witness, 1);
}

TEST(SimplicityObstruction, Examples) {
  const auto tb = fixture("two_block");
  const auto obs = simplicity_obstruction(tb);
  ASSERT_TRUE(obs);
  EXPECT_TRUE(is_ideal(tb, *obs).ok);
  EXPECT_FALSE(simplicity_obstruction(fixture("sl2")));
  const auto zero = fixture("zero");
  EXPECT_EQ(to_string(zero, *simplicity_obstruction(zero)), "({1}, 0)");
}

TEST(Decompose, MultiplicativeInstances) {
  const auto r = test::multiplicative_decomposition_property(500);
  EXPECT_TRUE(r.ok()) << r.summary();
}
