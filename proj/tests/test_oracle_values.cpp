#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "properties.hpp"
#include "qmalg/decomposition.hpp"
#include "qmalg/errors.hpp"
#include "qmalg/identities.hpp"
#include "qmalg/minimality.hpp"

using namespace qmalg;
using json = nlohmann::json;
using qmalg::test::fixture;

namespace {

const json& frozen() {
  static const json doc = json::parse(test::read_text(std::string(QMALG_TEST_DIR) + "/oracles/expected.json"));
  return doc;
}

Subspace rows_to_subspace(const json& rows, std::size_t ambient) {
  std::vector<Vec> vecs;
  for (const auto& r : rows) {
    Vec v;
    for (const auto& x : r) v.push_back(parse_scalar(x.get<std::string>()));
    vecs.push_back(v);
  }
  return Subspace::span(ambient, vecs);
}

std::vector<std::string> ids(const ConcreteAlgebra& alg, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(alg.id(i));
  return out;
}

Vec vector_of(const ConcreteAlgebra& alg, const json& coeffs) {
  Vec v = zero_vec(static_cast<std::size_t>(alg.dim()));
  for (const auto& [id, c] : coeffs.items()) v[static_cast<std::size_t>(*alg.find(id))] = parse_scalar(c.get<std::string>());
  return v;
}

class OracleValues : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(OracleValues, Classes) {
  const auto alg = fixture(GetParam());
  const auto& exp = frozen().at(GetParam());
  const auto part = classes(symbolic_of_concrete(alg));
  std::vector<std::vector<std::string>> got;
  for (const auto& c : part.classes) got.push_back(ids(alg, c));
  EXPECT_EQ(got, exp.at("classes").get<std::vector<std::vector<std::string>>>());
}

TEST_P(OracleValues, CenterAndTightness) {
  const auto alg = fixture(GetParam());
  const auto& exp = frozen().at(GetParam());
  EXPECT_EQ(center(alg), rows_to_subspace(exp.at("center"), static_cast<std::size_t>(alg.dim())));
  const auto t = is_tight(alg);
  EXPECT_EQ(t.tight, exp.at("tight").get<bool>());
  if (exp.contains("tight_witness")) {
    ASSERT_TRUE(t.witness);
    EXPECT_EQ(alg.id(alg.w_dim() + *t.witness), exp.at("tight_witness").get<std::string>());
  }
}

TEST_P(OracleValues, MuQuasiMultiplicativity) {
  const auto alg = fixture(GetParam());
  EXPECT_EQ(is_mu_quasi_multiplicative(alg).ok, frozen().at(GetParam()).at("mu_qm").get<bool>());
}

TEST_P(OracleValues, Decomposition) {
  const auto alg = fixture(GetParam());
  const auto& exp = frozen().at(GetParam());
  const auto dec = decompose(alg);
  const auto vdim = static_cast<std::size_t>(alg.v_dim());
  ASSERT_EQ(dec.ideals.size(), exp.at("ideals").size());
  for (std::size_t k = 0; k < dec.ideals.size(); ++k) {
    const auto& e = exp.at("ideals")[k];
    EXPECT_EQ(ids(alg, dec.ideals[k].w_part), e.at("w").get<std::vector<std::string>>());
    EXPECT_EQ(dec.ideals[k].v_part, rows_to_subspace(e.at("v"), vdim));
  }
  std::vector<Vec> units;
  for (const auto& id : exp.at("complement")) {
    units.push_back(unit_vec(vdim, static_cast<std::size_t>(*alg.find(id.get<std::string>()) - alg.w_dim())));
  }
  EXPECT_EQ(dec.complement, Subspace::span(vdim, units));
}

TEST_P(OracleValues, MinimalityVerdict) {
  const auto alg = fixture(GetParam());
  const auto& exp = frozen().at(GetParam()).at("minimality");
  const auto v = minimal_brute_force(alg);
  EXPECT_EQ(to_string(v.verdict), exp.at("verdict").get<std::string>());
  if (v.verdict == Verdict::not_minimal) {
    ASSERT_TRUE(v.ideal_witness);
    EXPECT_TRUE(is_ideal(alg, *v.ideal_witness).ok);
  }
}

TEST_P(OracleValues, Identities) {
  const auto alg = fixture(GetParam());
  const auto& exp = frozen().at(GetParam());
  if (!exp.contains("identities")) GTEST_SKIP() << "arity " << alg.arity();
  for (const auto& [scheme, e] : exp.at("identities").items()) {
    const auto rep = check_identity(alg, colorize(builtin_scheme(scheme, alg.arity()), alg.bicharacter()));
    ASSERT_EQ(rep.holds, e.at("holds").get<bool>()) << scheme;
    if (rep.holds) {
      EXPECT_EQ(rep.tuples, e.at("tuples").get<std::size_t>()) << scheme;
      continue;
    }
    const auto& c = *rep.counterexample;
    EXPECT_EQ(c.identity + 1, e.at("identity").get<std::size_t>()) << scheme;
    EXPECT_EQ(ids(alg, c.tuple), e.at("tuple").get<std::vector<std::string>>()) << scheme;
    EXPECT_EQ(c.lhs, vector_of(alg, e.at("lhs"))) << scheme;
    EXPECT_EQ(c.rhs, vector_of(alg, e.at("rhs"))) << scheme;
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, OracleValues, ::testing::ValuesIn(test::valid_fixtures()),
                         [](const auto& info) { return info.param; });

TEST(OracleNegatives, GradingWitnesses) {
  const auto& exp = frozen().at("invalid/grp2_bad_grading");
  const auto rep = validate_document(test::read_text(test::fixture_path("invalid/grp2_bad_grading")));
  std::vector<std::string> got;
  for (const auto& v : rep.violations) {
    if (v.rule == "grading") got.push_back(v.witness.substr(0, v.witness.find(' ')));
  }
  EXPECT_EQ(got, exp.at("grading_witnesses").get<std::vector<std::string>>());
}

TEST(OracleNegatives, BicharacterAndQuasiMultiplicativity) {
  for (const auto& name : {"bichar_bad", "heis_mixed"}) {
    const auto& exp = frozen().at(std::string("invalid/") + name);
    const auto rep = validate_document(test::read_text(test::fixture_path(std::string("invalid/") + name)));
    bool axiom = false;
    bool qm = false;
    for (const auto& v : rep.violations) {
      axiom |= v.rule.rfind("axiom", 0) == 0;
      qm |= v.rule == "quasi-multiplicativity";
    }
    EXPECT_EQ(!axiom, exp.at("bicharacter_ok").get<bool>()) << name;
    EXPECT_EQ(!qm, exp.at("quasi_multiplicative").get<bool>()) << name;
  }
}

TEST(OracleNegatives, DuplicateId) {
  EXPECT_TRUE(frozen().at("invalid/duplicate_id").contains("error"));
  EXPECT_THROW(fixture("invalid/duplicate_id"), ParseError);
}
