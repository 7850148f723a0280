#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "properties.hpp"
#include "qmalg/cli.hpp"
#include "qmalg/errors.hpp"
#include "qmalg/generator.hpp"
#include "qmalg/io.hpp"

using namespace qmalg;
using qmalg::test::fixture;
using qmalg::test::fixture_path;
using qmalg::test::read_text;

namespace {

std::string invalid(const std::string& name) { return read_text(fixture_path("invalid/" + name)); }

}  // namespace

TEST(Parse, SyntaxErrorCarriesLineAndColumn) {
  try {
    parse_algebra("{\n  \"arity\": 2,\n  \"group\": [,]\n}");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Parse, DuplicateIdIsAParseError) {
  try {
    parse_algebra(invalid("duplicate_id"));
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "/w_basis/1/id");
  }
}

TEST(Parse, AxiomViolationsAreValidationErrors) {
  for (const auto& name : {"heis_mixed", "grp2_bad_grading", "bichar_bad"}) {
    try {
      parse_algebra(invalid(name));
      ADD_FAILURE() << name << ": no exception";
    } catch (const ValidationError& e) {
      EXPECT_FALSE(e.report().ok()) << name;
    }
    EXPECT_NO_THROW(parse_algebra_unchecked(invalid(name))) << name;
  }
}

TEST(Parse, MissingFieldsAndBadScalars) {
  EXPECT_THROW(parse_algebra(R"({"arity": 2})"), ParseError);
  const auto base = nlohmann::json::parse(read_text(fixture_path("heisenberg")));
  auto bad = base;
  bad["products"][0]["result"][0][1] = "1/0";
  EXPECT_THROW(parse_algebra(bad.dump()), ParseError);
  bad = base;
  bad["products"][0]["args"][0] = "nope";
  EXPECT_THROW(parse_algebra(bad.dump()), ParseError);
}

TEST(Parse, FileLookupAddsJsonSuffix) {
  EXPECT_EQ(read_algebra_file(std::string(QMALG_FIXTURE_DIR) + "/sl2"),
            read_algebra_file(std::string(QMALG_FIXTURE_DIR) + "/sl2.json"));
  EXPECT_THROW(load_algebra(std::string(QMALG_FIXTURE_DIR) + "/absent"), StructuralError);
}

TEST(Serialize, FixturesRoundTrip) {
  for (const auto& name : test::valid_fixtures()) {
    const auto alg = fixture(name);
    const auto text = serialize(alg);
    const auto back = parse_algebra(text);
    EXPECT_TRUE(back == alg) << name;
    EXPECT_EQ(serialize(back), text) << name;
  }
}

TEST(Serialize, CanonicalForm) {
  const auto alg = fixture("sl2_split");
  const auto doc = nlohmann::json::parse(serialize(alg));
  std::vector<std::vector<int>> keys;
  for (const auto& p : doc["products"]) {
    std::vector<int> key;
    for (const auto& id : p["args"]) key.push_back(*alg.find(id.get<std::string>()));
    keys.push_back(key);
    for (const auto& entry : p["result"]) EXPECT_NE(entry[1], "0");
  }
  EXPECT_FALSE(keys.empty());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Generator, AlwaysValid) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const auto mode = s % 2 ? GeneratorMode::general_symbolic : GeneratorMode::multiplicative;
    const auto p = test::spread_params(s, mode, 6);
    const auto alg = generate_random(p);
    ASSERT_TRUE(validate_algebra(alg).ok()) << "seed " << s;
    EXPECT_EQ(alg.arity(), p.arity);
    EXPECT_EQ(alg.w_dim(), p.basis_count);
    EXPECT_EQ(alg.v_dim(), p.dim_v);
  }
}

TEST(Generator, DeterministicAndSeedSensitive) {
  GeneratorParams p;
  p.basis_count = 5;
  p.seed = 42;
  EXPECT_EQ(serialize(generate_random(p)), serialize(generate_random(p)));
  auto q = p;
  q.seed = 43;
  EXPECT_NE(serialize(generate_random(p)), serialize(generate_random(q)));
}

TEST(Generator, ZeroDensityGivesZeroProducts) {
  GeneratorParams p;
  p.density = 0;
  p.mode = GeneratorMode::general_symbolic;
  p.dim_v = 2;
  const auto alg = generate_random(p);
  EXPECT_TRUE(alg.products().empty());
}

TEST(Generator, ParameterChecks) {
  const auto expect_rejected = [](auto mutate) {
    GeneratorParams p;
    mutate(p);
    EXPECT_THROW(check_params(p), StructuralError);
  };
  expect_rejected([](GeneratorParams& p) { p.arity = 4; });
  expect_rejected([](GeneratorParams& p) { p.basis_count = 0; });
  expect_rejected([](GeneratorParams& p) { p.basis_count = 9; });
  expect_rejected([](GeneratorParams& p) { p.dim_v = 1; });
  expect_rejected([](GeneratorParams& p) {
    p.mode = GeneratorMode::general_symbolic;
    p.dim_v = 5;
  });
  expect_rejected([](GeneratorParams& p) { p.density = 1.5; });
  EXPECT_EQ(parse_generator_mode("general-symbolic"), GeneratorMode::general_symbolic);
  EXPECT_THROW(parse_generator_mode("dense"), StructuralError);
}

TEST(Cli, Classes) {
  const auto r = cli_dispatch({"classes", fixture_path("two_block")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{{1,2},{3}}\ncount: 2\n");
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(cli_dispatch({"validate", fixture_path("sl2")}).exit_code, 0);
  const auto bad = cli_dispatch({"validate", fixture_path("invalid/grp2_bad_grading")});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("grading: (e0,e1) at /products/1"), std::string::npos);
  const auto dup = cli_dispatch({"validate", fixture_path("invalid/duplicate_id")});
  EXPECT_EQ(dup.exit_code, 2);
  EXPECT_NE(dup.err.find("duplicate basis id"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli_dispatch({}).exit_code, 2);
  EXPECT_EQ(cli_dispatch({"bogus"}).exit_code, 2);
  EXPECT_EQ(cli_dispatch({"classes"}).exit_code, 2);
  EXPECT_EQ(cli_dispatch({"classes", fixture_path("sl2"), "--report", "xml"}).exit_code, 2);
  EXPECT_EQ(cli_dispatch({"classes", fixture_path("absent")}).exit_code, 2);
}

TEST(Cli, JsonReport) {
  const auto r = cli_dispatch({"classes", fixture_path("two_block"), "--report", "json"});
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "{{1,2},{3}}");
  EXPECT_EQ(j["count"], 2);
}

TEST(Cli, CheckIdeal) {
  const auto path = fixture_path("heisenberg");
  const auto no = cli_dispatch({"check-ideal", path, "--w-part", "1"});
  EXPECT_EQ(no.exit_code, 1);
  EXPECT_NE(no.out.find("witness: <1, 2>_[1,2] = z"), std::string::npos);
  EXPECT_EQ(cli_dispatch({"check-ideal", path, "--w-part", "1", "--v-part", "1"}).exit_code, 0);
  EXPECT_EQ(cli_dispatch({"check-ideal", path, "--w-part", "9"}).exit_code, 2);
}

TEST(Cli, PropertyCommandsExitOneOnFailure) {
  EXPECT_EQ(cli_dispatch({"mu-qm", fixture_path("heisenberg")}).exit_code, 1);
  EXPECT_EQ(cli_dispatch({"mu-qm", fixture_path("grp2")}).exit_code, 0);
  EXPECT_EQ(cli_dispatch({"identity", fixture_path("super_perturbed")}).exit_code, 1);
  EXPECT_EQ(cli_dispatch({"identity", fixture_path("super"), "--scheme", "leibniz"}).exit_code, 0);
  EXPECT_EQ(cli_dispatch({"tight", fixture_path("heisenberg_u")}).exit_code, 1);
  EXPECT_EQ(cli_dispatch({"minimal", fixture_path("grp2"), "--method", "both"}).exit_code, 0);
}

TEST(Cli, GenToStdoutAndFile) {
  const auto r = cli_dispatch({"gen", "--seed", "3", "--basis", "4", "--mode", "general_symbolic", "--dim-v", "1"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto alg = parse_algebra(r.out);
  EXPECT_EQ(alg.w_dim(), 4);
  EXPECT_EQ(alg.v_dim(), 1);
  const auto out = (std::filesystem::temp_directory_path() / "qmalg_gen_test.json").string();
  ASSERT_EQ(cli_dispatch({"gen", "--seed", "3", "--basis", "4", "--mode", "general_symbolic", "--dim-v", "1", "-o", out})
                .exit_code,
            0);
  EXPECT_EQ(read_text(out), r.out);
  std::remove(out.c_str());
  EXPECT_EQ(cli_dispatch({"gen", "--basis", "12"}).exit_code, 2);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"decompose", fixture_path("sl2_split_double")},
                                                                {"minimal", fixture_path("super"), "--method", "both"},
                                                                {"center", fixture_path("zero"), "--report", "json"}}) {
    const auto a = cli_dispatch(args);
    const auto b = cli_dispatch(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.exit_code, b.exit_code);
  }
}
