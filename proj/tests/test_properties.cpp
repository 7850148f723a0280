#include <gtest/gtest.h>

#include "properties.hpp"
#include "qmalg/decomposition.hpp"
#include "qmalg/io.hpp"

using namespace qmalg;

namespace {

ConcreteAlgebra general(std::uint64_t seed) {
  return generate_random(test::spread_params(seed, GeneratorMode::general_symbolic, 5, 3));
}

// closure of the joint basis under products with L in any slot
bool closed(const ConcreteAlgebra& alg, const IdealDescription& ideal) {
  const auto d = static_cast<std::size_t>(alg.dim());
  const auto n = static_cast<std::size_t>(alg.arity());
  const auto basis = joint_basis(alg, ideal);
  const auto span = Subspace::span(d, basis);
  for (const auto& x : basis) {
    for (std::size_t slot = 0; slot < n; ++slot) {
      std::vector<int> t(n - 1, 0);
      while (true) {
        std::vector<Vec> args;
        for (std::size_t k = 0, r = 0; k < n; ++k) {
          args.push_back(k == slot ? x : unit_vec(d, static_cast<std::size_t>(t[r++])));
        }
        if (!span.contains(multiply(alg, args))) return false;
        std::size_t k = t.size();
        while (k > 0 && ++t[k - 1] == alg.dim()) t[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  return true;
}

}  // namespace

TEST(GeneratedWithV, SpanIdentity) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto alg = general(s);
    const auto dec = decompose(alg);
    std::vector<Vec> all;
    for (const auto& row : dec.complement.basis()) all.push_back(embed_v(alg, row));
    for (const auto& ideal : dec.ideals) {
      for (const auto& v : joint_basis(alg, ideal)) all.push_back(v);
    }
    ASSERT_EQ(rank(all, static_cast<std::size_t>(alg.dim())), static_cast<std::size_t>(alg.dim())) << "seed " << s;
    ASSERT_EQ(dec.complement.intersection_dim(v_products(alg)), 0u) << "seed " << s;
  }
}

TEST(GeneratedWithV, IdealCheckMatchesClosure) {
  std::size_t open = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto alg = general(s);
    const auto dec = decompose(alg);
    for (const auto& ideal : dec.ideals) {
      const auto check = is_ideal(alg, ideal);
      EXPECT_EQ(check.ok, closed(alg, ideal)) << "seed " << s;
      EXPECT_EQ(check.ok, !check.witness.has_value()) << "seed " << s;
      open += !check.ok;
    }
    EXPECT_TRUE(dec.all_orthogonal()) << "seed " << s;
  }
  EXPECT_GT(open, 0u);
}

TEST(GeneratedWithV, CenterlessAndTightIsDirect) {
  std::size_t used = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto alg = general(s);
    if (!center(alg).empty() || !is_tight(alg).tight) continue;
    ++used;
    EXPECT_TRUE(decompose(alg).direct()) << "seed " << s;
  }
  EXPECT_GT(used, 0u);
}

TEST(GeneratedWithV, ClassesRefineToWParts) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto alg = general(s);
    const auto dec = decompose(alg);
    std::vector<int> seen(static_cast<std::size_t>(alg.w_dim()), 0);
    for (const auto& ideal : dec.ideals) {
      for (int i : ideal.w_part) ++seen[static_cast<std::size_t>(i)];
    }
    for (int c : seen) EXPECT_EQ(c, 1) << "seed " << s;
  }
}

TEST(GeneratedWithV, SymbolicTableIsQuasiMultiplicative) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    EXPECT_TRUE(validate_quasi_mult(symbolic_of_concrete(general(s))).ok()) << "seed " << s;
  }
}

TEST(GeneratedWithV, SerializationRoundTrip) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto alg = general(s);
    const auto text = serialize(alg);
    const auto back = parse_algebra(text);
    EXPECT_TRUE(back == alg) << "seed " << s;
    EXPECT_EQ(serialize(back), text) << "seed " << s;
  }
}
