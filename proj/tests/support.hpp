#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qmalg/algebra.hpp"
#include "qmalg/generator.hpp"
#include "qmalg/io.hpp"

namespace qmalg::test {

inline std::string fixture_path(const std::string& name) { return std::string(QMALG_FIXTURE_DIR) + "/" + name + ".json"; }

inline ConcreteAlgebra fixture(const std::string& name) { return load_algebra(fixture_path(name)); }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline const std::vector<std::string>& valid_fixtures() {
  static const std::vector<std::string> names{
      "grp2",      "grp2_double",      "heisenberg", "heisenberg_u",    "sl2",       "sl2_double", "sl2_split",
      "sl2_split_double", "super", "super_perturbed", "two_block", "zero", "zero_single", "zero_u"};
  return names;
}

/// Parameters spread over the desk-scale range by the seed alone.
inline GeneratorParams spread_params(std::uint64_t seed, GeneratorMode mode, int max_i, int max_v = 2) {
  GeneratorParams p;
  p.seed = seed;
  p.mode = mode;
  p.arity = 2 + static_cast<int>(seed % 2);
  p.basis_count = 1 + static_cast<int>((seed / 2) % static_cast<std::uint64_t>(max_i));
  p.dim_v = mode == GeneratorMode::multiplicative ? 0 : static_cast<int>((seed / 16) % static_cast<std::uint64_t>(max_v + 1));
  p.density = 0.2 + 0.15 * static_cast<double>((seed / 3) % 5);
  p.group_orders = (seed / 7) % 3 == 0 ? std::vector<int>{} : ((seed / 7) % 3 == 1 ? std::vector<int>{2} : std::vector<int>{2, 3});
  return p;
}

inline Vec basis_vec(const ConcreteAlgebra& alg, const std::string& id) {
  return unit_vec(static_cast<std::size_t>(alg.dim()), static_cast<std::size_t>(*alg.find(id)));
}

}  // namespace qmalg::test
