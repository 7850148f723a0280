#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmalg/algebra.hpp"

namespace qmalg {

enum class GeneratorMode { multiplicative, general_symbolic };

std::string to_string(GeneratorMode m);
/// "multiplicative" or "general_symbolic" (also "general-symbolic").
GeneratorMode parse_generator_mode(const std::string& text);

struct GeneratorParams {
  int arity = 2;
  int basis_count = 3;
  int dim_v = 0;
  GeneratorMode mode = GeneratorMode::multiplicative;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::vector<int> group_orders{2};
};

/// Throws StructuralError unless 2 <= arity <= 3, 1 <= |I| <= 8,
/// 0 <= dim V <= 4 (0 in multiplicative mode) and density in [0, 1].
void check_params(const GeneratorParams& p);

/// Random quasi-multiplicative algebra. Degrees are drawn first and a
/// product may only land on basis elements of the matching degree, so the
/// output is graded by construction. Same parameters, same algebra.
ConcreteAlgebra generate_random(const GeneratorParams& p);

}  // namespace qmalg
