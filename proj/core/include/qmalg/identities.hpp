#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmalg/algebra.hpp"
#include "qmalg/group.hpp"
#include "qmalg/permutation.hpp"

namespace qmalg {

/// Right-hand term of a rewriting identity. Nested terms read
///   alpha <x_s1(1), ..., x_s1(i-1), <y_s2(1), ..., x_s1(i) at pos j, ..., y_s2(n-1)>, x_s1(i+1), ..., x_s1(n)>
/// and flat terms read alpha <x_s1(1), ..., x_s1(n)>. Slots are 0-based.
struct IdentityTerm {
  Scalar alpha;
  Permutation sigma1;
  Permutation sigma2;  ///< nested only, on n-1 points
  int slot_i = 0;      ///< nested only: outer slot of the inner product
  int slot_j = 0;      ///< nested only: position of x_s1(i) inside it
};

enum class IdentityShape { nested, flat };

/// Nested: <y_1, ..., <x_1, ..., x_n> at pos k, ..., y_{n-1}> = sum of terms.
/// Flat: <x_1, ..., x_n> = sum of terms.
struct Identity {
  IdentityShape shape = IdentityShape::nested;
  int k = 0;  ///< nested only, 0-based
  std::vector<IdentityTerm> terms;
};

struct IdentityScheme {
  int arity = 2;
  std::string name;
  std::vector<Identity> identities;
};

/// Nonzero coefficients, permutation sizes, slot ranges. Throws
/// StructuralError.
void validate_scheme(const IdentityScheme& scheme);

/// leibniz (n = 2), n_lie (n >= 2), antisymmetry (n >= 2), associative
/// (n = 2). Throws StructuralError on an unknown name or wrong arity.
IdentityScheme builtin_scheme(std::string_view name, int n);

/// Variables are x_1..x_n (0..n-1) then y_1..y_{n-1} (n..2n-2).
/// Order in which the variables of the left side occur.
std::vector<int> lhs_order(const IdentityScheme& scheme, const Identity& id);
std::vector<int> term_order(const IdentityScheme& scheme, const Identity& id, const IdentityTerm& t);

/// Product of eps(g, h) over the adjacent swaps of neighbours (g before h)
/// that turn `degrees` into sigma.apply(degrees). Throws StructuralError on a
/// size mismatch.
Scalar epsilon_sigma(const std::vector<GroupElement>& degrees, const Permutation& sigma, const Bicharacter& eps);

/// Follows an explicit path: swaps[k] = p exchanges the current entries at
/// positions p and p+1. Returns the accumulated factor and the permutation
/// reached (as in Permutation::apply).
std::pair<Scalar, Permutation> epsilon_along(const std::vector<GroupElement>& degrees,
                                             const std::vector<std::size_t>& swaps, const Bicharacter& eps);

/// Same value computed from inverted pairs instead of a swap path.
Scalar epsilon_sigma_pairs(const std::vector<GroupElement>& degrees, const Permutation& sigma, const Bicharacter& eps);

/// An identity scheme whose terms carry the permutation taking the left
/// side's variable order to the term's order; the sign factor is resolved
/// from the argument degrees at evaluation time.
struct ColorScheme {
  IdentityScheme scheme;
  Bicharacter eps;
  std::vector<std::vector<Permutation>> shifts;  ///< [identity][term]
};

ColorScheme colorize(const IdentityScheme& scheme, const Bicharacter& eps);

struct IdentityCounterexample {
  std::size_t identity = 0;
  std::vector<int> tuple;  ///< combined-basis indices of x_1..x_n, y_1..y_{n-1}
  Vec lhs;
  Vec rhs;
};

struct IdentityReport {
  bool holds = true;
  std::size_t tuples = 0;
  std::size_t evaluations = 0;
  std::optional<IdentityCounterexample> counterexample;
};

/// Side values of one identity on one tuple of combined-basis indices.
std::pair<Vec, Vec> evaluate_identity(const ConcreteAlgebra& alg, const ColorScheme& scheme, std::size_t identity,
                                      const std::vector<int>& tuple);

/// Every tuple of 2n-1 basis elements, lexicographically, every identity in
/// order; stops at the first failure. Throws StructuralError on an arity or
/// grading group mismatch.
IdentityReport check_identity(const ConcreteAlgebra& alg, const ColorScheme& scheme);

std::string to_string(const ConcreteAlgebra& alg, const IdentityReport& report);

/// JSON scheme document, all indices 1-based:
/// {"arity": 2, "name": "...", "identities": [{"shape": "nested", "k": 2,
///  "terms": [{"alpha": "1", "sigma1": [1,2], "sigma2": [1], "i": 1, "j": 2}]},
///  {"shape": "flat", "terms": [{"alpha": "-1", "sigma": [2,1]}]}]}
IdentityScheme parse_scheme(std::string_view text);
std::string serialize_scheme(const IdentityScheme& scheme);

/// Builtin name or a path to a scheme document.
IdentityScheme resolve_scheme(const std::string& ref, int arity);

}  // namespace qmalg
