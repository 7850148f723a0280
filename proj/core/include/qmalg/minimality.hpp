#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmalg/algebra.hpp"
#include "qmalg/connections.hpp"
#include "qmalg/decomposition.hpp"

namespace qmalg {

/// i in mu(head, tail) but no sigma and V-fill gives a nonzero multiple of e_i.
struct MuFailure {
  int i = 0;
  ExtIndex head;
  ArgPack tail;
  std::vector<Vec> products;  ///< distinct values evaluated, in evaluation order
};

std::string to_string(const ConcreteAlgebra& alg, const MuFailure& f);

struct MuCheck {
  bool ok = true;
  std::optional<MuFailure> witness;
};

/// Heads in the order I, v, bar(I), bar v; tails as in all_arg_packs; for
/// each (head, tail) the members i of mu in increasing order.
MuCheck is_mu_quasi_multiplicative(const ConcreteAlgebra& alg);
std::vector<MuFailure> mu_quasi_multiplicative_failures(const ConcreteAlgebra& alg);

enum class Verdict { minimal, not_minimal, hypotheses_not_met };
enum class Method { theorem, brute_force };

std::string to_string(Verdict v);
std::string to_string(Method m);

struct MinimalityVerdict {
  Verdict verdict = Verdict::minimal;
  Method method = Method::theorem;
  std::optional<IdealDescription> ideal_witness;
  std::optional<std::string> failed_hypothesis;
  std::optional<MuFailure> mu_witness;
  std::string note;
};

/// One line, e.g. "not-minimal, witness ({1}, span{z})".
std::string to_string(const ConcreteAlgebra& alg, const MinimalityVerdict& v);

MinimalityVerdict minimal_by_theorem(const ConcreteAlgebra& alg);

struct OracleBounds {
  int max_i = 6;
  int max_v = 4;
};

/// Normalized, deduplicated V-components of all basis products, followed by
/// the V-basis, in V coordinates.
std::vector<Vec> generating_family(const ConcreteAlgebra& alg);

/// Every subspace spanned by a subset of `family`, by dimension and then
/// discovery order.
std::vector<Subspace> spanned_subspaces(std::size_t ambient, const std::vector<Vec>& family);

/// Throws BoundExceeded outside `bounds`.
MinimalityVerdict minimal_brute_force(const ConcreteAlgebra& alg, OracleBounds bounds = {});

/// The ideal as an algebra in its own right: W-basis {e_j : j in w_part},
/// V-basis the RREF rows of the V-part (named after their pivot element),
/// same degrees, bicharacter and identity scheme. Throws StructuralError if
/// the ideal is not closed under products.
ConcreteAlgebra restrict_to_ideal(const ConcreteAlgebra& alg, const IdealDescription& ideal);

struct ComponentMinimality {
  IdealDescription ideal;
  MinimalityVerdict theorem;
  std::optional<MinimalityVerdict> oracle;  ///< absent when outside the oracle bounds

  bool ok() const {
    return theorem.verdict == Verdict::minimal && (!oracle || oracle->verdict == Verdict::minimal);
  }
};

struct MinimalDecompositionReport {
  bool hypotheses_met = false;
  std::string failed_hypothesis;
  bool direct = false;
  std::vector<ComponentMinimality> components;

  bool ok() const;
};

/// Requires a centerless algebra with V tight and a mu-quasi-multiplicative
/// basis.
MinimalDecompositionReport minimal_decomposition_check(const ConcreteAlgebra& alg, OracleBounds bounds = {});

}  // namespace qmalg
