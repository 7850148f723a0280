#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmalg/algebra.hpp"
#include "qmalg/connections.hpp"
#include "qmalg/linalg.hpp"
#include "qmalg/permutation.hpp"

namespace qmalg {

enum class Provenance { computed, candidate };

/// Subspace of L of the form (span of some e_j) (+) (subspace of V).
struct IdealDescription {
  std::vector<int> w_part;  ///< sorted W-basis indices
  Subspace v_part;          ///< in V coordinates (ambient dim V)
  Provenance provenance = Provenance::candidate;

  std::size_t dim() const { return w_part.size() + v_part.dim(); }
  friend bool operator==(const IdealDescription& a, const IdealDescription& b) {
    return a.w_part == b.w_part && a.v_part == b.v_part;
  }
};

/// User candidate. V rows are in V coordinates. Throws StructuralError on
/// out-of-range or repeated indices, wrong row length, dependent rows or a
/// non-homogeneous row.
IdealDescription make_candidate(const ConcreteAlgebra& alg, std::vector<int> w_part, const std::vector<Vec>& v_rows);

/// Embeds a V-coordinate vector into L coordinates.
Vec embed_v(const ConcreteAlgebra& alg, const Vec& v);

/// W unit vectors followed by the embedded V-part rows.
std::vector<Vec> joint_basis(const ConcreteAlgebra& alg, const IdealDescription& ideal);
Subspace joint_space(const ConcreteAlgebra& alg, const IdealDescription& ideal);

/// "({1,2}, span{z})", "({3}, 0)".
std::string to_string(const ConcreteAlgebra& alg, const IdealDescription& ideal);

/// J_[i] for a class of the computed partition.
IdealDescription component_ideal(const ConcreteAlgebra& alg, const std::vector<int>& cls);
IdealDescription component_ideal(const ConcreteAlgebra& alg, const ConnectionPartition& partition,
                                 const std::vector<int>& cls);

/// <args>_sigma = product. args are listed before sigma is applied.
struct ProductWitness {
  Permutation sigma;
  std::vector<Vec> args;
  Vec product;
};

std::string to_string(const ConcreteAlgebra& alg, const ProductWitness& w);

struct IdealCheck {
  bool ok = true;
  std::optional<ProductWitness> witness;
};

/// Brute force <I, L, ..., L>_sigma in I over every sigma.
IdealCheck is_ideal(const ConcreteAlgebra& alg, const IdealDescription& cand);

/// <J_A, J_B, L, ..., L>_sigma = 0 for all sigma. Throws StructuralError if
/// A == B.
IdealCheck orthogonality_witness(const ConcreteAlgebra& alg, const std::vector<int>& a, const std::vector<int>& b);
/// Same check on explicit ideals, without reference to the partition.
IdealCheck orthogonality_witness(const ConcreteAlgebra& alg, const IdealDescription& a, const IdealDescription& b);

struct PairCheck {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t intersection_dim = 0;
  IdealCheck orthogonal;
};

struct Decomposition {
  ConnectionPartition partition;
  Subspace complement;  ///< U, in V coordinates
  std::vector<IdealDescription> ideals;
  std::vector<IdealCheck> ideal_checks;
  std::vector<PairCheck> pairs;  ///< every a < b

  /// dim U + sum of ideal dimensions equals the dimension of their sum.
  bool direct() const { return direct_; }
  bool all_ideals() const;
  bool all_orthogonal() const;

  bool direct_ = false;
};

Decomposition decompose(const ConcreteAlgebra& alg);

/// Solution space of x with <x, L, ..., L>_sigma = 0 for every sigma, in L
/// coordinates.
Subspace center(const ConcreteAlgebra& alg);

/// Span of the V-valued products of W-basis tuples, in V coordinates.
Subspace v_products(const ConcreteAlgebra& alg);

struct TightCheck {
  bool tight = true;
  std::optional<int> witness;  ///< V-basis index (0-based) outside the span
};

TightCheck is_tight(const ConcreteAlgebra& alg);

/// First J_[i] (classes by smallest index) that is a proper ideal when the
/// partition has at least two classes.
std::optional<IdealDescription> simplicity_obstruction(const ConcreteAlgebra& alg);

}  // namespace qmalg
