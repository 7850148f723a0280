#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qmalg/algebra.hpp"
#include "qmalg/validation.hpp"

namespace qmalg {

/// Pattern entry standing for the whole subspace V (the symbol v).
inline constexpr int kVSlot = -1;

enum class TargetKind { zero, basis, into_v };

/// Where a product pattern lands: nowhere, on a line F e_j, or inside V.
struct ProductTarget {
  TargetKind kind = TargetKind::zero;
  int index = -1;  ///< j when kind == basis

  static ProductTarget zero() { return {}; }
  static ProductTarget basis(int j) { return {TargetKind::basis, j}; }
  static ProductTarget into_v() { return {TargetKind::into_v, -1}; }

  friend bool operator==(const ProductTarget&, const ProductTarget&) = default;
};

std::string to_string(const ProductTarget& t);

/// Pattern-level product map: n-tuples over I u {v} -> ProductTarget.
/// Entries of a pattern are W-indices 0..|I|-1 or kVSlot. All patterns
/// start as zero.
class SymbolicTable {
 public:
  SymbolicTable(int arity, int index_count, bool has_v);

  int arity() const { return arity_; }
  int index_count() const { return index_count_; }
  bool has_v() const { return has_v_; }

  ProductTarget at(std::span<const int> pattern) const;
  void set(std::span<const int> pattern, ProductTarget target);

  std::size_t pattern_count() const { return targets_.size(); }
  /// Pattern with flat index `k`, in lexicographic order (v sorts last).
  std::vector<int> pattern(std::size_t k) const;
  ProductTarget at_index(std::size_t k) const { return targets_[k]; }

  friend bool operator==(const SymbolicTable&, const SymbolicTable&) = default;

 private:
  std::size_t flat_index(std::span<const int> pattern) const;

  int arity_;
  int index_count_;
  bool has_v_;
  std::vector<ProductTarget> targets_;
};

enum class PatternShape { all_indices, mixed, all_v };
PatternShape shape_of(std::span<const int> pattern);

/// Reads the quasi-multiplicative structure off the structure constants.
/// Throws QuasiMultViolation when a product cannot be described by a single
/// target (mixed W/V support, two lines, two targets across V-fills).
SymbolicTable symbolic_of_concrete(const ConcreteAlgebra& alg);

/// Checks the three quasi-multiplicativity conditions on a table.
ValidationReport validate_quasi_mult(const SymbolicTable& sym);

/// Bicharacter axioms, grading, symbolic extraction and quasi-mult checks in
/// one report. Missing bicharacter entries still throw StructuralError.
ValidationReport validate_algebra(const ConcreteAlgebra& alg);

/// Throws ValidationError if validate_algebra reports anything.
void require_valid(const ConcreteAlgebra& alg);

}  // namespace qmalg
