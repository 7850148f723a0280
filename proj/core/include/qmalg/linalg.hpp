#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qmalg/scalar.hpp"

namespace qmalg {

/// A subspace of F^n kept as its reduced row echelon basis. Because the RREF
/// of a subspace is unique, two Subspace objects compare equal exactly when
/// they describe the same subspace.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, std::span<const Vec> generators);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// RREF rows ordered by pivot column; each pivot entry is 1.
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Returns true if the dimension grew.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  /// v minus its projection along pivots; zero iff v lies in the subspace.
  Vec residual(const Vec& v) const;
  /// Coordinates of v with respect to basis(); v must lie in the subspace.
  std::vector<Scalar> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  std::size_t intersection_dim(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form of the given rows with zero rows dropped.
std::vector<Vec> rref(std::span<const Vec> rows, std::size_t cols);

std::size_t rank(std::span<const Vec> rows, std::size_t cols);

/// Solution space of { x : row . x = 0 for every row }.
Subspace nullspace(std::span<const Vec> rows, std::size_t cols);

}  // namespace qmalg
