#include "qmalg/linalg.hpp"

#include <algorithm>

#include "qmalg/errors.hpp"

namespace qmalg {

Subspace Subspace::span(std::size_t ambient, std::span<const Vec> generators) {
  Subspace s(ambient);
  for (const auto& g : generators) s.add(g);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t k = 0; k < ambient; ++k) s.add(unit_vec(ambient, k));
  return s;
}

Vec Subspace::residual(const Vec& v) const {
  if (v.size() != ambient_) throw StructuralError("subspace: vector length mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (sgn(c) != 0) add_scaled(r, -c, rows_[k]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(residual(v)); }

bool Subspace::add(const Vec& v) {
  Vec r = residual(v);
  auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& c) { return sgn(c) != 0; });
  if (lead == r.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - r.begin());
  const Scalar inv = 1 / r[pivot];
  for (auto& c : r) c *= inv;
  for (auto& row : rows_) {
    const Scalar c = row[pivot];
    if (sgn(c) != 0) add_scaled(row, -c, r);
  }
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + offset, std::move(r));
  return true;
}

std::vector<Scalar> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw StructuralError("subspace: vector is not a member");
  std::vector<Scalar> out(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) out[k] = v[pivots_[k]];
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& row : other.rows_) s.add(row);
  return s;
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
  return dim() + other.dim() - sum(other).dim();
}

std::vector<Vec> rref(std::span<const Vec> rows, std::size_t cols) {
  return Subspace::span(cols, rows).basis();
}

std::size_t rank(std::span<const Vec> rows, std::size_t cols) {
  return Subspace::span(cols, rows).dim();
}

Subspace nullspace(std::span<const Vec> rows, std::size_t cols) {
  const Subspace row_space = Subspace::span(cols, rows);
  const auto& pivots = row_space.pivots();
  const auto& basis = row_space.basis();
  Subspace kernel(cols);
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    Vec x(cols);
    x[free] = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) x[pivots[k]] = -basis[k][free];
    kernel.add(x);
  }
  return kernel;
}

}  // namespace qmalg
