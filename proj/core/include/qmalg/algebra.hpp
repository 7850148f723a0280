#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmalg/group.hpp"
#include "qmalg/permutation.hpp"
#include "qmalg/scalar.hpp"
#include "qmalg/validation.hpp"

namespace qmalg {

struct BasisElement {
  std::string id;
  GroupElement degree;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Structure constants keyed by n-tuples of combined-basis indices.
using ProductMap = std::map<std::vector<int>, Vec>;

/// A finite-dimensional n-ary graded algebra L = V (+) W with explicit
/// homogeneous bases. The combined basis lists the W-basis {e_i : i in I}
/// first (indices 0..|I|-1) followed by the V-basis. Coordinate vectors
/// (Vec) are always over this combined basis.
class ConcreteAlgebra {
 public:
  /// Checks shapes only (arity, index ranges, vector lengths, degrees in the
  /// group, unique ids); axioms are checked by the validate_* functions.
  /// Zero product vectors are dropped. Throws StructuralError.
  ConcreteAlgebra(int arity, Bicharacter eps, std::vector<BasisElement> w_basis,
                  std::vector<BasisElement> v_basis, ProductMap products,
                  std::optional<std::string> identity_scheme = std::nullopt);

  int arity() const { return arity_; }
  const GradingGroup& group() const { return eps_.group(); }
  const Bicharacter& bicharacter() const { return eps_; }

  const std::vector<BasisElement>& w_basis() const { return w_basis_; }
  const std::vector<BasisElement>& v_basis() const { return v_basis_; }
  int w_dim() const { return static_cast<int>(w_basis_.size()); }
  int v_dim() const { return static_cast<int>(v_basis_.size()); }
  int dim() const { return w_dim() + v_dim(); }

  bool is_v(int b) const { return b >= w_dim(); }
  const BasisElement& basis(int b) const;
  const GroupElement& degree(int b) const { return basis(b).degree; }
  const std::string& id(int b) const { return basis(b).id; }
  std::optional<int> find(const std::string& id) const;

  /// Value of <b_1, ..., b_n> on combined-basis indices; the zero vector
  /// when absent.
  const Vec& product(std::span<const int> args) const;
  /// Nonzero structure constants in key order.
  const ProductMap& products() const { return products_; }

  const std::optional<std::string>& identity_scheme() const { return scheme_; }

  /// Semantic equality: same arity, bicharacter values, bases and products.
  friend bool operator==(const ConcreteAlgebra& a, const ConcreteAlgebra& b);

 private:
  std::size_t flat_index(std::span<const int> args) const;

  int arity_;
  Bicharacter eps_;
  std::vector<BasisElement> w_basis_;
  std::vector<BasisElement> v_basis_;
  ProductMap products_;
  std::vector<Vec> values_;
  std::vector<int> dense_;  // index into values_, -1 for zero
  Vec zero_;
  std::optional<std::string> scheme_;
};

/// <args>_sigma = <args[sigma(1)], ..., args[sigma(n)]> expanded
/// n-linearly over the structure constants.
Vec eval_product(const ConcreteAlgebra& alg, const Permutation& sigma, std::span<const Vec> args);
Vec multiply(const ConcreteAlgebra& alg, std::span<const Vec> args);

/// Every basis vector in the support of a product must have the degree of
/// the sum of the input degrees.
ValidationReport validate_grading(const ConcreteAlgebra& alg);

/// Degree of v if it is nonzero and homogeneous.
std::optional<GroupElement> homogeneous_degree(const ConcreteAlgebra& alg, const Vec& v);

/// New algebra whose W-basis index p is old index perm(p); V untouched.
ConcreteAlgebra relabel_w(const ConcreteAlgebra& alg, const Permutation& perm);

/// "2*e - 1/2*z", "0".
std::string format_vector(const ConcreteAlgebra& alg, const Vec& v);

}  // namespace qmalg
