#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmalg/scalar.hpp"
#include "qmalg/validation.hpp"

namespace qmalg {

/// Element of Z_{m_1} x ... x Z_{m_k}; component t lies in [0, m_t).
using GroupElement = std::vector<int>;

/// Finite abelian grading group Z_{m_1} x ... x Z_{m_k}. An empty order
/// list is the trivial group.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t order() const { return order_; }

  GroupElement zero() const { return GroupElement(orders_.size(), 0); }
  bool contains(const GroupElement& g) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sum(const std::vector<GroupElement>& elems) const;

  /// Mixed-radix index in [0, order()); throws StructuralError for non-members.
  std::size_t index_of(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;
  std::vector<GroupElement> elements() const;

  friend bool operator==(const GradingGroup& a, const GradingGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<int> orders_;
  std::size_t order_ = 1;
};

std::string to_string(const GroupElement& g);

/// Map G x G -> F \ {0}. Stored as a dense table over element indices;
/// entries may be absent until validation.
class Bicharacter {
 public:
  enum class Kind { trivial, super, table };

  struct Entry {
    GroupElement g;
    GroupElement h;
    Scalar value;
  };

  Bicharacter() = default;

  /// epsilon == 1.
  static Bicharacter trivial(const GradingGroup& group);
  /// epsilon(g, h) = (-1)^(g_1 h_1). Needs an even first cyclic order.
  static Bicharacter super(const GradingGroup& group);
  static Bicharacter from_table(const GradingGroup& group, const std::vector<Entry>& entries);

  const GradingGroup& group() const { return group_; }
  Kind kind() const { return kind_; }

  std::optional<Scalar> lookup(const GroupElement& g, const GroupElement& h) const;
  /// Throws StructuralError when the entry is missing.
  Scalar operator()(const GroupElement& g, const GroupElement& h) const;
  bool complete() const;

  std::vector<Entry> entries() const;

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return a.group_ == b.group_ && a.table_ == b.table_;
  }

 private:
  Bicharacter(GradingGroup group, Kind kind);

  GradingGroup group_;
  Kind kind_ = Kind::trivial;
  std::vector<std::optional<Scalar>> table_;
};

/// Checks the three bicharacter axioms on every triple of `group`.
/// Throws StructuralError if the table does not cover G x G or belongs to a
/// different group; axiom failures are reported, not thrown.
ValidationReport validate_bicharacter(const Bicharacter& eps, const GradingGroup& group);

}  // namespace qmalg
