#include "qmalg/group.hpp"

#include "qmalg/errors.hpp"

namespace qmalg {

GradingGroup::GradingGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  order_ = 1;
  for (int m : orders_) {
    if (m <= 0) throw StructuralError("grading group: cyclic orders must be positive");
    order_ *= static_cast<std::size_t>(m);
  }
}

bool GradingGroup::contains(const GroupElement& g) const {
  if (g.size() != orders_.size()) return false;
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (g[t] < 0 || g[t] >= orders_[t]) return false;
  }
  return true;
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (!contains(a) || !contains(b)) throw StructuralError("grading group: element outside the group");
  GroupElement out(orders_.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = (a[t] + b[t]) % orders_[t];
  return out;
}

GroupElement GradingGroup::sum(const std::vector<GroupElement>& elems) const {
  GroupElement acc = zero();
  for (const auto& g : elems) acc = add(acc, g);
  return acc;
}

std::size_t GradingGroup::index_of(const GroupElement& g) const {
  if (!contains(g)) throw StructuralError("grading group: element " + to_string(g) + " outside the group");
  std::size_t idx = 0;
  for (std::size_t t = 0; t < g.size(); ++t) {
    idx = idx * static_cast<std::size_t>(orders_[t]) + static_cast<std::size_t>(g[t]);
  }
  return idx;
}

GroupElement GradingGroup::element(std::size_t index) const {
  GroupElement g(orders_.size());
  for (std::size_t t = orders_.size(); t-- > 0;) {
    const auto m = static_cast<std::size_t>(orders_[t]);
    g[t] = static_cast<int>(index % m);
    index /= m;
  }
  return g;
}

std::vector<GroupElement> GradingGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t k = 0; k < order_; ++k) out.push_back(element(k));
  return out;
}

std::string to_string(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(g[t]);
  }
  return s + ")";
}

Bicharacter::Bicharacter(GradingGroup group, Kind kind)
    : group_(std::move(group)), kind_(kind), table_(group_.order() * group_.order()) {}

Bicharacter Bicharacter::trivial(const GradingGroup& group) {
  Bicharacter eps(group, Kind::trivial);
  for (auto& e : eps.table_) e = Scalar(1);
  return eps;
}

Bicharacter Bicharacter::super(const GradingGroup& group) {
  if (group.rank() == 0 || group.orders()[0] % 2 != 0) {
    throw StructuralError("super bicharacter needs a grading group whose first cyclic order is even");
  }
  Bicharacter eps(group, Kind::super);
  const std::size_t n = group.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int parity = (group.element(a)[0] * group.element(b)[0]) % 2;
      eps.table_[a * n + b] = Scalar(parity ? -1 : 1);
    }
  }
  return eps;
}

Bicharacter Bicharacter::from_table(const GradingGroup& group, const std::vector<Entry>& entries) {
  Bicharacter eps(group, Kind::table);
  const std::size_t n = group.order();
  for (const auto& e : entries) {
    const std::size_t slot = group.index_of(e.g) * n + group.index_of(e.h);
    if (eps.table_[slot]) {
      throw StructuralError("bicharacter: duplicate entry for " + to_string(e.g) + "," + to_string(e.h));
    }
    eps.table_[slot] = e.value;
  }
  return eps;
}

std::optional<Scalar> Bicharacter::lookup(const GroupElement& g, const GroupElement& h) const {
  return table_[group_.index_of(g) * group_.order() + group_.index_of(h)];
}

Scalar Bicharacter::operator()(const GroupElement& g, const GroupElement& h) const {
  auto v = lookup(g, h);
  if (!v) throw StructuralError("bicharacter: missing entry for " + to_string(g) + "," + to_string(h));
  return *v;
}

bool Bicharacter::complete() const {
  for (const auto& e : table_) {
    if (!e) return false;
  }
  return true;
}

std::vector<Bicharacter::Entry> Bicharacter::entries() const {
  std::vector<Entry> out;
  const std::size_t n = group_.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a * n + b]) out.push_back({group_.element(a), group_.element(b), *table_[a * n + b]});
    }
  }
  return out;
}

ValidationReport validate_bicharacter(const Bicharacter& eps, const GradingGroup& group) {
  if (!(eps.group() == group)) throw StructuralError("bicharacter is defined on a different grading group");
  const auto elems = group.elements();
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      if (!eps.lookup(g, h)) {
        throw StructuralError("bicharacter: missing entry for " + to_string(g) + "," + to_string(h));
      }
    }
  }

  ValidationReport report;
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      if (sgn(eps(g, h)) == 0) report.add("nonzero", to_string(g) + "," + to_string(h), "0");
    }
  }
  // axiom 1: eps(k, g+h) = eps(k, g) eps(k, h)
  for (const auto& k : elems) {
    for (const auto& g : elems) {
      for (const auto& h : elems) {
        const Scalar lhs = eps(k, group.add(g, h));
        const Scalar rhs = eps(k, g) * eps(k, h);
        if (lhs != rhs) {
          report.add("axiom 1", "k=" + to_string(k) + " g=" + to_string(g) + " h=" + to_string(h),
                     to_string(lhs) + " != " + to_string(rhs));
        }
      }
    }
  }
  // axiom 2: eps(g+h, k) = eps(g, k) eps(h, k)
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      for (const auto& k : elems) {
        const Scalar lhs = eps(group.add(g, h), k);
        const Scalar rhs = eps(g, k) * eps(h, k);
        if (lhs != rhs) {
          report.add("axiom 2", "g=" + to_string(g) + " h=" + to_string(h) + " k=" + to_string(k),
                     to_string(lhs) + " != " + to_string(rhs));
        }
      }
    }
  }
  // axiom 3: eps(g, h) eps(h, g) = 1
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      const Scalar prod = eps(g, h) * eps(h, g);
      if (prod != 1) report.add("axiom 3", "g=" + to_string(g) + " h=" + to_string(h), to_string(prod) + " != 1");
    }
  }
  return report;
}

}  // namespace qmalg
