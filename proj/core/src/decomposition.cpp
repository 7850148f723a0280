#include "qmalg/decomposition.hpp"

#include <algorithm>
#include <set>

#include "qmalg/errors.hpp"
#include "qmalg/symbolic.hpp"

namespace qmalg {

namespace {

// Calls f(tuple) for every tuple of combined-basis indices of length `len`,
// lexicographically. Stops early when f returns false.
template <typename F>
bool for_each_tuple(int dim, std::size_t len, F&& f) {
  std::vector<int> t(len, 0);
  if (dim == 0 && len > 0) return true;
  while (true) {
    if (!f(t)) return false;
    std::size_t k = len;
    while (true) {
      if (k == 0) return true;
      --k;
      if (++t[k] < dim) break;
      t[k] = 0;
    }
  }
}

// Product with the given vectors placed at `slots` and basis elements from
// `rest` filling the remaining positions in order.
Vec product_at(const ConcreteAlgebra& alg, const std::vector<std::size_t>& slots, const std::vector<const Vec*>& vecs,
               const std::vector<int>& rest) {
  const auto n = static_cast<std::size_t>(alg.arity());
  std::vector<int> tuple(n, 0);
  std::vector<bool> taken(n, false);
  for (auto s : slots) taken[s] = true;
  std::size_t r = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (!taken[p]) tuple[p] = rest[r++];
  }

  Vec out = zero_vec(static_cast<std::size_t>(alg.dim()));
  std::vector<std::vector<std::size_t>> supports;
  for (const auto* v : vecs) {
    supports.push_back(support(*v));
    if (supports.back().empty()) return out;
  }
  std::vector<std::size_t> cursor(vecs.size(), 0);
  while (true) {
    Scalar c = 1;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      const auto b = supports[k][cursor[k]];
      tuple[slots[k]] = static_cast<int>(b);
      c *= (*vecs[k])[b];
    }
    add_scaled(out, c, alg.product(tuple));
    std::size_t k = vecs.size();
    while (true) {
      if (k == 0) return out;
      --k;
      if (++cursor[k] < supports[k].size()) break;
      cursor[k] = 0;
    }
  }
}

// sigma sending the listed positions to 0, 1, ... and the remaining
// positions to the following values in order.
Permutation placing(std::size_t n, const std::vector<std::size_t>& slots) {
  std::vector<int> img(n, -1);
  for (std::size_t k = 0; k < slots.size(); ++k) img[slots[k]] = static_cast<int>(k);
  int next = static_cast<int>(slots.size());
  for (auto& x : img) {
    if (x < 0) x = next++;
  }
  return Permutation::from_images(std::move(img));
}

ProductWitness make_witness(const ConcreteAlgebra& alg, const std::vector<std::size_t>& slots,
                            const std::vector<const Vec*>& vecs, const std::vector<int>& rest, Vec product) {
  ProductWitness w{placing(static_cast<std::size_t>(alg.arity()), slots), {}, std::move(product)};
  for (const auto* v : vecs) w.args.push_back(*v);
  for (int b : rest) w.args.push_back(unit_vec(static_cast<std::size_t>(alg.dim()), static_cast<std::size_t>(b)));
  return w;
}

Vec v_component(const ConcreteAlgebra& alg, const Vec& x) {
  return Vec(x.begin() + alg.w_dim(), x.end());
}

bool lies_in_v(const ConcreteAlgebra& alg, const Vec& x) {
  const auto supp = support(x);
  return !supp.empty() && std::all_of(supp.begin(), supp.end(), [&](std::size_t b) { return alg.is_v(static_cast<int>(b)); });
}

const std::vector<int>& checked_class(const ConnectionPartition& partition, const std::vector<int>& cls) {
  for (const auto& c : partition.classes) {
    if (c == cls) return c;
  }
  std::string text = "{";
  for (std::size_t k = 0; k < cls.size(); ++k) text += (k ? "," : "") + std::to_string(cls[k] + 1);
  throw StructuralError("class " + text + "} is not a connection class of the algebra");
}

}  // namespace

Vec embed_v(const ConcreteAlgebra& alg, const Vec& v) {
  if (v.size() != static_cast<std::size_t>(alg.v_dim())) throw StructuralError("V vector has the wrong length");
  Vec out = zero_vec(static_cast<std::size_t>(alg.w_dim()));
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

IdealDescription make_candidate(const ConcreteAlgebra& alg, std::vector<int> w_part, const std::vector<Vec>& v_rows) {
  std::sort(w_part.begin(), w_part.end());
  if (std::adjacent_find(w_part.begin(), w_part.end()) != w_part.end()) {
    throw StructuralError("candidate W-part repeats an index");
  }
  for (int i : w_part) {
    if (i < 0 || i >= alg.w_dim()) throw StructuralError("candidate W-part index out of range");
  }
  IdealDescription out{std::move(w_part), Subspace(static_cast<std::size_t>(alg.v_dim())), Provenance::candidate};
  for (const auto& row : v_rows) {
    if (row.size() != static_cast<std::size_t>(alg.v_dim())) {
      throw StructuralError("candidate V-part row has length " + std::to_string(row.size()) + ", dim V is " +
                            std::to_string(alg.v_dim()));
    }
    if (!homogeneous_degree(alg, embed_v(alg, row))) {
      throw StructuralError("candidate V-part row is zero or not homogeneous");
    }
    if (!out.v_part.add(row)) throw StructuralError("candidate V-part rows are linearly dependent");
  }
  return out;
}

std::vector<Vec> joint_basis(const ConcreteAlgebra& alg, const IdealDescription& ideal) {
  std::vector<Vec> out;
  for (int i : ideal.w_part) out.push_back(unit_vec(static_cast<std::size_t>(alg.dim()), static_cast<std::size_t>(i)));
  for (const auto& row : ideal.v_part.basis()) out.push_back(embed_v(alg, row));
  return out;
}

Subspace joint_space(const ConcreteAlgebra& alg, const IdealDescription& ideal) {
  const auto basis = joint_basis(alg, ideal);
  return Subspace::span(static_cast<std::size_t>(alg.dim()), basis);
}

std::string to_string(const ConcreteAlgebra& alg, const IdealDescription& ideal) {
  std::string s = "({";
  for (std::size_t k = 0; k < ideal.w_part.size(); ++k) {
    if (k) s += ',';
    s += alg.id(ideal.w_part[k]);
  }
  s += "}, ";
  if (ideal.v_part.empty()) return s + "0)";
  s += "span{";
  for (std::size_t k = 0; k < ideal.v_part.dim(); ++k) {
    if (k) s += ", ";
    s += format_vector(alg, embed_v(alg, ideal.v_part.basis()[k]));
  }
  return s + "})";
}

std::string to_string(const ConcreteAlgebra& alg, const ProductWitness& w) {
  std::string s = "<";
  for (std::size_t k = 0; k < w.args.size(); ++k) {
    if (k) s += ", ";
    s += format_vector(alg, w.args[k]);
  }
  s += ">_" + w.sigma.to_string() + " = " + format_vector(alg, w.product);
  return s;
}

IdealDescription component_ideal(const ConcreteAlgebra& alg, const std::vector<int>& cls) {
  return component_ideal(alg, classes(symbolic_of_concrete(alg)), cls);
}

IdealDescription component_ideal(const ConcreteAlgebra& alg, const ConnectionPartition& partition,
                                 const std::vector<int>& cls) {
  const auto& members = checked_class(partition, cls);
  IdealDescription out{members, Subspace(static_cast<std::size_t>(alg.v_dim())), Provenance::computed};
  if (alg.v_dim() == 0) return out;
  std::vector<int> tuple(static_cast<std::size_t>(alg.arity()));
  for_each_tuple(static_cast<int>(members.size()), tuple.size(), [&](const std::vector<int>& t) {
    for (std::size_t k = 0; k < t.size(); ++k) tuple[k] = members[static_cast<std::size_t>(t[k])];
    const auto& value = alg.product(tuple);
    if (lies_in_v(alg, value)) out.v_part.add(v_component(alg, value));
    return true;
  });
  return out;
}

IdealCheck is_ideal(const ConcreteAlgebra& alg, const IdealDescription& cand) {
  if (cand.v_part.ambient() != static_cast<std::size_t>(alg.v_dim())) {
    throw StructuralError("candidate V-part has the wrong ambient dimension");
  }
  const auto basis = joint_basis(alg, cand);
  for (const auto& x : basis) {
    if (!homogeneous_degree(alg, x)) throw StructuralError("candidate basis vector is not homogeneous");
  }
  const auto space = Subspace::span(static_cast<std::size_t>(alg.dim()), basis);
  const auto n = static_cast<std::size_t>(alg.arity());

  IdealCheck result;
  for (const auto& x : basis) {
    for (std::size_t p = 0; p < n; ++p) {
      const std::vector<std::size_t> slots{p};
      const std::vector<const Vec*> vecs{&x};
      const bool clean = for_each_tuple(alg.dim(), n - 1, [&](const std::vector<int>& rest) {
        auto value = product_at(alg, slots, vecs, rest);
        if (space.contains(value)) return true;
        result.ok = false;
        result.witness = make_witness(alg, slots, vecs, rest, std::move(value));
        return false;
      });
      if (!clean) return result;
    }
  }
  return result;
}

IdealCheck orthogonality_witness(const ConcreteAlgebra& alg, const IdealDescription& a, const IdealDescription& b) {
  const auto ba = joint_basis(alg, a);
  const auto bb = joint_basis(alg, b);
  const auto n = static_cast<std::size_t>(alg.arity());
  IdealCheck result;
  for (const auto& x : ba) {
    for (const auto& y : bb) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (p == q) continue;
          const std::vector<std::size_t> slots{p, q};
          const std::vector<const Vec*> vecs{&x, &y};
          const bool clean = for_each_tuple(alg.dim(), n - 2, [&](const std::vector<int>& rest) {
            auto value = product_at(alg, slots, vecs, rest);
            if (is_zero(value)) return true;
            result.ok = false;
            result.witness = make_witness(alg, slots, vecs, rest, std::move(value));
            return false;
          });
          if (!clean) return result;
        }
      }
    }
  }
  return result;
}

IdealCheck orthogonality_witness(const ConcreteAlgebra& alg, const std::vector<int>& a, const std::vector<int>& b) {
  if (a == b) throw StructuralError("orthogonality_witness needs two distinct classes");
  const auto partition = classes(symbolic_of_concrete(alg));
  return orthogonality_witness(alg, component_ideal(alg, partition, a), component_ideal(alg, partition, b));
}

bool Decomposition::all_ideals() const {
  return std::all_of(ideal_checks.begin(), ideal_checks.end(), [](const IdealCheck& c) { return c.ok; });
}

bool Decomposition::all_orthogonal() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.orthogonal.ok; });
}

Decomposition decompose(const ConcreteAlgebra& alg) {
  Decomposition out;
  out.partition = classes(symbolic_of_concrete(alg));
  const auto vd = static_cast<std::size_t>(alg.v_dim());

  Subspace generated(vd);
  for (const auto& cls : out.partition.classes) {
    out.ideals.push_back(component_ideal(alg, out.partition, cls));
    for (const auto& row : out.ideals.back().v_part.basis()) generated.add(row);
  }
  out.complement = Subspace(vd);
  for (std::size_t b = 0; b < vd; ++b) {
    const auto e = unit_vec(vd, b);
    if (generated.add(e)) out.complement.add(e);
  }

  std::vector<Subspace> spaces;
  Subspace total(static_cast<std::size_t>(alg.dim()));
  std::size_t dims = out.complement.dim();
  for (const auto& row : out.complement.basis()) total.add(embed_v(alg, row));
  for (const auto& ideal : out.ideals) {
    out.ideal_checks.push_back(is_ideal(alg, ideal));
    spaces.push_back(joint_space(alg, ideal));
    for (const auto& v : spaces.back().basis()) total.add(v);
    dims += ideal.dim();
  }
  out.direct_ = total.dim() == dims;

  for (std::size_t a = 0; a < out.ideals.size(); ++a) {
    for (std::size_t b = a + 1; b < out.ideals.size(); ++b) {
      out.pairs.push_back({a, b, spaces[a].intersection_dim(spaces[b]),
                           orthogonality_witness(alg, out.ideals[a], out.ideals[b])});
    }
  }
  return out;
}

Subspace center(const ConcreteAlgebra& alg) {
  const auto dim = static_cast<std::size_t>(alg.dim());
  const auto n = static_cast<std::size_t>(alg.arity());
  // Row c of the map x -> <.., x at p, ..> for each placement and tuple.
  Subspace equations(dim);
  std::vector<int> tuple(n);
  for (std::size_t p = 0; p < n; ++p) {
    for_each_tuple(alg.dim(), n - 1, [&](const std::vector<int>& rest) {
      std::size_t r = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != p) tuple[k] = rest[r++];
      }
      std::vector<Vec> rows(dim, zero_vec(dim));
      bool any = false;
      for (std::size_t b = 0; b < dim; ++b) {
        tuple[p] = static_cast<int>(b);
        const auto& value = alg.product(tuple);
        for (auto c : support(value)) {
          rows[c][b] = value[c];
          any = true;
        }
      }
      if (any) {
        for (const auto& row : rows) {
          if (!is_zero(row)) equations.add(row);
        }
      }
      return true;
    });
  }
  return nullspace(equations.basis(), dim);
}

Subspace v_products(const ConcreteAlgebra& alg) {
  Subspace out(static_cast<std::size_t>(alg.v_dim()));
  if (alg.v_dim() == 0) return out;
  for_each_tuple(alg.w_dim(), static_cast<std::size_t>(alg.arity()), [&](const std::vector<int>& t) {
    const auto& value = alg.product(t);
    if (lies_in_v(alg, value)) out.add(v_component(alg, value));
    return true;
  });
  return out;
}

TightCheck is_tight(const ConcreteAlgebra& alg) {
  const auto span = v_products(alg);
  const auto vd = static_cast<std::size_t>(alg.v_dim());
  for (std::size_t b = 0; b < vd; ++b) {
    if (!span.contains(unit_vec(vd, b))) return {false, static_cast<int>(b)};
  }
  return {};
}

std::optional<IdealDescription> simplicity_obstruction(const ConcreteAlgebra& alg) {
  const auto partition = classes(symbolic_of_concrete(alg));
  if (partition.size() < 2) return std::nullopt;
  for (const auto& cls : partition.classes) {
    auto ideal = component_ideal(alg, partition, cls);
    if (is_ideal(alg, ideal).ok) return ideal;
  }
  return std::nullopt;
}

}  // namespace qmalg
