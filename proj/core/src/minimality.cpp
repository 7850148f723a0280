#include "qmalg/minimality.hpp"

#include <algorithm>

#include "qmalg/errors.hpp"
#include "qmalg/symbolic.hpp"

namespace qmalg {

namespace {

std::vector<std::string> w_names(const ConcreteAlgebra& alg) {
  std::vector<std::string> out;
  for (const auto& b : alg.w_basis()) out.push_back(b.id);
  return out;
}

void push_distinct(std::vector<Vec>& xs, const Vec& v) {
  if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
}

// Some sigma and V-fill turn (u_{k_1}, ..., u_{k_n}) into a nonzero multiple
// of e_i. Records every distinct evaluated product in `seen`.
bool witnessed(const ConcreteAlgebra& alg, int i, const std::vector<ExtIndex>& ks,
               const std::vector<Permutation>& sigmas, std::vector<Vec>& seen) {
  std::vector<std::size_t> v_slots;
  std::vector<int> args(ks.size());
  for (std::size_t p = 0; p < ks.size(); ++p) {
    if (ks[p].is_v()) {
      v_slots.push_back(p);
    } else {
      args[p] = ks[p].index;
    }
  }
  if (!v_slots.empty() && alg.v_dim() == 0) {
    push_distinct(seen, zero_vec(static_cast<std::size_t>(alg.dim())));
    return false;
  }

  std::vector<int> fill(v_slots.size(), 0);
  bool found = false;
  while (true) {
    for (std::size_t s = 0; s < v_slots.size(); ++s) args[v_slots[s]] = alg.w_dim() + fill[s];
    for (const auto& sigma : sigmas) {
      const auto tuple = sigma.apply(args);
      const auto& value = alg.product(tuple);
      push_distinct(seen, value);
      const auto supp = support(value);
      if (supp.size() == 1 && supp.front() == static_cast<std::size_t>(i)) found = true;
    }
    std::size_t s = fill.size();
    while (true) {
      if (s == 0) return found;
      --s;
      if (++fill[s] < alg.v_dim()) break;
      fill[s] = 0;
    }
  }
}

template <typename F>
void scan_mu(const ConcreteAlgebra& alg, F&& on_failure) {
  const auto sym = symbolic_of_concrete(alg);
  const auto packs = all_arg_packs(sym);
  const auto sigmas = Permutation::all(static_cast<std::size_t>(alg.arity()));

  std::vector<ExtIndex> heads;
  for (bool barred : {false, true}) {
    for (int i = 0; i < alg.w_dim(); ++i) heads.push_back({i, barred});
    heads.push_back({ExtIndex::kV, barred});
  }

  for (const auto& head : heads) {
    for (const auto& pack : packs) {
      const auto mu = eval_mu(sym, head, pack).indices();
      if (mu.empty()) continue;
      std::vector<ExtIndex> ks{head};
      ks.insert(ks.end(), pack.entries.begin(), pack.entries.end());
      for (auto member : mu.elements()) {
        std::vector<Vec> seen;
        if (!witnessed(alg, member.index, ks, sigmas, seen)) {
          if (!on_failure(MuFailure{member.index, head, pack, std::move(seen)})) return;
        }
      }
    }
  }
}

}  // namespace

std::string to_string(const ConcreteAlgebra& alg, const MuFailure& f) {
  const auto names = w_names(alg);
  std::string s = "i = " + alg.id(f.i) + ", tuple (" + to_string(f.head, names);
  for (const auto& e : f.tail.entries) s += "," + to_string(e, names);
  s += "), products {";
  for (std::size_t k = 0; k < f.products.size(); ++k) {
    if (k) s += ", ";
    s += format_vector(alg, f.products[k]);
  }
  return s + "}";
}

MuCheck is_mu_quasi_multiplicative(const ConcreteAlgebra& alg) {
  MuCheck out;
  scan_mu(alg, [&](MuFailure f) {
    out.ok = false;
    out.witness = std::move(f);
    return false;
  });
  return out;
}

std::vector<MuFailure> mu_quasi_multiplicative_failures(const ConcreteAlgebra& alg) {
  std::vector<MuFailure> out;
  scan_mu(alg, [&](MuFailure f) {
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::minimal:
      return "minimal";
    case Verdict::not_minimal:
      return "not-minimal";
    case Verdict::hypotheses_not_met:
      return "hypotheses-not-met";
  }
  return "?";
}

std::string to_string(Method m) { return m == Method::theorem ? "theorem" : "oracle"; }

std::string to_string(const ConcreteAlgebra& alg, const MinimalityVerdict& v) {
  std::string s = to_string(v.verdict);
  if (v.failed_hypothesis) s += " (" + *v.failed_hypothesis;
  if (v.mu_witness) s += ": " + to_string(alg, *v.mu_witness);
  if (v.failed_hypothesis) s += ")";
  if (v.ideal_witness) s += ", witness " + to_string(alg, *v.ideal_witness);
  if (!v.note.empty()) s += " [" + v.note + "]";
  return s;
}

MinimalityVerdict minimal_by_theorem(const ConcreteAlgebra& alg) {
  MinimalityVerdict out;
  out.method = Method::theorem;
  auto mu = is_mu_quasi_multiplicative(alg);
  if (!mu.ok) {
    out.verdict = Verdict::hypotheses_not_met;
    out.failed_hypothesis = "mu-quasi-multiplicativity fails";
    out.mu_witness = std::move(mu.witness);
    return out;
  }
  const auto tight = is_tight(alg);
  if (!tight.tight) {
    out.verdict = Verdict::hypotheses_not_met;
    out.failed_hypothesis = "V is not tight, " + alg.id(alg.w_dim() + *tight.witness) + " is not a product";
    return out;
  }
  if (classes(symbolic_of_concrete(alg)).size() == 1) {
    out.verdict = Verdict::minimal;
  } else {
    out.verdict = Verdict::not_minimal;
    out.ideal_witness = simplicity_obstruction(alg);
  }
  return out;
}

std::vector<Vec> generating_family(const ConcreteAlgebra& alg) {
  const auto vd = static_cast<std::size_t>(alg.v_dim());
  std::vector<Vec> out;
  if (vd == 0) return out;
  const auto n = static_cast<std::size_t>(alg.arity());
  std::vector<int> t(n, 0);
  while (true) {
    const auto& value = alg.product(t);
    Vec comp(value.begin() + alg.w_dim(), value.end());
    const auto supp = support(comp);
    if (!supp.empty()) {
      const Scalar lead = comp[supp.front()];
      for (auto& c : comp) c /= lead;
      push_distinct(out, comp);
    }
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++t[k] < alg.dim()) {
        done = false;
        break;
      }
      t[k] = 0;
    }
    if (done) break;
  }
  for (std::size_t b = 0; b < vd; ++b) push_distinct(out, unit_vec(vd, b));
  return out;
}

std::vector<Subspace> spanned_subspaces(std::size_t ambient, const std::vector<Vec>& family) {
  std::vector<Subspace> out{Subspace(ambient)};
  std::size_t level_begin = 0;
  while (level_begin < out.size()) {
    const std::size_t level_end = out.size();
    for (std::size_t s = level_begin; s < level_end; ++s) {
      for (const auto& f : family) {
        if (out[s].contains(f)) continue;
        Subspace bigger = out[s];
        bigger.add(f);
        if (std::find(out.begin() + static_cast<std::ptrdiff_t>(level_end), out.end(), bigger) == out.end()) {
          out.push_back(std::move(bigger));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

MinimalityVerdict minimal_brute_force(const ConcreteAlgebra& alg, OracleBounds bounds) {
  if (alg.w_dim() > bounds.max_i || alg.v_dim() > bounds.max_v) {
    throw BoundExceeded("oracle bounds exceeded: |I| = " + std::to_string(alg.w_dim()) + " (max " +
                        std::to_string(bounds.max_i) + "), dim V = " + std::to_string(alg.v_dim()) + " (max " +
                        std::to_string(bounds.max_v) + ")");
  }
  MinimalityVerdict out;
  out.method = Method::brute_force;
  out.note = "oracle-complete over the generating family";

  const auto vd = static_cast<std::size_t>(alg.v_dim());
  const auto subspaces = spanned_subspaces(vd, generating_family(alg));
  const auto m = static_cast<unsigned>(alg.w_dim());
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;

  auto try_candidate = [&](std::uint64_t mask, const Subspace& v_part) {
    IdealDescription cand{{}, v_part, Provenance::candidate};
    for (unsigned i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) cand.w_part.push_back(static_cast<int>(i));
    }
    if (!is_ideal(alg, cand).ok) return false;
    out.verdict = Verdict::not_minimal;
    out.ideal_witness = std::move(cand);
    return true;
  };

  for (std::uint64_t mask = 1; mask < full; ++mask) {
    for (const auto& v_part : subspaces) {
      if (try_candidate(mask, v_part)) return out;
    }
  }
  for (const auto& v_part : subspaces) {
    if (v_part.dim() < vd && try_candidate(full, v_part)) return out;
  }
  out.verdict = Verdict::minimal;
  return out;
}

ConcreteAlgebra restrict_to_ideal(const ConcreteAlgebra& alg, const IdealDescription& ideal) {
  const auto basis = joint_basis(alg, ideal);
  const auto w_count = ideal.w_part.size();

  std::vector<BasisElement> w;
  for (int i : ideal.w_part) w.push_back(alg.basis(i));
  std::vector<BasisElement> v;
  for (std::size_t r = 0; r < ideal.v_part.dim(); ++r) {
    const auto pivot = ideal.v_part.pivots()[r];
    const auto deg = homogeneous_degree(alg, basis[w_count + r]);
    if (!deg) throw StructuralError("restrict_to_ideal: V-part row is not homogeneous");
    v.push_back({alg.id(alg.w_dim() + static_cast<int>(pivot)), *deg});
  }

  const auto d = basis.size();
  const auto n = static_cast<std::size_t>(alg.arity());
  const auto identity = Permutation::identity(n);
  ProductMap products;
  std::vector<int> t(n, 0);
  std::vector<Vec> args(n);
  while (true) {
    for (std::size_t k = 0; k < n; ++k) args[k] = basis[static_cast<std::size_t>(t[k])];
    const auto value = eval_product(alg, identity, args);
    if (!is_zero(value)) {
      Vec coords = zero_vec(d);
      Vec rest = value;
      for (std::size_t k = 0; k < w_count; ++k) {
        coords[k] = value[static_cast<std::size_t>(ideal.w_part[k])];
        rest[static_cast<std::size_t>(ideal.w_part[k])] = 0;
      }
      Vec vc(rest.begin() + alg.w_dim(), rest.end());
      const bool w_closed = std::all_of(rest.begin(), rest.begin() + alg.w_dim(), [](const Scalar& c) { return c == 0; });
      if (!w_closed || !ideal.v_part.contains(vc)) {
        throw StructuralError("restrict_to_ideal: the subspace is not closed under products");
      }
      const auto vcoords = ideal.v_part.coordinates(vc);
      for (std::size_t r = 0; r < vcoords.size(); ++r) coords[w_count + r] = vcoords[r];
      products.emplace(t, std::move(coords));
    }
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++t[k] < static_cast<int>(d)) {
        done = false;
        break;
      }
      t[k] = 0;
    }
    if (done) break;
  }
  return ConcreteAlgebra(alg.arity(), alg.bicharacter(), std::move(w), std::move(v), std::move(products),
                         alg.identity_scheme());
}

bool MinimalDecompositionReport::ok() const {
  return hypotheses_met && direct &&
         std::all_of(components.begin(), components.end(), [](const ComponentMinimality& c) { return c.ok(); });
}

MinimalDecompositionReport minimal_decomposition_check(const ConcreteAlgebra& alg, OracleBounds bounds) {
  MinimalDecompositionReport out;
  if (!center(alg).empty()) {
    out.failed_hypothesis = "the center is nonzero";
    return out;
  }
  if (!is_tight(alg).tight) {
    out.failed_hypothesis = "V is not tight";
    return out;
  }
  if (!is_mu_quasi_multiplicative(alg).ok) {
    out.failed_hypothesis = "mu-quasi-multiplicativity fails";
    return out;
  }
  out.hypotheses_met = true;

  const auto dec = decompose(alg);
  out.direct = dec.direct() && dec.complement.empty();
  for (const auto& ideal : dec.ideals) {
    const auto sub = restrict_to_ideal(alg, ideal);
    ComponentMinimality comp{ideal, minimal_by_theorem(sub), std::nullopt};
    if (sub.w_dim() <= bounds.max_i && sub.v_dim() <= bounds.max_v) comp.oracle = minimal_brute_force(sub, bounds);
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace qmalg
