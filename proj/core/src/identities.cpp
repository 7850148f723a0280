#include "qmalg/identities.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qmalg/errors.hpp"

namespace qmalg {

using nlohmann::json;

void validate_scheme(const IdentityScheme& scheme) {
  const int n = scheme.arity;
  if (n < 2) throw StructuralError("scheme arity must be at least 2");
  for (std::size_t a = 0; a < scheme.identities.size(); ++a) {
    const auto& id = scheme.identities[a];
    const auto where = "identity " + std::to_string(a + 1) + ": ";
    if (id.shape == IdentityShape::nested && (id.k < 0 || id.k >= n)) throw StructuralError(where + "k out of range");
    for (const auto& t : id.terms) {
      if (t.alpha == 0) throw StructuralError(where + "zero coefficient");
      if (t.sigma1.size() != static_cast<std::size_t>(n)) throw StructuralError(where + "sigma1 has the wrong size");
      if (id.shape == IdentityShape::flat) continue;
      if (t.sigma2.size() != static_cast<std::size_t>(n - 1)) throw StructuralError(where + "sigma2 has the wrong size");
      if (t.slot_i < 0 || t.slot_i >= n || t.slot_j < 0 || t.slot_j >= n) {
        throw StructuralError(where + "slot index out of range");
      }
    }
  }
}

namespace {

IdentityTerm nested_term(Scalar alpha, Permutation s1, Permutation s2, int i, int j) {
  return {std::move(alpha), std::move(s1), std::move(s2), i, j};
}

std::vector<Identity> antisymmetry(int n) {
  std::vector<Identity> out;
  for (int p = 0; p + 1 < n; ++p) {
    Identity id{IdentityShape::flat, 0, {}};
    id.terms.push_back({-1, Permutation::transposition(static_cast<std::size_t>(n), static_cast<std::size_t>(p),
                                                       static_cast<std::size_t>(p + 1)),
                        Permutation(), 0, 0});
    out.push_back(std::move(id));
  }
  return out;
}

}  // namespace

IdentityScheme builtin_scheme(std::string_view name, int n) {
  const auto id2 = Permutation::identity(2);
  const auto id1 = Permutation::identity(1);
  IdentityScheme s{n, std::string(name), {}};
  if (name == "leibniz" || name == "associative") {
    if (n != 2) throw StructuralError("builtin scheme '" + std::string(name) + "' needs arity 2");
    if (name == "leibniz") {
      // [y,[x1,x2]] = [[y,x1],x2] + eps(y,x1) [x1,[y,x2]]
      s.identities.push_back({IdentityShape::nested, 1,
                              {nested_term(1, id2, id1, 0, 1), nested_term(1, id2, id1, 1, 1)}});
      // [[x1,x2],y] = [x1,[x2,y]] - eps(x1,x2) [x2,[x1,y]]
      s.identities.push_back({IdentityShape::nested, 0,
                              {nested_term(1, id2, id1, 1, 0),
                               nested_term(-1, Permutation::transposition(2, 0, 1), id1, 1, 0)}});
    } else {
      s.identities.push_back({IdentityShape::nested, 0, {nested_term(1, id2, id1, 1, 0)}});
      s.identities.push_back({IdentityShape::nested, 1, {nested_term(1, id2, id1, 0, 1)}});
    }
    return s;
  }
  if (n < 2) throw StructuralError("arity must be at least 2");
  if (name == "n_lie") {
    const auto idn = Permutation::identity(static_cast<std::size_t>(n));
    const auto idm = Permutation::identity(static_cast<std::size_t>(n - 1));
    Identity filippov{IdentityShape::nested, n - 1, {}};
    for (int i = 0; i < n; ++i) filippov.terms.push_back(nested_term(1, idn, idm, i, n - 1));
    s.identities.push_back(std::move(filippov));
    for (auto& a : antisymmetry(n)) s.identities.push_back(std::move(a));
    return s;
  }
  if (name == "antisymmetry") {
    s.identities = antisymmetry(n);
    return s;
  }
  throw StructuralError("unknown builtin scheme '" + std::string(name) + "'");
}

std::vector<int> lhs_order(const IdentityScheme& scheme, const Identity& id) {
  const int n = scheme.arity;
  std::vector<int> out;
  if (id.shape == IdentityShape::flat) {
    for (int a = 0; a < n; ++a) out.push_back(a);
    return out;
  }
  for (int b = 0; b < id.k; ++b) out.push_back(n + b);
  for (int a = 0; a < n; ++a) out.push_back(a);
  for (int b = id.k; b < n - 1; ++b) out.push_back(n + b);
  return out;
}

std::vector<int> term_order(const IdentityScheme& scheme, const Identity& id, const IdentityTerm& t) {
  const int n = scheme.arity;
  std::vector<int> out;
  if (id.shape == IdentityShape::flat) {
    for (int p = 0; p < n; ++p) out.push_back(t.sigma1(static_cast<std::size_t>(p)));
    return out;
  }
  for (int s = 0; s < n; ++s) {
    if (s != t.slot_i) {
      out.push_back(t.sigma1(static_cast<std::size_t>(s)));
      continue;
    }
    std::size_t y = 0;
    for (int p = 0; p < n; ++p) {
      if (p == t.slot_j) {
        out.push_back(t.sigma1(static_cast<std::size_t>(t.slot_i)));
      } else {
        out.push_back(n + t.sigma2(y++));
      }
    }
  }
  return out;
}

std::pair<Scalar, Permutation> epsilon_along(const std::vector<GroupElement>& degrees,
                                             const std::vector<std::size_t>& swaps, const Bicharacter& eps) {
  std::vector<int> current(degrees.size());
  for (std::size_t p = 0; p < current.size(); ++p) current[p] = static_cast<int>(p);
  Scalar acc = 1;
  for (auto p : swaps) {
    if (p + 1 >= current.size()) throw StructuralError("epsilon_along: swap position out of range");
    acc *= eps(degrees[static_cast<std::size_t>(current[p])], degrees[static_cast<std::size_t>(current[p + 1])]);
    std::swap(current[p], current[p + 1]);
  }
  return {acc, Permutation::from_images(std::move(current))};
}

Scalar epsilon_sigma(const std::vector<GroupElement>& degrees, const Permutation& sigma, const Bicharacter& eps) {
  if (degrees.size() != sigma.size()) throw StructuralError("epsilon_sigma: size mismatch");
  std::vector<int> current(degrees.size());
  for (std::size_t p = 0; p < current.size(); ++p) current[p] = static_cast<int>(p);
  Scalar acc = 1;
  for (std::size_t p = 0; p < current.size(); ++p) {
    auto q = static_cast<std::size_t>(std::find(current.begin(), current.end(), sigma(p)) - current.begin());
    for (; q > p; --q) {
      acc *= eps(degrees[static_cast<std::size_t>(current[q - 1])], degrees[static_cast<std::size_t>(current[q])]);
      std::swap(current[q - 1], current[q]);
    }
  }
  return acc;
}

Scalar epsilon_sigma_pairs(const std::vector<GroupElement>& degrees, const Permutation& sigma, const Bicharacter& eps) {
  if (degrees.size() != sigma.size()) throw StructuralError("epsilon_sigma: size mismatch");
  const auto inv = sigma.inverse();  // inv(r) = position of original entry r
  Scalar acc = 1;
  for (std::size_t a = 0; a < degrees.size(); ++a) {
    for (std::size_t b = a + 1; b < degrees.size(); ++b) {
      if (inv(b) < inv(a)) acc *= eps(degrees[a], degrees[b]);
    }
  }
  return acc;
}

ColorScheme colorize(const IdentityScheme& scheme, const Bicharacter& eps) {
  validate_scheme(scheme);
  ColorScheme out{scheme, eps, {}};
  for (const auto& id : scheme.identities) {
    const auto ref = lhs_order(scheme, id);
    std::vector<int> where(ref.size() + static_cast<std::size_t>(scheme.arity), -1);
    for (std::size_t p = 0; p < ref.size(); ++p) where[static_cast<std::size_t>(ref[p])] = static_cast<int>(p);
    std::vector<Permutation> shifts;
    for (const auto& t : id.terms) {
      std::vector<int> img;
      for (int var : term_order(scheme, id, t)) img.push_back(where[static_cast<std::size_t>(var)]);
      shifts.push_back(Permutation::from_images(std::move(img)));
    }
    out.shifts.push_back(std::move(shifts));
  }
  return out;
}

namespace {

// <inner at slot, basis elements elsewhere>
Vec outer_product(const ConcreteAlgebra& alg, std::vector<int> tuple, std::size_t slot, const Vec& inner) {
  Vec out = zero_vec(static_cast<std::size_t>(alg.dim()));
  for (auto b : support(inner)) {
    tuple[slot] = static_cast<int>(b);
    add_scaled(out, inner[b], alg.product(tuple));
  }
  return out;
}

}  // namespace

std::pair<Vec, Vec> evaluate_identity(const ConcreteAlgebra& alg, const ColorScheme& cs, std::size_t which,
                                      const std::vector<int>& tuple) {
  const auto& scheme = cs.scheme;
  const auto n = static_cast<std::size_t>(scheme.arity);
  const auto& id = scheme.identities.at(which);
  auto var = [&](int v) { return tuple[static_cast<std::size_t>(v)]; };

  const auto ref = lhs_order(scheme, id);
  std::vector<GroupElement> ref_degrees;
  for (int v : ref) ref_degrees.push_back(alg.degree(var(v)));

  Vec lhs;
  std::vector<int> xs(n);
  for (std::size_t a = 0; a < n; ++a) xs[a] = var(static_cast<int>(a));
  if (id.shape == IdentityShape::flat) {
    lhs = alg.product(xs);
  } else {
    std::vector<int> outer(n, 0);
    std::size_t y = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (s != static_cast<std::size_t>(id.k)) outer[s] = var(static_cast<int>(n + y++));
    }
    lhs = outer_product(alg, outer, static_cast<std::size_t>(id.k), alg.product(xs));
  }

  Vec rhs = zero_vec(static_cast<std::size_t>(alg.dim()));
  for (std::size_t t = 0; t < id.terms.size(); ++t) {
    const auto& term = id.terms[t];
    const Scalar factor = term.alpha * epsilon_sigma(ref_degrees, cs.shifts[which][t], cs.eps);
    const auto order = term_order(scheme, id, term);
    if (id.shape == IdentityShape::flat) {
      std::vector<int> args;
      for (int v : order) args.push_back(var(v));
      add_scaled(rhs, factor, alg.product(args));
      continue;
    }
    const auto i = static_cast<std::size_t>(term.slot_i);
    std::vector<int> inner(order.begin() + static_cast<std::ptrdiff_t>(i),
                           order.begin() + static_cast<std::ptrdiff_t>(i + n));
    for (auto& v : inner) v = var(v);
    std::vector<int> outer(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (s < i) outer[s] = var(order[s]);
      if (s > i) outer[s] = var(order[s + n - 1]);
    }
    add_scaled(rhs, factor, outer_product(alg, outer, i, alg.product(inner)));
  }
  return {std::move(lhs), std::move(rhs)};
}

IdentityReport check_identity(const ConcreteAlgebra& alg, const ColorScheme& cs) {
  if (cs.scheme.arity != alg.arity()) {
    throw StructuralError("scheme arity " + std::to_string(cs.scheme.arity) + " does not match algebra arity " +
                          std::to_string(alg.arity()));
  }
  if (!(cs.eps.group() == alg.group())) throw StructuralError("scheme bicharacter is over a different group");

  IdentityReport report;
  const std::size_t vars = 2 * static_cast<std::size_t>(alg.arity()) - 1;
  std::vector<int> tuple(vars, 0);
  while (true) {
    ++report.tuples;
    for (std::size_t a = 0; a < cs.scheme.identities.size(); ++a) {
      ++report.evaluations;
      auto [lhs, rhs] = evaluate_identity(alg, cs, a, tuple);
      if (lhs != rhs) {
        report.holds = false;
        report.counterexample = IdentityCounterexample{a, tuple, std::move(lhs), std::move(rhs)};
        return report;
      }
    }
    std::size_t k = vars;
    while (true) {
      if (k == 0) return report;
      --k;
      if (++tuple[k] < alg.dim()) break;
      tuple[k] = 0;
    }
  }
}

std::string to_string(const ConcreteAlgebra& alg, const IdentityReport& report) {
  if (report.holds) {
    return "holds on " + std::to_string(report.tuples) + " tuples (" + std::to_string(report.evaluations) +
           " evaluations)";
  }
  const auto& c = *report.counterexample;
  const std::size_t n = static_cast<std::size_t>(alg.arity());
  std::string names = "(";
  std::string values = "(";
  for (std::size_t v = 0; v < c.tuple.size(); ++v) {
    if (v) {
      names += ',';
      values += ',';
    }
    names += v < n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n + 1);
    values += alg.id(c.tuple[v]);
  }
  return "fails: identity " + std::to_string(c.identity + 1) + " at " + names + ") = " + values +
         "), lhs = " + format_vector(alg, c.lhs) + ", rhs = " + format_vector(alg, c.rhs);
}

namespace {

Permutation perm_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected a permutation array", where);
  std::vector<int> img;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("permutation entries must be integers", where);
    img.push_back(e.get<int>());
  }
  try {
    return Permutation::from_one_based(img);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), where);
  }
}

int int_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'", where);
  }
  return obj[key].get<int>();
}

}  // namespace

IdentityScheme parse_scheme(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scheme: ") + e.what(), "");
  }
  if (!doc.is_object()) throw ParseError("scheme document must be an object", "");
  IdentityScheme s;
  s.arity = int_at(doc, "arity", "/arity");
  s.name = doc.value("name", std::string("custom"));
  if (!doc.contains("identities") || !doc["identities"].is_array()) {
    throw ParseError("missing 'identities' array", "/identities");
  }
  for (std::size_t a = 0; a < doc["identities"].size(); ++a) {
    const auto& jid = doc["identities"][a];
    const auto where = "/identities/" + std::to_string(a);
    Identity id;
    const auto shape = jid.value("shape", std::string("nested"));
    if (shape == "flat") {
      id.shape = IdentityShape::flat;
    } else if (shape == "nested") {
      id.shape = IdentityShape::nested;
      id.k = int_at(jid, "k", where + "/k") - 1;
    } else {
      throw ParseError("unknown identity shape '" + shape + "'", where + "/shape");
    }
    if (!jid.contains("terms") || !jid["terms"].is_array()) throw ParseError("missing 'terms' array", where);
    for (std::size_t t = 0; t < jid["terms"].size(); ++t) {
      const auto& jt = jid["terms"][t];
      const auto tw = where + "/terms/" + std::to_string(t);
      IdentityTerm term;
      if (!jt.contains("alpha") || !jt["alpha"].is_string()) throw ParseError("alpha must be a string", tw + "/alpha");
      try {
        term.alpha = parse_scalar(jt["alpha"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), tw + "/alpha");
      }
      if (id.shape == IdentityShape::flat) {
        term.sigma1 = perm_at(jt.value("sigma", json()), tw + "/sigma");
      } else {
        term.sigma1 = perm_at(jt.value("sigma1", json()), tw + "/sigma1");
        term.sigma2 = perm_at(jt.value("sigma2", json()), tw + "/sigma2");
        term.slot_i = int_at(jt, "i", tw + "/i") - 1;
        term.slot_j = int_at(jt, "j", tw + "/j") - 1;
      }
      id.terms.push_back(std::move(term));
    }
    s.identities.push_back(std::move(id));
  }
  try {
    validate_scheme(s);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), "/identities");
  }
  return s;
}

std::string serialize_scheme(const IdentityScheme& scheme) {
  json doc;
  doc["arity"] = scheme.arity;
  doc["name"] = scheme.name;
  doc["identities"] = json::array();
  for (const auto& id : scheme.identities) {
    json jid;
    jid["shape"] = id.shape == IdentityShape::flat ? "flat" : "nested";
    if (id.shape == IdentityShape::nested) jid["k"] = id.k + 1;
    jid["terms"] = json::array();
    for (const auto& t : id.terms) {
      json jt;
      jt["alpha"] = to_string(t.alpha);
      if (id.shape == IdentityShape::flat) {
        jt["sigma"] = t.sigma1.one_based();
      } else {
        jt["sigma1"] = t.sigma1.one_based();
        jt["sigma2"] = t.sigma2.one_based();
        jt["i"] = t.slot_i + 1;
        jt["j"] = t.slot_j + 1;
      }
      jid["terms"].push_back(std::move(jt));
    }
    doc["identities"].push_back(std::move(jid));
  }
  return doc.dump(2) + "\n";
}

IdentityScheme resolve_scheme(const std::string& ref, int arity) {
  for (const char* name : {"leibniz", "n_lie", "antisymmetry", "associative"}) {
    if (ref == name) return builtin_scheme(ref, arity);
  }
  std::ifstream in(ref);
  if (!in) throw StructuralError("cannot open scheme file '" + ref + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto scheme = parse_scheme(buf.str());
  if (scheme.arity != arity) throw StructuralError("scheme '" + ref + "' has a different arity");
  return scheme;
}

}  // namespace qmalg
