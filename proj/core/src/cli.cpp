#include "qmalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qmalg/connections.hpp"
#include "qmalg/decomposition.hpp"
#include "qmalg/errors.hpp"
#include "qmalg/generator.hpp"
#include "qmalg/identities.hpp"
#include "qmalg/io.hpp"
#include "qmalg/minimality.hpp"
#include "qmalg/symbolic.hpp"

namespace qmalg {

using Model = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code = 0;
  Model model = Model::object();
};

void render_entry(std::string& out, const std::string& label, const Model& v, const std::string& indent) {
  out += indent + label;
  if (!label.empty()) out += ":";
  if (v.is_string()) {
    out += (label.empty() ? "" : " ") + v.get<std::string>() + "\n";
  } else if (v.is_array() && v.empty()) {
    out += (label.empty() ? "" : " ") + std::string("none\n");
  } else if (v.is_array()) {
    out += "\n";
    for (const auto& e : v) render_entry(out, "", e, indent + "  ");
  } else if (v.is_object()) {
    out += "\n";
    for (const auto& [k, e] : v.items()) render_entry(out, k, e, indent + "  ");
  } else {
    out += (label.empty() ? "" : " ") + v.dump() + "\n";
  }
}

std::string render_text(const Model& m) {
  std::string out;
  if (m.contains("result")) render_entry(out, "", m["result"], "");
  for (const auto& [k, v] : m.items()) {
    if (k != "result") render_entry(out, k, v, "");
  }
  return out;
}

std::vector<std::string> w_names(const ConcreteAlgebra& alg) {
  std::vector<std::string> out;
  for (const auto& b : alg.w_basis()) out.push_back(b.id);
  return out;
}

std::string span_text(const ConcreteAlgebra& alg, const std::vector<Vec>& l_vectors) {
  if (l_vectors.empty()) return "0";
  std::string s = "span{";
  for (std::size_t k = 0; k < l_vectors.size(); ++k) s += (k ? ", " : "") + format_vector(alg, l_vectors[k]);
  return s + "}";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

Outcome run_validate(const std::string& file) {
  Outcome o;
  const auto report = validate_document(read_algebra_file(file));
  o.code = report.ok() ? 0 : 1;
  o.model["result"] = report.ok() ? "ok" : "invalid";
  Model list = Model::array();
  for (const auto& v : report.violations) list.push_back(v.rule + ": " + v.witness + (v.value.empty() ? "" : " -> " + v.value));
  o.model["violations"] = list;
  return o;
}

Outcome run_classes(const ConcreteAlgebra& alg) {
  Outcome o;
  const auto partition = classes(symbolic_of_concrete(alg));
  o.model["result"] = partition.to_string(w_names(alg));
  o.model["count"] = partition.size();
  return o;
}

Outcome run_decompose(const ConcreteAlgebra& alg) {
  Outcome o;
  const auto dec = decompose(alg);
  const auto names = w_names(alg);
  std::vector<Vec> u;
  for (const auto& row : dec.complement.basis()) u.push_back(embed_v(alg, row));

  o.model["classes"] = dec.partition.to_string(names);
  o.model["complement"] = span_text(alg, u);
  Model ideals = Model::array();
  Model failures = Model::array();
  for (std::size_t k = 0; k < dec.ideals.size(); ++k) {
    ideals.push_back(to_string(alg, dec.ideals[k]));
    if (!dec.ideal_checks[k].ok) {
      failures.push_back(to_string(alg, dec.ideals[k]) + " is not an ideal: " +
                         to_string(alg, *dec.ideal_checks[k].witness));
    }
  }
  o.model["ideals"] = ideals;
  Model pairs = Model::array();
  for (const auto& p : dec.pairs) {
    std::string line = to_string(alg, dec.ideals[p.a]) + " x " + to_string(alg, dec.ideals[p.b]) +
                       ": intersection dim " + std::to_string(p.intersection_dim) + ", ";
    line += p.orthogonal.ok ? "orthogonal" : "not orthogonal, " + to_string(alg, *p.orthogonal.witness);
    pairs.push_back(line);
  }
  o.model["pairs"] = pairs;
  o.model["direct"] = dec.direct();
  o.model["failures"] = failures;
  o.code = dec.all_ideals() && dec.all_orthogonal() ? 0 : 1;
  return o;
}

Outcome run_check_ideal(const ConcreteAlgebra& alg, const std::string& w_text, const std::string& v_text) {
  std::vector<int> w;
  for (const auto& id : split(w_text, ',')) {
    const auto b = alg.find(id);
    if (!b || alg.is_v(*b)) throw StructuralError("'" + id + "' is not a W-basis id");
    w.push_back(*b);
  }
  std::vector<Vec> rows;
  for (const auto& row_text : split(v_text, ';')) {
    Vec row;
    for (const auto& c : split(row_text, ',')) {
      try {
        row.push_back(parse_scalar(c));
      } catch (const std::invalid_argument& e) {
        throw StructuralError(std::string("--v-part: ") + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  const auto cand = make_candidate(alg, std::move(w), rows);
  const auto check = is_ideal(alg, cand);
  Outcome o;
  o.code = check.ok ? 0 : 1;
  o.model["result"] = check.ok ? "ideal" : "not an ideal";
  o.model["candidate"] = to_string(alg, cand);
  if (check.witness) o.model["witness"] = to_string(alg, *check.witness);
  return o;
}

Outcome run_center(const ConcreteAlgebra& alg) {
  Outcome o;
  const auto z = center(alg);
  o.model["result"] = span_text(alg, z.basis());
  o.model["dim"] = z.dim();
  return o;
}

Outcome run_tight(const ConcreteAlgebra& alg) {
  Outcome o;
  const auto t = is_tight(alg);
  o.code = t.tight ? 0 : 1;
  o.model["result"] = t.tight ? "tight" : "not tight";
  if (t.witness) o.model["witness"] = alg.id(alg.w_dim() + *t.witness);
  return o;
}

Outcome run_mu_qm(const ConcreteAlgebra& alg) {
  Outcome o;
  const auto m = is_mu_quasi_multiplicative(alg);
  o.code = m.ok ? 0 : 1;
  o.model["result"] = m.ok ? "mu-quasi-multiplicative" : "not mu-quasi-multiplicative";
  if (m.witness) o.model["witness"] = to_string(alg, *m.witness);
  return o;
}

Outcome run_minimal(const ConcreteAlgebra& alg, const std::string& method, OracleBounds bounds) {
  Outcome o;
  if (method == "theorem" || method == "both") {
    const auto v = minimal_by_theorem(alg);
    o.model["theorem"] = to_string(alg, v);
    if (v.verdict != Verdict::minimal) o.code = 1;
  }
  if (method == "oracle" || method == "both") {
    const auto v = minimal_brute_force(alg, bounds);
    o.model["oracle"] = to_string(alg, v);
    if (v.verdict != Verdict::minimal) o.code = 1;
  }
  return o;
}

Outcome run_identity(const ConcreteAlgebra& alg, const std::string& scheme_ref) {
  std::string ref = scheme_ref;
  if (ref.empty()) {
    if (!alg.identity_scheme()) throw StructuralError("no --scheme given and the algebra declares none");
    ref = *alg.identity_scheme();
  }
  const auto scheme = resolve_scheme(ref, alg.arity());
  const auto report = check_identity(alg, colorize(scheme, alg.bicharacter()));
  Outcome o;
  o.code = report.holds ? 0 : 1;
  o.model["result"] = to_string(alg, report);
  o.model["scheme"] = scheme.name;
  return o;
}

}  // namespace

CliResult cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Quasi-multiplicative n-ary color algebras: connections, ideals, minimality", "qmalg"};
  app.require_subcommand(1);

  std::string file;
  std::string report = "text";
  std::string w_part;
  std::string v_part;
  std::string method = "both";
  OracleBounds bounds;
  std::string scheme;
  GeneratorParams gen;
  std::string mode = "multiplicative";
  std::string output;

  auto add = [&](const char* name, const char* help, bool needs_file = true) {
    auto* sub = app.add_subcommand(name, help);
    if (needs_file) sub->add_option("FILE", file, "algebra document (.json may be omitted)")->required();
    sub->add_option("--report", report, "output format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  auto* validate = add("validate", "check every axiom of an algebra document");
  auto* cls = add("classes", "connection classes of the basis indices");
  auto* dec = add("decompose", "ideal decomposition L = U + sum of J_[i]");
  auto* chk = add("check-ideal", "test whether a candidate subspace is an ideal");
  chk->add_option("--w-part", w_part, "comma-separated W-basis ids");
  chk->add_option("--v-part", v_part, "V-part rows in V coordinates: ';' between rows, ',' between entries");
  auto* cen = add("center", "center of the algebra");
  auto* tight = add("tight", "is V spanned by products of basis elements");
  auto* mu = add("mu-qm", "mu-quasi-multiplicativity of the basis");
  auto* minimal = add("minimal", "minimality by the connection criterion and/or exhaustive search");
  minimal->add_option("--method", method, "theorem, oracle or both")->check(CLI::IsMember({"theorem", "oracle", "both"}));
  minimal->add_option("--oracle-max-i", bounds.max_i, "largest |I| for the exhaustive search");
  minimal->add_option("--oracle-max-v", bounds.max_v, "largest dim V for the exhaustive search");
  auto* ident = add("identity", "check an identity scheme on all basis tuples");
  ident->add_option("--scheme", scheme, "leibniz, n_lie, antisymmetry, associative or a scheme file");
  auto* g = add("gen", "generate a random algebra", false);
  g->add_option("--arity", gen.arity, "arity n (2 or 3)");
  g->add_option("--basis", gen.basis_count, "number of W-basis elements");
  g->add_option("--dim-v", gen.dim_v, "dimension of V");
  g->add_option("--mode", mode, "multiplicative or general_symbolic");
  g->add_option("--density", gen.density, "probability that a pattern is nonzero");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--group", gen.group_orders, "cyclic orders of the grading group");
  g->add_option("-o,--output", output, "write the document here instead of stdout");

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }

  try {
    Outcome o;
    if (validate->parsed()) {
      o = run_validate(file);
    } else if (g->parsed()) {
      gen.mode = parse_generator_mode(mode);
      const auto text = serialize(generate_random(gen));
      if (output.empty()) {
        result.out = text;
        return result;
      }
      std::ofstream out(output, std::ios::binary);
      if (!out) throw StructuralError("cannot write '" + output + "'");
      out << text;
      o.model["result"] = "wrote " + output;
    } else {
      const auto alg = load_algebra(file);
      if (cls->parsed()) o = run_classes(alg);
      if (dec->parsed()) o = run_decompose(alg);
      if (chk->parsed()) o = run_check_ideal(alg, w_part, v_part);
      if (cen->parsed()) o = run_center(alg);
      if (tight->parsed()) o = run_tight(alg);
      if (mu->parsed()) o = run_mu_qm(alg);
      if (minimal->parsed()) o = run_minimal(alg, method, bounds);
      if (ident->parsed()) o = run_identity(alg, scheme);
    }
    result.exit_code = o.code;
    result.out = report == "json" ? o.model.dump(2) + "\n" : render_text(o.model);
  } catch (const ValidationError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n" + e.report().to_text();
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + (e.location().empty() ? "" : " at " + e.location()) + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace qmalg
