#include "qmalg/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qmalg/errors.hpp"
#include "qmalg/symbolic.hpp"

namespace qmalg {

using nlohmann::json;

namespace {

const std::set<std::string> kFields{"arity", "group", "bicharacter", "w_basis", "v_basis", "products", "identity_scheme"};

struct Parsed {
  ConcreteAlgebra alg;
  std::map<std::string, std::string> product_at;  // "(a,b)" -> "/products/k"
};

[[noreturn]] void fail(const std::string& msg, const std::string& where) { throw ParseError(msg, where); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'", where);
  return obj[key];
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail("expected an integer", where);
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail("expected a string", where);
  return j.get<std::string>();
}

Scalar as_scalar(const json& j, const std::string& where) {
  try {
    return parse_scalar(as_string(j, where));
  } catch (const std::invalid_argument& e) {
    fail(e.what(), where);
  }
}

GroupElement as_element(const json& j, const GradingGroup& group, const std::string& where) {
  if (!j.is_array()) fail("expected a group element array", where);
  GroupElement g;
  for (std::size_t t = 0; t < j.size(); ++t) g.push_back(as_int(j[t], where + "/" + std::to_string(t)));
  if (!group.contains(g)) fail("element " + to_string(g) + " is not in the grading group", where);
  return g;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Parsed parse_impl(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col), line, col);
  }
  if (!doc.is_object()) fail("document must be an object", "");
  for (const auto& [key, value] : doc.items()) {
    if (!kFields.count(key)) fail("unknown field '" + key + "'", "/" + key);
  }

  const int arity = as_int(field(doc, "arity", ""), "/arity");
  if (arity < 2) fail("arity must be at least 2", "/arity");

  const auto& jgroup = field(doc, "group", "");
  if (!jgroup.is_array()) fail("group must be a list of cyclic orders", "/group");
  std::vector<int> orders;
  for (std::size_t t = 0; t < jgroup.size(); ++t) orders.push_back(as_int(jgroup[t], "/group/" + std::to_string(t)));
  GradingGroup group;
  try {
    group = GradingGroup(orders);
  } catch (const Error& e) {
    fail(e.what(), "/group");
  }

  Bicharacter eps;
  const auto& jeps = field(doc, "bicharacter", "");
  try {
    if (jeps.is_string()) {
      const auto kind = jeps.get<std::string>();
      if (kind == "trivial") {
        eps = Bicharacter::trivial(group);
      } else if (kind == "super") {
        eps = Bicharacter::super(group);
      } else {
        fail("bicharacter must be \"trivial\", \"super\" or a table", "/bicharacter");
      }
    } else if (jeps.is_array()) {
      std::vector<Bicharacter::Entry> entries;
      for (std::size_t k = 0; k < jeps.size(); ++k) {
        const auto where = "/bicharacter/" + std::to_string(k);
        entries.push_back({as_element(field(jeps[k], "g", where), group, where + "/g"),
                           as_element(field(jeps[k], "h", where), group, where + "/h"),
                           as_scalar(field(jeps[k], "value", where), where + "/value")});
      }
      eps = Bicharacter::from_table(group, entries);
    } else {
      fail("bicharacter must be \"trivial\", \"super\" or a table", "/bicharacter");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(e.what(), "/bicharacter");
  }

  std::map<std::string, int> index;
  auto read_basis = [&](const char* key, bool required, int offset) {
    std::vector<BasisElement> out;
    const std::string base = std::string("/") + key;
    if (!doc.contains(key)) {
      if (required) fail(std::string("missing field '") + key + "'", "");
      return out;
    }
    const auto& arr = doc[key];
    if (!arr.is_array()) fail("expected a list of basis elements", base);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto where = base + "/" + std::to_string(k);
      auto id = as_string(field(arr[k], "id", where), where + "/id");
      if (id.empty()) fail("basis id must be nonempty", where + "/id");
      if (!index.emplace(id, offset + static_cast<int>(k)).second) fail("duplicate basis id '" + id + "'", where + "/id");
      out.push_back({std::move(id), as_element(field(arr[k], "degree", where), group, where + "/degree")});
    }
    return out;
  };
  auto w = read_basis("w_basis", true, 0);
  if (w.empty()) fail("the W-basis must be nonempty", "/w_basis");
  auto v = read_basis("v_basis", false, static_cast<int>(w.size()));
  const auto dim = w.size() + v.size();

  ProductMap products;
  std::map<std::string, std::string> product_at;
  if (doc.contains("products")) {
    const auto& arr = doc["products"];
    if (!arr.is_array()) fail("products must be a list", "/products");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const auto where = "/products/" + std::to_string(k);
      const auto& jargs = field(arr[k], "args", where);
      if (!jargs.is_array() || jargs.size() != static_cast<std::size_t>(arity)) {
        fail("args must list exactly " + std::to_string(arity) + " basis ids", where + "/args");
      }
      std::vector<int> args;
      std::string key = "(";
      for (std::size_t a = 0; a < jargs.size(); ++a) {
        const auto id = as_string(jargs[a], where + "/args/" + std::to_string(a));
        const auto it = index.find(id);
        if (it == index.end()) fail("unknown basis id '" + id + "'", where + "/args/" + std::to_string(a));
        args.push_back(it->second);
        key += (a ? "," : "") + id;
      }
      key += ")";
      if (products.count(args)) fail("repeated product entry " + key, where);

      const auto& jres = field(arr[k], "result", where);
      if (!jres.is_array()) fail("result must be a list of [id, coefficient] pairs", where + "/result");
      Vec value = zero_vec(dim);
      std::set<int> seen;
      for (std::size_t r = 0; r < jres.size(); ++r) {
        const auto rw = where + "/result/" + std::to_string(r);
        if (!jres[r].is_array() || jres[r].size() != 2) fail("expected [id, coefficient]", rw);
        const auto id = as_string(jres[r][0], rw + "/0");
        const auto it = index.find(id);
        if (it == index.end()) fail("unknown basis id '" + id + "'", rw + "/0");
        if (!seen.insert(it->second).second) fail("basis id '" + id + "' repeated in result", rw);
        value[static_cast<std::size_t>(it->second)] = as_scalar(jres[r][1], rw + "/1");
      }
      product_at[key] = where;
      products.emplace(std::move(args), std::move(value));
    }
  }

  std::optional<std::string> scheme;
  if (doc.contains("identity_scheme")) scheme = as_string(doc["identity_scheme"], "/identity_scheme");

  return {ConcreteAlgebra(arity, std::move(eps), std::move(w), std::move(v), std::move(products), std::move(scheme)),
          std::move(product_at)};
}

ValidationReport located_report(const Parsed& parsed) {
  auto report = validate_algebra(parsed.alg);
  for (auto& viol : report.violations) {
    const auto it = parsed.product_at.find(viol.witness);
    if (it != parsed.product_at.end()) viol.witness += " at " + it->second;
  }
  return report;
}

}  // namespace

ConcreteAlgebra parse_algebra_unchecked(std::string_view text) { return parse_impl(text).alg; }

ValidationReport validate_document(std::string_view text) { return located_report(parse_impl(text)); }

ConcreteAlgebra parse_algebra(std::string_view text) {
  auto parsed = parse_impl(text);
  auto report = located_report(parsed);
  if (!report.ok()) throw ValidationError(std::move(report));
  return std::move(parsed.alg);
}

std::string read_algebra_file(const std::string& path) {
  std::string actual = path;
  if (!std::filesystem::exists(actual) && std::filesystem::exists(path + ".json")) actual = path + ".json";
  std::ifstream in(actual, std::ios::binary);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ConcreteAlgebra load_algebra(const std::string& path) { return parse_algebra(read_algebra_file(path)); }

std::string serialize(const ConcreteAlgebra& alg) {
  json doc;
  doc["arity"] = alg.arity();
  doc["group"] = alg.group().orders();

  const auto& eps = alg.bicharacter();
  const bool even = !alg.group().orders().empty() && alg.group().orders().front() % 2 == 0;
  if (eps == Bicharacter::trivial(alg.group())) {
    doc["bicharacter"] = "trivial";
  } else if (even && eps == Bicharacter::super(alg.group())) {
    doc["bicharacter"] = "super";
  } else {
    json table = json::array();
    for (const auto& e : eps.entries()) table.push_back({{"g", e.g}, {"h", e.h}, {"value", to_string(e.value)}});
    doc["bicharacter"] = std::move(table);
  }

  auto basis = [](const std::vector<BasisElement>& elems) {
    json arr = json::array();
    for (const auto& b : elems) arr.push_back({{"id", b.id}, {"degree", b.degree}});
    return arr;
  };
  doc["w_basis"] = basis(alg.w_basis());
  doc["v_basis"] = basis(alg.v_basis());

  json products = json::array();
  for (const auto& [args, value] : alg.products()) {
    json jargs = json::array();
    for (int b : args) jargs.push_back(alg.id(b));
    json result = json::array();
    for (auto b : support(value)) result.push_back({alg.id(static_cast<int>(b)), to_string(value[b])});
    products.push_back({{"args", std::move(jargs)}, {"result", std::move(result)}});
  }
  doc["products"] = std::move(products);
  if (alg.identity_scheme()) doc["identity_scheme"] = *alg.identity_scheme();
  return doc.dump(2) + "\n";
}

}  // namespace qmalg
