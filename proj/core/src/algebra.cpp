#include "qmalg/algebra.hpp"

#include <set>

#include "qmalg/errors.hpp"

namespace qmalg {

ConcreteAlgebra::ConcreteAlgebra(int arity, Bicharacter eps, std::vector<BasisElement> w_basis,
                                 std::vector<BasisElement> v_basis, ProductMap products,
                                 std::optional<std::string> identity_scheme)
    : arity_(arity),
      eps_(std::move(eps)),
      w_basis_(std::move(w_basis)),
      v_basis_(std::move(v_basis)),
      scheme_(std::move(identity_scheme)) {
  if (arity_ < 2) throw StructuralError("arity must be at least 2");
  if (w_basis_.empty()) throw StructuralError("the W-basis must be nonempty");

  std::set<std::string> ids;
  for (const auto* part : {&w_basis_, &v_basis_}) {
    for (const auto& b : *part) {
      if (!ids.insert(b.id).second) throw StructuralError("duplicate basis id '" + b.id + "'");
      if (!group().contains(b.degree)) {
        throw StructuralError("degree " + to_string(b.degree) + " of '" + b.id + "' is not in the grading group");
      }
    }
  }

  const auto n = static_cast<std::size_t>(dim());
  zero_ = zero_vec(n);
  std::size_t cells = 1;
  for (int k = 0; k < arity_; ++k) cells *= n;
  dense_.assign(cells, -1);

  for (auto& [args, value] : products) {
    if (args.size() != static_cast<std::size_t>(arity_)) {
      throw StructuralError("product key has " + std::to_string(args.size()) + " arguments, arity is " +
                            std::to_string(arity_));
    }
    for (int b : args) {
      if (b < 0 || b >= dim()) throw StructuralError("product key references basis index out of range");
    }
    if (value.size() != n) throw StructuralError("product value has the wrong length");
    if (is_zero(value)) continue;
    dense_[flat_index(args)] = static_cast<int>(values_.size());
    values_.push_back(value);
    products_.emplace(args, std::move(value));
  }
}

const BasisElement& ConcreteAlgebra::basis(int b) const {
  if (b < 0 || b >= dim()) throw StructuralError("basis index out of range");
  return b < w_dim() ? w_basis_[static_cast<std::size_t>(b)] : v_basis_[static_cast<std::size_t>(b - w_dim())];
}

std::optional<int> ConcreteAlgebra::find(const std::string& id) const {
  for (int b = 0; b < dim(); ++b) {
    if (basis(b).id == id) return b;
  }
  return std::nullopt;
}

std::size_t ConcreteAlgebra::flat_index(std::span<const int> args) const {
  std::size_t idx = 0;
  for (int b : args) idx = idx * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(b);
  return idx;
}

const Vec& ConcreteAlgebra::product(std::span<const int> args) const {
  if (args.size() != static_cast<std::size_t>(arity_)) throw StructuralError("product: wrong number of arguments");
  for (int b : args) {
    if (b < 0 || b >= dim()) throw StructuralError("product: basis index out of range");
  }
  const int slot = dense_[flat_index(args)];
  return slot < 0 ? zero_ : values_[static_cast<std::size_t>(slot)];
}

bool operator==(const ConcreteAlgebra& a, const ConcreteAlgebra& b) {
  return a.arity_ == b.arity_ && a.eps_ == b.eps_ && a.w_basis_ == b.w_basis_ && a.v_basis_ == b.v_basis_ &&
         a.products_ == b.products_ && a.scheme_ == b.scheme_;
}

namespace {

// Sum over all basis tuples in the supports of args of the coefficient
// product times the structure constant.
Vec expand(const ConcreteAlgebra& alg, std::span<const Vec> args) {
  const auto n = static_cast<std::size_t>(alg.dim());
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(args.size());
  for (const auto& a : args) {
    if (a.size() != n) throw StructuralError("eval_product: argument has the wrong dimension");
    supports.push_back(support(a));
    if (supports.back().empty()) return zero_vec(n);
  }
  Vec out = zero_vec(n);
  std::vector<std::size_t> cursor(args.size(), 0);
  std::vector<int> tuple(args.size());
  while (true) {
    Scalar coeff = 1;
    for (std::size_t k = 0; k < args.size(); ++k) {
      const auto b = supports[k][cursor[k]];
      tuple[k] = static_cast<int>(b);
      coeff *= args[k][b];
    }
    add_scaled(out, coeff, alg.product(tuple));

    std::size_t k = args.size();
    while (k > 0) {
      --k;
      if (++cursor[k] < supports[k].size()) break;
      cursor[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace

Vec eval_product(const ConcreteAlgebra& alg, const Permutation& sigma, std::span<const Vec> args) {
  if (args.size() != static_cast<std::size_t>(alg.arity())) {
    throw StructuralError("eval_product: expected " + std::to_string(alg.arity()) + " arguments");
  }
  if (sigma.size() != args.size()) throw StructuralError("eval_product: permutation size mismatch");
  const auto permuted = sigma.apply(args);
  return expand(alg, permuted);
}

Vec multiply(const ConcreteAlgebra& alg, std::span<const Vec> args) {
  return eval_product(alg, Permutation::identity(args.size()), args);
}

ValidationReport validate_grading(const ConcreteAlgebra& alg) {
  ValidationReport report;
  for (const auto& [args, value] : alg.products()) {
    std::vector<GroupElement> degs;
    std::string witness = "(";
    for (std::size_t k = 0; k < args.size(); ++k) {
      degs.push_back(alg.degree(args[k]));
      if (k) witness += ',';
      witness += alg.id(args[k]);
    }
    witness += ')';
    const auto expected = alg.group().sum(degs);
    for (auto b : support(value)) {
      const auto& got = alg.degree(static_cast<int>(b));
      if (got != expected) {
        report.add("grading", witness,
                   alg.id(static_cast<int>(b)) + " has degree " + to_string(got) + ", expected " + to_string(expected));
      }
    }
  }
  return report;
}

std::optional<GroupElement> homogeneous_degree(const ConcreteAlgebra& alg, const Vec& v) {
  std::optional<GroupElement> deg;
  for (auto b : support(v)) {
    const auto& d = alg.degree(static_cast<int>(b));
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

ConcreteAlgebra relabel_w(const ConcreteAlgebra& alg, const Permutation& perm) {
  if (perm.size() != static_cast<std::size_t>(alg.w_dim())) throw StructuralError("relabel_w: permutation size mismatch");
  const int n = alg.dim();
  // old index -> new index
  std::vector<int> to_new(static_cast<std::size_t>(n));
  for (int p = 0; p < alg.w_dim(); ++p) to_new[static_cast<std::size_t>(perm(static_cast<std::size_t>(p)))] = p;
  for (int b = alg.w_dim(); b < n; ++b) to_new[static_cast<std::size_t>(b)] = b;

  std::vector<BasisElement> w;
  for (int p = 0; p < alg.w_dim(); ++p) w.push_back(alg.w_basis()[static_cast<std::size_t>(perm(static_cast<std::size_t>(p)))]);

  ProductMap products;
  for (const auto& [args, value] : alg.products()) {
    std::vector<int> key;
    for (int b : args) key.push_back(to_new[static_cast<std::size_t>(b)]);
    Vec out = zero_vec(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) out[static_cast<std::size_t>(to_new[static_cast<std::size_t>(b)])] = value[static_cast<std::size_t>(b)];
    products.emplace(std::move(key), std::move(out));
  }
  return ConcreteAlgebra(alg.arity(), alg.bicharacter(), std::move(w), alg.v_basis(), std::move(products),
                         alg.identity_scheme());
}

std::string format_vector(const ConcreteAlgebra& alg, const Vec& v) {
  std::string out;
  for (auto b : support(v)) {
    Scalar c = v[b];
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != 1) out += to_string(c) + "*";
    out += alg.id(static_cast<int>(b));
  }
  return out.empty() ? "0" : out;
}

}  // namespace qmalg
