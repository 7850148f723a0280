#include "qmalg/generator.hpp"

#include <limits>
#include <random>

#include "qmalg/errors.hpp"
#include "qmalg/symbolic.hpp"

namespace qmalg {

std::string to_string(GeneratorMode m) {
  return m == GeneratorMode::multiplicative ? "multiplicative" : "general_symbolic";
}

GeneratorMode parse_generator_mode(const std::string& text) {
  if (text == "multiplicative") return GeneratorMode::multiplicative;
  if (text == "general_symbolic" || text == "general-symbolic") return GeneratorMode::general_symbolic;
  throw StructuralError("unknown generator mode '" + text + "'");
}

void check_params(const GeneratorParams& p) {
  if (p.arity < 2 || p.arity > 3) throw StructuralError("generator: arity must be 2 or 3");
  if (p.basis_count < 1 || p.basis_count > 8) throw StructuralError("generator: |I| must be between 1 and 8");
  if (p.dim_v < 0 || p.dim_v > 4) throw StructuralError("generator: dim V must be between 0 and 4");
  if (p.mode == GeneratorMode::multiplicative && p.dim_v != 0) {
    throw StructuralError("generator: multiplicative mode needs dim V = 0");
  }
  if (!(p.density >= 0.0 && p.density <= 1.0)) throw StructuralError("generator: density must lie in [0, 1]");
}

namespace {

// std::uniform_int_distribution differs between standard libraries; this
// keeps generated instances identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  bool chance(double p) { return static_cast<double>(below(1u << 30)) < p * static_cast<double>(1u << 30); }

  Scalar coeff() {
    auto num = static_cast<long>(below(6)) - 3;
    if (num >= 0) ++num;
    Scalar c(num);
    c /= static_cast<long>(below(3)) + 1;
    return c;
  }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 eng_;
};

struct Builder {
  const GeneratorParams& p;
  Rng& rng;
  GradingGroup group;
  std::vector<BasisElement> w;
  std::vector<BasisElement> v;
  ProductMap products;

  int dim() const { return static_cast<int>(w.size() + v.size()); }
  const GroupElement& degree(int b) const {
    return b < static_cast<int>(w.size()) ? w[static_cast<std::size_t>(b)].degree
                                          : v[static_cast<std::size_t>(b) - w.size()].degree;
  }

  GroupElement degree_sum(const std::vector<int>& tuple) const {
    std::vector<GroupElement> ds;
    for (int b : tuple) ds.push_back(degree(b));
    return group.sum(ds);
  }

  std::vector<int> lines_of(const GroupElement& g) const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(w.size()); ++j) {
      if (w[static_cast<std::size_t>(j)].degree == g) out.push_back(j);
    }
    return out;
  }

  std::vector<int> v_of(const GroupElement& g) const {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(v.size()); ++b) {
      if (v[static_cast<std::size_t>(b)].degree == g) out.push_back(static_cast<int>(w.size()) + b);
    }
    return out;
  }

  void set_line(const std::vector<int>& tuple, int j) {
    Vec value = zero_vec(static_cast<std::size_t>(dim()));
    value[static_cast<std::size_t>(j)] = rng.coeff();
    products[tuple] = std::move(value);
  }

  // Random nonzero combination of the given V-basis elements.
  void set_in_v(const std::vector<int>& tuple, const std::vector<int>& targets) {
    Vec value = zero_vec(static_cast<std::size_t>(dim()));
    for (int b : targets) {
      if (rng.chance(0.5)) value[static_cast<std::size_t>(b)] = rng.coeff();
    }
    if (is_zero(value)) value[static_cast<std::size_t>(rng.pick(targets))] = rng.coeff();
    products[tuple] = std::move(value);
  }
};

void fill_multiplicative(Builder& bld) {
  const auto n = static_cast<std::size_t>(bld.p.arity);
  const int m = static_cast<int>(bld.w.size());
  std::vector<int> t(n, 0);
  while (true) {
    if (bld.rng.chance(bld.p.density)) {
      const auto lines = bld.lines_of(bld.degree_sum(t));
      if (!lines.empty()) bld.set_line(t, bld.rng.pick(lines));
    }
    std::size_t k = n;
    while (true) {
      if (k == 0) return;
      --k;
      if (++t[k] < m) break;
      t[k] = 0;
    }
  }
}

void fill_symbolic(Builder& bld) {
  const int m = static_cast<int>(bld.w.size());
  const bool has_v = !bld.v.empty();
  SymbolicTable patterns(bld.p.arity, m, has_v);
  const int w_dim = m;
  const int v_dim = static_cast<int>(bld.v.size());

  for (std::size_t k = 0; k < patterns.pattern_count(); ++k) {
    const auto pattern = patterns.pattern(k);
    const auto shape = shape_of(pattern);
    if (shape != PatternShape::all_indices && !has_v) continue;
    if (!bld.rng.chance(bld.p.density)) continue;

    if (shape == PatternShape::all_indices) {
      const auto g = bld.degree_sum(pattern);
      const auto lines = bld.lines_of(g);
      const auto vs = bld.v_of(g);
      const auto options = lines.size() + (vs.empty() ? 0 : 1);
      if (options == 0) continue;
      const auto choice = bld.rng.below(options);
      if (choice < lines.size()) {
        bld.set_line(pattern, lines[choice]);
      } else {
        bld.set_in_v(pattern, vs);
      }
      continue;
    }

    // Patterns with V slots: one line for every fill (condition 2), or for
    // the all-V pattern possibly V itself.
    const bool into_v = shape == PatternShape::all_v && bld.rng.chance(0.5);
    const int line = static_cast<int>(bld.rng.below(static_cast<std::uint64_t>(m)));
    std::vector<std::size_t> slots;
    for (std::size_t p = 0; p < pattern.size(); ++p) {
      if (pattern[p] == kVSlot) slots.push_back(p);
    }
    std::vector<int> fill(slots.size(), 0);
    std::vector<int> tuple = pattern;
    while (true) {
      for (std::size_t s = 0; s < slots.size(); ++s) tuple[slots[s]] = w_dim + fill[s];
      const auto g = bld.degree_sum(tuple);
      if (bld.rng.chance(0.75)) {
        if (into_v) {
          const auto vs = bld.v_of(g);
          if (!vs.empty()) bld.set_in_v(tuple, vs);
        } else if (bld.w[static_cast<std::size_t>(line)].degree == g) {
          bld.set_line(tuple, line);
        }
      }
      std::size_t s = fill.size();
      bool done = true;
      while (s > 0) {
        --s;
        if (++fill[s] < v_dim) {
          done = false;
          break;
        }
        fill[s] = 0;
      }
      if (done) break;
    }
  }
}

}  // namespace

ConcreteAlgebra generate_random(const GeneratorParams& p) {
  check_params(p);
  Rng rng(p.seed);
  Builder bld{p, rng, GradingGroup(p.group_orders), {}, {}, {}};

  for (int i = 0; i < p.basis_count; ++i) {
    bld.w.push_back({"e" + std::to_string(i + 1), bld.group.element(rng.below(bld.group.order()))});
  }
  for (int b = 0; b < p.dim_v; ++b) {
    bld.v.push_back({"v" + std::to_string(b + 1), bld.group.element(rng.below(bld.group.order()))});
  }
  const bool even = !p.group_orders.empty() && p.group_orders.front() % 2 == 0;
  auto eps = even && rng.chance(0.5) ? Bicharacter::super(bld.group) : Bicharacter::trivial(bld.group);

  if (p.mode == GeneratorMode::multiplicative) {
    fill_multiplicative(bld);
  } else {
    fill_symbolic(bld);
  }
  return ConcreteAlgebra(p.arity, std::move(eps), std::move(bld.w), std::move(bld.v), std::move(bld.products));
}

}  // namespace qmalg
