#include "qmalg/symbolic.hpp"

#include <algorithm>
#include <optional>

#include "qmalg/errors.hpp"

namespace qmalg {

std::string to_string(const ProductTarget& t) {
  switch (t.kind) {
    case TargetKind::zero:
      return "Zero";
    case TargetKind::basis:
      return "Basis(" + std::to_string(t.index) + ")";
    case TargetKind::into_v:
      return "IntoV";
  }
  return "?";
}

SymbolicTable::SymbolicTable(int arity, int index_count, bool has_v)
    : arity_(arity), index_count_(index_count), has_v_(has_v) {
  if (arity < 2) throw StructuralError("symbolic table: arity must be at least 2");
  if (index_count < 1) throw StructuralError("symbolic table: index set must be nonempty");
  std::size_t cells = 1;
  for (int k = 0; k < arity; ++k) cells *= static_cast<std::size_t>(index_count + 1);
  targets_.assign(cells, ProductTarget::zero());
}

std::size_t SymbolicTable::flat_index(std::span<const int> pattern) const {
  if (pattern.size() != static_cast<std::size_t>(arity_)) throw StructuralError("symbolic table: wrong pattern length");
  std::size_t idx = 0;
  for (int e : pattern) {
    if (e != kVSlot && (e < 0 || e >= index_count_)) throw StructuralError("symbolic table: index out of range");
    const int digit = e == kVSlot ? index_count_ : e;
    idx = idx * static_cast<std::size_t>(index_count_ + 1) + static_cast<std::size_t>(digit);
  }
  return idx;
}

ProductTarget SymbolicTable::at(std::span<const int> pattern) const { return targets_[flat_index(pattern)]; }

void SymbolicTable::set(std::span<const int> pattern, ProductTarget target) { targets_[flat_index(pattern)] = target; }

std::vector<int> SymbolicTable::pattern(std::size_t k) const {
  std::vector<int> out(static_cast<std::size_t>(arity_));
  const auto base = static_cast<std::size_t>(index_count_ + 1);
  for (std::size_t p = out.size(); p-- > 0;) {
    const auto digit = static_cast<int>(k % base);
    out[p] = digit == index_count_ ? kVSlot : digit;
    k /= base;
  }
  return out;
}

PatternShape shape_of(std::span<const int> pattern) {
  const auto vs = std::count(pattern.begin(), pattern.end(), kVSlot);
  if (vs == 0) return PatternShape::all_indices;
  if (static_cast<std::size_t>(vs) == pattern.size()) return PatternShape::all_v;
  return PatternShape::mixed;
}

namespace {

enum class Landing { zero, line, in_v, mixed };

struct Classified {
  Landing landing;
  int line = -1;
};

Classified classify(const ConcreteAlgebra& alg, const Vec& v) {
  const auto supp = support(v);
  if (supp.empty()) return {Landing::zero};
  bool any_w = false;
  bool any_v = false;
  for (auto b : supp) (alg.is_v(static_cast<int>(b)) ? any_v : any_w) = true;
  if (any_w && any_v) return {Landing::mixed};
  if (any_v) return {Landing::in_v};
  if (supp.size() > 1) return {Landing::mixed};
  return {Landing::line, static_cast<int>(supp.front())};
}

std::string pattern_text(const ConcreteAlgebra& alg, std::span<const int> pattern) {
  std::string s = "(";
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (k) s += ',';
    s += pattern[k] == kVSlot ? std::string("V") : alg.id(pattern[k]);
  }
  return s + ")";
}

[[noreturn]] void violation(const ConcreteAlgebra& alg, std::span<const int> pattern, const std::string& what) {
  throw QuasiMultViolation("pattern " + pattern_text(alg, pattern) + ": " + what);
}

}  // namespace

SymbolicTable symbolic_of_concrete(const ConcreteAlgebra& alg) {
  SymbolicTable sym(alg.arity(), alg.w_dim(), alg.v_dim() > 0);
  const auto n = static_cast<std::size_t>(alg.arity());

  for (std::size_t k = 0; k < sym.pattern_count(); ++k) {
    const auto pattern = sym.pattern(k);
    const auto shape = shape_of(pattern);

    std::vector<std::size_t> v_slots;
    for (std::size_t p = 0; p < n; ++p) {
      if (pattern[p] == kVSlot) v_slots.push_back(p);
    }
    if (!v_slots.empty() && alg.v_dim() == 0) continue;  // V = 0, product is zero

    std::optional<int> line;
    bool saw_v = false;
    std::vector<int> tuple = pattern;
    std::vector<int> fill(v_slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < v_slots.size(); ++s) tuple[v_slots[s]] = alg.w_dim() + fill[s];
      const auto got = classify(alg, alg.product(tuple));
      switch (got.landing) {
        case Landing::zero:
          break;
        case Landing::mixed:
          violation(alg, pattern, "product " + format_vector(alg, alg.product(tuple)) + " has mixed support");
        case Landing::in_v:
          if (shape == PatternShape::mixed) {
            violation(alg, pattern, "a product with V slots lands in V (" + format_vector(alg, alg.product(tuple)) + ")");
          }
          saw_v = true;
          break;
        case Landing::line:
          if (line && *line != got.line) {
            violation(alg, pattern, "V-fills land on two lines F " + alg.id(*line) + " and F " + alg.id(got.line));
          }
          line = got.line;
          break;
      }
      if (saw_v && line) violation(alg, pattern, "V-fills land both in V and on F " + alg.id(*line));

      std::size_t s = fill.size();
      bool done = true;
      while (s > 0) {
        --s;
        if (++fill[s] < alg.v_dim()) {
          done = false;
          break;
        }
        fill[s] = 0;
      }
      if (done) break;
    }

    if (line) {
      sym.set(pattern, ProductTarget::basis(*line));
    } else if (saw_v) {
      sym.set(pattern, ProductTarget::into_v());
    }
  }
  return sym;
}

ValidationReport validate_quasi_mult(const SymbolicTable& sym) {
  ValidationReport report;
  for (std::size_t k = 0; k < sym.pattern_count(); ++k) {
    const auto pattern = sym.pattern(k);
    const auto target = sym.at_index(k);
    std::string witness = "(";
    for (std::size_t p = 0; p < pattern.size(); ++p) {
      if (p) witness += ',';
      witness += pattern[p] == kVSlot ? std::string("v") : std::to_string(pattern[p]);
    }
    witness += ')';

    if (target.kind == TargetKind::basis && (target.index < 0 || target.index >= sym.index_count())) {
      report.add("target range", witness, to_string(target));
    }
    const auto shape = shape_of(pattern);
    if (shape == PatternShape::mixed && target.kind == TargetKind::into_v) {
      report.add("condition 2", witness, "mixed pattern maps into V");
    }
    if (!sym.has_v()) {
      if (shape != PatternShape::all_indices && target.kind != TargetKind::zero) {
        report.add("V = 0", witness, "pattern with a V slot must be Zero when V = 0, got " + to_string(target));
      }
      if (target.kind == TargetKind::into_v) {
        report.add("V = 0", witness, "IntoV target while V = 0");
      }
    }
  }
  return report;
}

ValidationReport validate_algebra(const ConcreteAlgebra& alg) {
  ValidationReport report = validate_bicharacter(alg.bicharacter(), alg.group());
  report.merge(validate_grading(alg));
  try {
    report.merge(validate_quasi_mult(symbolic_of_concrete(alg)));
  } catch (const QuasiMultViolation& e) {
    report.add("quasi-multiplicativity", e.what(), "");
  }
  return report;
}

void require_valid(const ConcreteAlgebra& alg) {
  auto report = validate_algebra(alg);
  if (!report.ok()) throw ValidationError(std::move(report));
}

}  // namespace qmalg
