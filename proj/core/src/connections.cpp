#include "qmalg/connections.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "qmalg/errors.hpp"

namespace qmalg {

std::string to_string(const ExtIndex& e, std::span<const std::string> names) {
  std::string s = e.barred ? "~" : "";
  if (e.is_v()) return s + "v";
  if (static_cast<std::size_t>(e.index) < names.size()) return s + names[static_cast<std::size_t>(e.index)];
  return s + std::to_string(e.index + 1);
}

ExtSet ExtSet::of(std::initializer_list<ExtIndex> elems) {
  ExtSet s;
  for (auto e : elems) s.insert(e);
  return s;
}

std::size_t ExtSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<ExtIndex> ExtSet::elements() const {
  std::vector<ExtIndex> out;
  for (int half = 0; half < 2; ++half) {
    const bool barred = half == 1;
    for (int i = 0; i < kMaxIndices; ++i) {
      if ((bits_ >> (i + 32 * half)) & 1u) out.push_back({i, barred});
    }
    if ((bits_ >> (31 + 32 * half)) & 1u) out.push_back({ExtIndex::kV, barred});
  }
  return out;
}

std::string ExtSet::to_string(std::span<const std::string> names) const {
  std::string s = "{";
  bool first = true;
  for (auto e : elements()) {
    if (!first) s += ',';
    first = false;
    s += qmalg::to_string(e, names);
  }
  return s + "}";
}

bool ArgPack::homogeneous() const {
  for (const auto& e : entries) {
    if (e.barred != entries.front().barred) return false;
  }
  return true;
}

ArgPack ArgPack::bar() const {
  ArgPack out;
  for (const auto& e : entries) out.entries.push_back(e.bar());
  return out;
}

std::string ArgPack::to_string(std::span<const std::string> names) const {
  std::string s = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ',';
    s += qmalg::to_string(entries[k], names);
  }
  return s + ")";
}

std::vector<ArgPack> all_arg_packs(const SymbolicTable& sym) {
  const auto len = static_cast<std::size_t>(sym.arity() - 1);
  const int base = sym.index_count() + 1;
  std::vector<ArgPack> out;
  for (bool barred : {false, true}) {
    std::vector<int> digits(len, 0);
    while (true) {
      ArgPack pack;
      for (int d : digits) pack.entries.push_back({d == sym.index_count() ? ExtIndex::kV : d, barred});
      out.push_back(std::move(pack));
      std::size_t k = len;
      bool done = true;
      while (k > 0) {
        --k;
        if (++digits[k] < base) {
          done = false;
          break;
        }
        digits[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

namespace {

bool all_barred(std::span<const ExtIndex> xs) {
  for (const auto& e : xs) {
    if (!e.barred) return false;
  }
  return true;
}

bool single(const ExtSet& s, ExtIndex e) { return s == ExtSet::of({e}); }

std::vector<ExtIndex> with_head(ExtIndex head, std::span<const ExtIndex> tail) {
  std::vector<ExtIndex> out{head};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

ExtSet eval_a(const SymbolicTable& sym, const Permutation& sigma, std::span<const ExtIndex> args) {
  if (args.size() != static_cast<std::size_t>(sym.arity()) || sigma.size() != args.size()) {
    throw StructuralError("eval_a: expected " + std::to_string(sym.arity()) + " arguments");
  }
  std::vector<int> pattern(args.size());
  for (std::size_t p = 0; p < args.size(); ++p) {
    const auto& e = args[static_cast<std::size_t>(sigma(p))];
    if (e.barred) return {};
    pattern[p] = e.slot();
  }
  const auto target = sym.at(pattern);
  switch (target.kind) {
    case TargetKind::basis:
      return ExtSet::of({ExtIndex::idx(target.index)});
    case TargetKind::into_v:
      if (shape_of(pattern) == PatternShape::mixed) return {};
      return ExtSet::of({ExtIndex::v()});
    case TargetKind::zero:
      break;
  }
  return {};
}

ExtSet eval_b(const SymbolicTable& sym, const Permutation& sigma, ExtIndex head, std::span<const ExtIndex> tail) {
  if (tail.size() + 1 != static_cast<std::size_t>(sym.arity())) {
    throw StructuralError("eval_b: tail must have length n-1");
  }
  if (head.barred || !all_barred(tail)) return {};

  std::vector<ExtIndex> args(tail.size() + 1);
  for (std::size_t k = 0; k < tail.size(); ++k) args[k + 1] = tail[k].bar();

  ExtSet out;
  if (!head.is_v()) {
    // head = i in I: {i' in I : a(i', t) = {i}} u ({v} if a(v, t) = {i})
    for (int x = 0; x < sym.index_count(); ++x) {
      args[0] = ExtIndex::idx(x);
      if (single(eval_a(sym, sigma, args), head)) out.insert(ExtIndex::idx(x));
    }
    args[0] = ExtIndex::v();
    if (single(eval_a(sym, sigma, args), head)) out.insert(ExtIndex::v());
    return out;
  }

  bool any_v = false;
  bool all_v = true;
  for (const auto& e : tail) {
    if (e.is_v()) {
      any_v = true;
    } else {
      all_v = false;
    }
  }

  if (!any_v) {
    // head = v, tail of barred indices: {i' in I : a(i', t) = {v}}
    for (int x = 0; x < sym.index_count(); ++x) {
      args[0] = ExtIndex::idx(x);
      if (single(eval_a(sym, sigma, args), ExtIndex::v())) out.insert(ExtIndex::idx(x));
    }
  } else if (all_v) {
    // head = v, tail of bar v: {v} if a(v, ..., v) = {v}
    args[0] = ExtIndex::v();
    if (single(eval_a(sym, sigma, args), ExtIndex::v())) out.insert(ExtIndex::v());
  }
  return out;
}

ExtSet eval_mu(const SymbolicTable& sym, ExtIndex head, const ArgPack& tail) {
  if (tail.entries.size() + 1 != static_cast<std::size_t>(sym.arity())) {
    throw StructuralError("eval_mu: pack must have length n-1");
  }
  if (!tail.homogeneous()) return {};
  const auto sigmas = Permutation::all(static_cast<std::size_t>(sym.arity()));
  ExtSet out;

  if (!head.barred && !tail.barred()) {
    const auto args = with_head(head, tail.entries);
    for (const auto& s : sigmas) out |= eval_a(sym, s, args);
  } else if (!head.barred && tail.barred()) {
    for (const auto& s : sigmas) out |= eval_b(sym, s, head, tail.entries);
  } else if (head.barred && !tail.barred()) {
    // U_{k, sigma} b_sigma(j_k, (bar j, bar j_1, ..., bar j_{k-1}, bar j_{k+1}, ...))
    const auto& js = tail.entries;
    for (std::size_t k = 0; k < js.size(); ++k) {
      std::vector<ExtIndex> rest{head};
      for (std::size_t r = 0; r < js.size(); ++r) {
        if (r != k) rest.push_back(js[r].bar());
      }
      for (const auto& s : sigmas) out |= eval_b(sym, s, js[k], rest);
    }
  }
  return out;
}

ExtSet eval_phi(const SymbolicTable& sym, ExtSet J, const ArgPack& pack) {
  if (J.empty()) return {};
  ExtSet s;
  for (auto j : J.elements()) s |= eval_mu(sym, j, pack);
  s = s.without_v();
  return s | s.bar();
}

namespace {

// mu(j, X) \ {v} for every head j in I u bar(I) and every homogeneous pack,
// computed once per search.
class MuCache {
 public:
  explicit MuCache(const SymbolicTable& sym) : packs_(all_arg_packs(sym)), m_(sym.index_count()) {
    if (m_ > ExtSet::kMaxIndices) throw StructuralError("connections: at most 31 basis indices are supported");
    table_.resize(static_cast<std::size_t>(2 * m_) * packs_.size());
    for (int j = 0; j < m_; ++j) {
      for (std::size_t p = 0; p < packs_.size(); ++p) {
        cell(ExtIndex::idx(j), p) = eval_mu(sym, ExtIndex::idx(j), packs_[p]).without_v();
        cell(ExtIndex::bar_idx(j), p) = eval_mu(sym, ExtIndex::bar_idx(j), packs_[p]).without_v();
      }
    }
  }

  const std::vector<ArgPack>& packs() const { return packs_; }

  ExtSet phi(ExtSet J, std::size_t p) const {
    ExtSet s;
    std::uint64_t bits = J.bits();
    while (bits) {
      const int pos = std::countr_zero(bits);
      bits &= bits - 1;
      const bool barred = pos >= 32;
      const int idx = pos % 32;
      s |= cell_const({idx, barred}, p);
    }
    return s | s.bar();
  }

 private:
  std::size_t offset(ExtIndex e, std::size_t p) const {
    return (static_cast<std::size_t>(e.index) + (e.barred ? static_cast<std::size_t>(m_) : 0)) * packs_.size() + p;
  }
  ExtSet& cell(ExtIndex e, std::size_t p) { return table_[offset(e, p)]; }
  const ExtSet& cell_const(ExtIndex e, std::size_t p) const { return table_[offset(e, p)]; }

  std::vector<ArgPack> packs_;
  int m_;
  std::vector<ExtSet> table_;
};

struct SearchNode {
  ExtSet state;
  int parent;        // -1 for a root
  std::size_t pack;  // pack applied to the parent
};

void check_index(const SymbolicTable& sym, int i) {
  if (i < 0 || i >= sym.index_count()) throw StructuralError("unknown index " + std::to_string(i));
}

}  // namespace

bool replay(const SymbolicTable& sym, const ConnectionCertificate& cert) {
  if (cert.packs.size() != cert.chain.size()) return false;
  if (cert.start.index != cert.from || cert.start.is_v()) return false;
  if (cert.packs.empty()) return cert.from == cert.to;
  ExtSet current = ExtSet::of({cert.start});
  for (std::size_t m = 0; m < cert.packs.size(); ++m) {
    current = eval_phi(sym, current, cert.packs[m]);
    if (current.empty() || !(current == cert.chain[m])) return false;
  }
  return current.contains(ExtIndex::idx(cert.to));
}

std::optional<ConnectionCertificate> find_connection(const SymbolicTable& sym, int i, int j) {
  check_index(sym, i);
  check_index(sym, j);
  if (i == j) return ConnectionCertificate{i, j, ExtIndex::idx(i), {}, {}};

  const MuCache cache(sym);
  std::vector<SearchNode> nodes{{ExtSet::of({ExtIndex::idx(i)}), -1, 0},
                                {ExtSet::of({ExtIndex::bar_idx(i)}), -1, 0}};
  std::unordered_map<std::uint64_t, int> seen;
  std::deque<int> queue{0, 1};
  const ExtIndex goal = ExtIndex::idx(j);

  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    for (std::size_t p = 0; p < cache.packs().size(); ++p) {
      const ExtSet next = cache.phi(nodes[static_cast<std::size_t>(at)].state, p);
      if (next.empty()) continue;
      if (next.contains(goal)) {
        ConnectionCertificate cert{i, j, {}, {}, {}};
        cert.packs.push_back(cache.packs()[p]);
        cert.chain.push_back(next);
        int walk = at;
        while (nodes[static_cast<std::size_t>(walk)].parent >= 0) {
          const auto& node = nodes[static_cast<std::size_t>(walk)];
          cert.packs.push_back(cache.packs()[node.pack]);
          cert.chain.push_back(node.state);
          walk = node.parent;
        }
        cert.start = nodes[static_cast<std::size_t>(walk)].state.elements().front();
        std::reverse(cert.packs.begin(), cert.packs.end());
        std::reverse(cert.chain.begin(), cert.chain.end());
        return cert;
      }
      if (seen.emplace(next.bits(), static_cast<int>(nodes.size())).second) {
        nodes.push_back({next, at, p});
        queue.push_back(static_cast<int>(nodes.size() - 1));
      }
    }
  }
  return std::nullopt;
}

std::vector<ExtSet> reachability(const SymbolicTable& sym) {
  const MuCache cache(sym);
  std::vector<ExtSet> reach;
  for (int i = 0; i < sym.index_count(); ++i) {
    ExtSet found = ExtSet::of({ExtIndex::idx(i)});
    std::unordered_map<std::uint64_t, bool> seen;
    std::deque<ExtSet> queue{ExtSet::of({ExtIndex::idx(i)}), ExtSet::of({ExtIndex::bar_idx(i)})};
    while (!queue.empty()) {
      const ExtSet state = queue.front();
      queue.pop_front();
      for (std::size_t p = 0; p < cache.packs().size(); ++p) {
        const ExtSet next = cache.phi(state, p);
        if (next.empty() || !seen.emplace(next.bits(), true).second) continue;
        found |= next.indices();
        queue.push_back(next);
      }
    }
    reach.push_back(found);
  }
  return reach;
}

std::size_t ConnectionPartition::class_of(int i) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int x : classes[c]) {
      if (x == i) return c;
    }
  }
  throw StructuralError("index " + std::to_string(i) + " is not in the partition");
}

std::string ConnectionPartition::to_string(std::span<const std::string> names) const {
  std::string s = "{";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) s += ',';
    s += '{';
    for (std::size_t k = 0; k < classes[c].size(); ++k) {
      if (k) s += ',';
      s += qmalg::to_string(ExtIndex::idx(classes[c][k]), names);
    }
    s += '}';
  }
  return s + "}";
}

ConnectionPartition classes(const SymbolicTable& sym) {
  const auto reach = reachability(sym);
  const int m = sym.index_count();
  for (int i = 0; i < m; ++i) {
    const auto& ri = reach[static_cast<std::size_t>(i)];
    if (!ri.contains(ExtIndex::idx(i))) {
      throw InternalConsistencyError("connection relation is not reflexive at " + std::to_string(i + 1));
    }
    for (int j = 0; j < m; ++j) {
      if (!ri.contains(ExtIndex::idx(j))) continue;
      const auto& rj = reach[static_cast<std::size_t>(j)];
      if (!rj.contains(ExtIndex::idx(i))) {
        throw InternalConsistencyError("connection relation is not symmetric: " + std::to_string(i + 1) + " ~ " +
                                       std::to_string(j + 1));
      }
      if ((rj.bits() & ~ri.bits()) != 0) {
        throw InternalConsistencyError("connection relation is not transitive through " + std::to_string(j + 1));
      }
    }
  }

  ConnectionPartition out;
  std::vector<bool> placed(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    if (placed[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cls;
    for (auto e : reach[static_cast<std::size_t>(i)].elements()) {
      cls.push_back(e.index);
      placed[static_cast<std::size_t>(e.index)] = true;
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace qmalg
