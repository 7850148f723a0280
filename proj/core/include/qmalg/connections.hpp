#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmalg/permutation.hpp"
#include "qmalg/symbolic.hpp"

namespace qmalg {

/// Element of the extended index set: an index i in I or the symbol v,
/// possibly barred.
struct ExtIndex {
  static constexpr int kV = -1;

  int index = kV;
  bool barred = false;

  static ExtIndex idx(int i) { return {i, false}; }
  static ExtIndex v() { return {kV, false}; }
  static ExtIndex bar_idx(int i) { return {i, true}; }
  static ExtIndex bar_v() { return {kV, true}; }

  bool is_v() const { return index == kV; }
  ExtIndex bar() const { return {index, !barred}; }
  /// Pattern entry of the unbarred symbol (index or kVSlot).
  int slot() const { return is_v() ? kVSlot : index; }

  friend bool operator==(const ExtIndex&, const ExtIndex&) = default;
  friend auto operator<=>(const ExtIndex&, const ExtIndex&) = default;
};

/// Indices are printed 1-based unless names are supplied; bars as '~'.
std::string to_string(const ExtIndex& e, std::span<const std::string> names = {});

/// Finite subset of the extended index set I u {v} u bar(I) u {bar v}
/// packed in 64 bits: unbarred index i at bit i, v at bit 31, barred
/// entries shifted by 32. Supports |I| <= 31.
class ExtSet {
 public:
  static constexpr int kMaxIndices = 31;

  ExtSet() = default;
  static ExtSet from_bits(std::uint64_t bits) {
    ExtSet s;
    s.bits_ = bits;
    return s;
  }
  static ExtSet of(std::initializer_list<ExtIndex> elems);

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;

  bool contains(ExtIndex e) const { return (bits_ >> position(e)) & 1u; }
  void insert(ExtIndex e) { bits_ |= std::uint64_t{1} << position(e); }
  void erase(ExtIndex e) { bits_ &= ~(std::uint64_t{1} << position(e)); }

  /// Elementwise bar.
  ExtSet bar() const { return from_bits((bits_ >> 32) | (bits_ << 32)); }
  /// Unbarred indices only (drops v and everything barred).
  ExtSet indices() const { return from_bits(bits_ & 0x7fffffffULL); }
  ExtSet without_v() const { return from_bits(bits_ & ~((std::uint64_t{1} << 31) | (std::uint64_t{1} << 63))); }

  ExtSet operator|(ExtSet o) const { return from_bits(bits_ | o.bits_); }
  ExtSet operator&(ExtSet o) const { return from_bits(bits_ & o.bits_); }
  ExtSet& operator|=(ExtSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  /// Members in order: unbarred indices, v, barred indices, bar v.
  std::vector<ExtIndex> elements() const;
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const ExtSet&, const ExtSet&) = default;

 private:
  static int position(ExtIndex e) { return (e.is_v() ? 31 : e.index) + (e.barred ? 32 : 0); }
  std::uint64_t bits_ = 0;
};

/// Argument pack (a_2, ..., a_n): n-1 symbols, all barred or all unbarred.
struct ArgPack {
  std::vector<ExtIndex> entries;

  bool homogeneous() const;
  bool barred() const { return !entries.empty() && entries.front().barred; }
  ArgPack bar() const;
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const ArgPack&, const ArgPack&) = default;
};

/// Every homogeneous pack for the table: unbarred packs first, then barred,
/// each in lexicographic order with v last.
std::vector<ArgPack> all_arg_packs(const SymbolicTable& sym);

/// a_sigma: {r} when the sigma-permuted pattern lands on F e_r, {v} when
/// an all-index or all-v pattern lands in V, empty otherwise.
ExtSet eval_a(const SymbolicTable& sym, const Permutation& sigma, std::span<const ExtIndex> args);

/// b_sigma(head, tail) with a barred tail of length n-1.
ExtSet eval_b(const SymbolicTable& sym, const Permutation& sigma, ExtIndex head, std::span<const ExtIndex> tail);

/// mu(head, tail); empty on a non-homogeneous tail.
ExtSet eval_mu(const SymbolicTable& sym, ExtIndex head, const ArgPack& tail);

/// phi(J, X) = S u bar(S) with S = (U_{j in J} mu(j, X)) \ {v}.
/// J must be a subset of I u bar(I).
ExtSet eval_phi(const SymbolicTable& sym, ExtSet J, const ArgPack& pack);

struct ConnectionCertificate {
  int from = 0;
  int to = 0;
  ExtIndex start;                 ///< from or bar(from)
  std::vector<ArgPack> packs;     ///< X_1, ..., X_t
  std::vector<ExtSet> chain;      ///< phi(...phi({start}, X_1)..., X_m) for m = 1..t
};

/// Recomputes every step with eval_phi; true iff all intermediate sets are
/// nonempty, match the stored chain, and `to` is in the last one (or the
/// chain is empty and from == to).
bool replay(const SymbolicTable& sym, const ConnectionCertificate& cert);

/// Shortest connection from i to j, found by breadth-first search over the
/// subsets of I u bar(I) reachable from {i} and {bar i}. Throws
/// StructuralError for an unknown index.
std::optional<ConnectionCertificate> find_connection(const SymbolicTable& sym, int i, int j);

/// reach[i] = indices j such that i is connected to j (including i).
std::vector<ExtSet> reachability(const SymbolicTable& sym);

struct ConnectionPartition {
  /// Classes sorted by smallest member; members ascending.
  std::vector<std::vector<int>> classes;

  std::size_t size() const { return classes.size(); }
  std::size_t class_of(int i) const;
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const ConnectionPartition&, const ConnectionPartition&) = default;
};

/// Quotient I / ~. Verifies reflexivity, symmetry and transitivity of the
/// computed reachability and throws InternalConsistencyError if any fails.
ConnectionPartition classes(const SymbolicTable& sym);

}  // namespace qmalg
