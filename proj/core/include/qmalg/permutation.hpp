#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qmalg {

/// Bijection of {0, ..., n-1}. Acting on a sequence, sigma places the
/// element at position sigma(p) into position p, so that
/// <x_1, ..., x_n>_sigma = <x_sigma(1), ..., x_sigma(n)>.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  /// Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
  static Permutation from_images(std::vector<int> images);
  static Permutation from_one_based(std::span<const int> images);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
  /// Every permutation of n points in lexicographic order of image arrays.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return image_.size(); }
  int operator()(std::size_t p) const { return image_[p]; }
  const std::vector<int>& images() const { return image_; }
  std::vector<int> one_based() const;
  bool is_identity() const;

  Permutation inverse() const;

  /// out[p] = in[sigma(p)]
  template <typename T>
  std::vector<T> apply(std::span<const T> in) const {
    std::vector<T> out;
    out.reserve(in.size());
    for (int src : image_) out.push_back(in[static_cast<std::size_t>(src)]);
    return out;
  }
  template <typename T>
  std::vector<T> apply(const std::vector<T>& in) const {
    return apply(std::span<const T>(in));
  }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// The permutation c with c.apply(x) == outer.apply(inner.apply(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

}  // namespace qmalg
