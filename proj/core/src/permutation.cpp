#include "qmalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmalg {

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> img;
  img.reserve(images.size());
  for (int x : images) img.push_back(x - 1);
  return from_images(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  auto img = identity(n).image_;
  std::swap(img.at(a), img.at(b));
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  auto img = identity(n).image_;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(image_);
  for (auto& x : out) ++x;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < image_.size(); ++p) {
    if (image_[p] != static_cast<int>(p)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t p = 0; p < image_.size(); ++p) inv[static_cast<std::size_t>(image_[p])] = static_cast<int>(p);
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t p = 0; p < image_.size(); ++p) {
    if (p) s += ',';
    s += std::to_string(image_[p] + 1);
  }
  return s + "]";
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  // outer.apply(inner.apply(x))[p] = x[inner(outer(p))]
  std::vector<int> img(outer.size());
  for (std::size_t p = 0; p < img.size(); ++p) {
    img[p] = inner(static_cast<std::size_t>(outer(p)));
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace qmalg
