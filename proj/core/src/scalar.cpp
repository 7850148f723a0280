#include "qmalg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace qmalg {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = pos; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational '" + s + "'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);

  Scalar out;
  if (mpq_set_str(out.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (mpz_sgn(out.get_den_mpz_t()) == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& c : v) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

void add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  if (sgn(c) == 0) return;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) acc[k] += c * v[k];
  }
}

Vec scaled(const Vec& v, const Scalar& c) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * c;
  return out;
}

std::vector<std::size_t> support(const Vec& v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) out.push_back(k);
  }
  return out;
}

}  // namespace qmalg
