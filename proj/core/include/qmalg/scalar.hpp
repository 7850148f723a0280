#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qmalg {

/// Exact rational scalar, always kept canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Coordinate vector over some fixed basis.
using Vec = std::vector<Scalar>;

/// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument on
/// malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

/// acc += c * v
void add_scaled(Vec& acc, const Scalar& c, const Vec& v);
Vec scaled(const Vec& v, const Scalar& c);

/// Indices of the nonzero coordinates, ascending.
std::vector<std::size_t> support(const Vec& v);

}  // namespace qmalg
