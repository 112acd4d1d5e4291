#pragma once

#include <cstdint>
#include <string>

#include "pexc/matrix.hpp"

namespace pexc {

/// Exact nonnegative fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d);
  std::string str() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<=(const Rational& a, const Rational& b);
};
Rational operator+(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);

/// Jordan type of J_a (x) J_b in characteristic p, 1 <= a, b <= p.
/// Throws UnsupportedRange when max(a,b) > p.
JordanType jordan_tensor(std::size_t a, std::size_t b, std::uint32_t p);

/// [1^m, p^((m^p - m)/p)]: the shape of the cyclic shift on p tensor factors of dimension m.
JordanType cyclic_tensor_shape(std::size_t m, std::uint32_t p);

/// Permutation matrix over GF(p) sending u_1 (x) ... (x) u_t to u_t (x) u_1 (x) ... (x) u_{t-1}.
Matrix tensor_shift_matrix(std::size_t m, std::size_t t, std::uint32_t p);

/// 1/p + (1 - 1/p) / m^(p-1).
Rational kappa_bound(std::uint64_t m, std::uint64_t p);
/// dim C_V(g) / dim V for a unipotent g of the given Jordan type.
Rational fixed_ratio(const JordanType& j);

}  // namespace pexc
