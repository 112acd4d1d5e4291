#include "pexc/jordan.hpp"

#include <numeric>

#include "pexc/errors.hpp"

namespace pexc {

Rational Rational::of(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  return Rational{n / g, d / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

bool operator<=(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational::of(a.num * b.den + b.num * a.den, a.den * b.den); }
Rational operator*(const Rational& a, const Rational& b) { return Rational::of(a.num * b.num, a.den * b.den); }

JordanType jordan_tensor(std::size_t a, std::size_t b, std::uint32_t p) {
  if (a > b) std::swap(a, b);
  if (a < 1) throw InvalidArgument("block sizes must be >= 1");
  if (b > p)
    throw UnsupportedRange("J_" + std::to_string(a) + " (x) J_" + std::to_string(b) + " needs both sizes <= p = " +
                           std::to_string(p));
  std::vector<std::size_t> blocks;
  if (a + b <= p) {
    for (std::size_t s = a + b - 1;; s -= 2) {
      blocks.push_back(s);
      if (s == b - a + 1) break;
    }
  } else {
    for (std::size_t i = 0; i < a + b - p; ++i) blocks.push_back(p);
    if (b < p) {
      for (std::size_t s = 2 * p - a - b - 1;; s -= 2) {
        blocks.push_back(s);
        if (s == b - a + 1) break;
      }
    }
  }
  return make_jordan_type(std::move(blocks));
}

JordanType cyclic_tensor_shape(std::size_t m, std::uint32_t p) {
  if (m < 2) throw InvalidArgument("factor dimension must be >= 2");
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  std::uint64_t mp = 1;
  for (std::uint32_t i = 0; i < p; ++i) mp *= m;
  std::vector<std::size_t> blocks(m, 1);
  blocks.insert(blocks.end(), (mp - m) / p, p);
  return make_jordan_type(std::move(blocks));
}

Matrix tensor_shift_matrix(std::size_t m, std::size_t t, std::uint32_t p) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < t; ++i) dim *= m;
  // Basis index sum i_j m^(t-1-j) (first factor most significant).
  std::vector<std::uint32_t> perm(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t last = x % m;
    perm[x] = static_cast<std::uint32_t>(last * (dim / m) + x / m);
  }
  return Matrix::permutation(Field::make(p), perm);
}

Rational kappa_bound(std::uint64_t m, std::uint64_t p) {
  if (m < 2) throw InvalidArgument("m must be >= 2");
  std::int64_t mp1 = 1;
  for (std::uint64_t i = 0; i + 1 < p; ++i) mp1 *= static_cast<std::int64_t>(m);
  const auto pp = static_cast<std::int64_t>(p);
  return Rational::of(1, pp) + Rational::of(pp - 1, pp * mp1);
}

Rational fixed_ratio(const JordanType& j) {
  return Rational::of(static_cast<std::int64_t>(j.blocks.size()), static_cast<std::int64_t>(j.dim()));
}

}  // namespace pexc
