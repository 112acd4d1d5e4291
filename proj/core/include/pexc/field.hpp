#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pexc {

/// A field element of GF(p^a), encoded as the integer whose base-p digits are
/// the coefficients of its residue in the polynomial basis 1, x, ..., x^(a-1).
using Elem = std::uint32_t;

/// Arithmetic in GF(p^a) for p^a <= 2^16.
///
/// A Field is an immutable handle: copies share the same lookup tables and are
/// safe to use from several threads at once.  Two handles compare equal when
/// they describe the same prime, degree and reduction polynomial.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// GF(p^a) reduced by the least monic irreducible polynomial of degree a,
  /// where polynomials are ordered by the integer sum c_i p^i of their
  /// non-leading coefficients.
  static Field make(std::uint32_t p, unsigned degree = 1);

  /// GF(p^a) reduced by `poly` (ascending coefficients, monic, length a+1).
  /// Throws InvalidArgument unless p is prime and poly is monic irreducible.
  static Field with_poly(std::uint32_t p, std::vector<std::uint32_t> poly);

  /// The field of order q = p^a with the default polynomial.
  static Field of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return t_->p; }
  unsigned degree() const { return t_->a; }
  std::uint32_t order() const { return t_->q; }
  const std::vector<std::uint32_t>& poly() const { return t_->poly; }
  bool is_prime() const { return t_->a == 1; }
  Field prime_field() const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem neg(Elem x) const { return t_->neg[x]; }
  Elem mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    return t_->exp[t_->log[x] + t_->log[y]];
  }
  /// Throws DivisionByZero on x == 0.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t k) const;
  /// x -> x^(p^times).
  Elem frobenius(Elem x, unsigned times = 1) const;

  /// Generator of the multiplicative group (the least one by encoding).
  Elem primitive() const { return t_->exp[1]; }
  /// primitive()^k.
  Elem exp(std::uint64_t k) const { return t_->exp[k % (t_->q - 1)]; }
  /// Discrete log to base primitive(); x must be nonzero.
  std::uint32_t log(Elem x) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem x) const;

  /// The element of the prime field with value v mod p.
  Elem from_int(std::int64_t v) const;
  /// Base-p digits (polynomial coefficients) of x, length degree().
  std::vector<std::uint32_t> digits(Elem x) const;

  bool valid(Elem x) const { return x < t_->q; }
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  struct Tables {
    std::uint32_t p = 0;
    unsigned a = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> poly;
    std::vector<Elem> exp;             // length 2(q-1)
    std::vector<std::uint32_t> log;    // length q, log[0] unused
    std::vector<Elem> neg;
    std::vector<Elem> frob;            // x -> x^p
    std::vector<std::uint16_t> add;    // q*q table when q <= 256
  };
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  static Field build(std::uint32_t p, std::vector<std::uint32_t> poly);

  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Returns true and sets p, a when q = p^a with p prime.
bool prime_power(std::uint64_t q, std::uint32_t& p, unsigned& a);

/// Polynomial helpers over GF(p), ascending coefficient vectors.
bool is_irreducible_poly(std::uint32_t p, const std::vector<std::uint32_t>& poly);
std::vector<std::uint32_t> least_irreducible_poly(std::uint32_t p, unsigned degree);

}  // namespace pexc
