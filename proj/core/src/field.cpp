#include "pexc/field.hpp"

#include <algorithm>
#include <sstream>

#include "pexc/errors.hpp"

namespace pexc {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& x, const Poly& y, const Poly& g, std::uint32_t p) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    }
  }
  return poly_mod(std::move(r), g, p);
}

Poly from_code(std::uint64_t code, std::uint32_t p, unsigned len) {
  Poly f(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return f;
}

std::uint64_t to_code(const Poly& f, std::uint32_t p) {
  std::uint64_t c = 0;
  for (std::size_t i = f.size(); i-- > 0;) c = c * p + f[i];
  return c;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, unsigned& a) {
  if (q < 2) return false;
  const auto f = prime_factors(q);
  if (f.size() != 1) return false;
  p = static_cast<std::uint32_t>(f[0]);
  a = 0;
  while (q > 1) {
    q /= p;
    ++a;
  }
  return true;
}

bool is_irreducible_poly(std::uint32_t p, const Poly& poly) {
  if (!is_prime(p) || poly.size() < 2 || poly.back() != 1) return false;
  const unsigned a = static_cast<unsigned>(poly.size() - 1);
  if (a == 1) return true;
  // Trial division by every monic polynomial of degree 1..a/2.
  for (unsigned deg = 1; deg <= a / 2; ++deg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = from_code(code, p, deg);
      g.push_back(1);
      if (poly_mod(poly, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible_poly(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = from_code(code, p, degree);
    f.push_back(1);
    if (is_irreducible_poly(p, f)) return f;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable for prime p
}

Field Field::make(std::uint32_t p, unsigned degree) {
  if (!pexc::is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("field order exceeds 2^16");
  }
  return build(p, least_irreducible_poly(p, degree));
}

Field Field::with_poly(std::uint32_t p, std::vector<std::uint32_t> poly) {
  if (!pexc::is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  for (auto c : poly) {
    if (c >= p) throw InvalidArgument("polynomial coefficient out of range");
  }
  if (!is_irreducible_poly(p, poly)) throw InvalidArgument("reduction polynomial is not monic irreducible");
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < poly.size(); ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("field order exceeds 2^16");
  }
  return build(p, std::move(poly));
}

Field Field::of_order(std::uint32_t q) {
  std::uint32_t p = 0;
  unsigned a = 0;
  if (!prime_power(q, p, a)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return make(p, a);
}

Field Field::build(std::uint32_t p, Poly poly) {
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->a = static_cast<unsigned>(poly.size() - 1);
  t->q = 1;
  for (unsigned i = 0; i < t->a; ++i) t->q *= p;
  t->poly = poly;
  const std::uint32_t q = t->q;

  // Find the least primitive element by testing g^((q-1)/r) != 1.
  const auto factors = prime_factors(q - 1);
  auto powmod = [&](const Poly& base, std::uint64_t k) {
    Poly r{1}, b = base;
    while (k) {
      if (k & 1) r = poly_mulmod(r, b, poly, p);
      b = poly_mulmod(b, b, poly, p);
      k >>= 1;
    }
    return r;
  };
  Poly gen;
  for (std::uint32_t code = 1; code < q; ++code) {
    Poly g = from_code(code, p, t->a);
    trim(g);
    bool ok = true;
    for (auto r : factors) {
      Poly h = powmod(g, (q - 1) / r);
      if (h.size() == 1 && h[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (q == 2) gen = Poly{1};

  t->exp.assign(2 * (q - 1), 0);
  t->log.assign(q, 0);
  Poly cur{1};
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    const auto c = static_cast<Elem>(to_code(cur, p));
    t->exp[i] = c;
    t->exp[i + q - 1] = c;
    t->log[c] = i;
    cur = poly_mulmod(cur, gen, poly, p);
  }

  t->neg.resize(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    Poly d = from_code(x, p, t->a);
    for (auto& c : d) c = (p - c) % p;
    t->neg[x] = static_cast<Elem>(to_code(d, p));
  }
  t->frob.resize(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    if (x == 0) {
      t->frob[x] = 0;
      continue;
    }
    t->frob[x] = t->exp[(std::uint64_t{t->log[x]} * p) % (q - 1)];
  }
  if (q <= 256 && p != 2) {
    t->add.resize(std::size_t{q} * q);
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) {
        std::uint32_t r = 0, mul = 1, xx = x, yy = y;
        for (unsigned i = 0; i < t->a; ++i) {
          r += ((xx % p + yy % p) % p) * mul;
          xx /= p;
          yy /= p;
          mul *= p;
        }
        t->add[std::size_t{x} * q + y] = static_cast<std::uint16_t>(r);
      }
    }
  }
  return Field(std::move(t));
}

Field Field::prime_field() const {
  if (t_->a == 1) return *this;
  return make(t_->p, 1);
}

Elem Field::add(Elem x, Elem y) const {
  if (t_->p == 2) return x ^ y;
  if (t_->a == 1) {
    const Elem s = x + y;
    return s >= t_->p ? s - t_->p : s;
  }
  if (!t_->add.empty()) return t_->add[std::size_t{x} * t_->q + y];
  const std::uint32_t p = t_->p;
  std::uint32_t r = 0, mul = 1;
  for (unsigned i = 0; i < t_->a; ++i) {
    r += ((x % p + y % p) % p) * mul;
    x /= p;
    y /= p;
    mul *= p;
  }
  return r;
}

Elem Field::inv(Elem x) const {
  if (x == 0) throw DivisionByZero();
  const std::uint32_t l = t_->log[x];
  return t_->exp[(t_->q - 1 - l) % (t_->q - 1)];
}

Elem Field::pow(Elem x, std::uint64_t k) const {
  if (k == 0) return 1;
  if (x == 0) return 0;
  return t_->exp[(std::uint64_t{t_->log[x]} * (k % (t_->q - 1))) % (t_->q - 1)];
}

Elem Field::frobenius(Elem x, unsigned times) const {
  times %= t_->a;
  for (unsigned i = 0; i < times; ++i) x = t_->frob[x];
  return x;
}

std::uint32_t Field::log(Elem x) const {
  if (x == 0) throw DivisionByZero();
  return t_->log[x];
}

std::uint64_t Field::multiplicative_order(Elem x) const {
  if (x == 0) throw DivisionByZero();
  std::uint64_t n = t_->q - 1;
  std::uint64_t ord = n;
  for (auto r : prime_factors(n)) {
    while (ord % r == 0 && pow(x, ord / r) == 1) ord /= r;
  }
  return ord;
}

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t p = t_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
  std::vector<std::uint32_t> d(t_->a);
  for (unsigned i = 0; i < t_->a; ++i) {
    d[i] = x % t_->p;
    x /= t_->p;
  }
  return d;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << t_->q << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->poly == b.t_->poly;
}

}  // namespace pexc
