#include "pexc/vector_space.hpp"

#include <string>

#include "pexc/errors.hpp"

namespace pexc {

IndexSpace::IndexSpace(std::uint32_t p, std::size_t n) : p_(p), n_(n) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pow_.push_back(static_cast<std::uint32_t>(s));
    s *= p;
    if (s > (std::uint64_t{1} << 32)) throw SpaceTooLarge("vector space exceeds 2^32 vectors");
  }
  size_ = s;
  if (p != 2) {
    std::uint32_t b = p;
    while (std::uint64_t{b} * p <= 256) b *= p;
    if (b <= 256) {
      chunk_base_ = b;
      chunk_add_.resize(std::size_t{b} * b);
      for (std::uint32_t x = 0; x < b; ++x)
        for (std::uint32_t y = 0; y < b; ++y) {
          std::uint32_t r = 0, m = 1, xx = x, yy = y;
          while (m < b) {
            r += ((xx % p + yy % p) % p) * m;
            xx /= p;
            yy /= p;
            m *= p;
          }
          chunk_add_[std::size_t{x} * b + y] = static_cast<std::uint8_t>(r);
        }
    }
  }
}

std::uint32_t IndexSpace::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t r = 0, m = 1;
  if (chunk_base_) {
    const std::uint32_t B = chunk_base_;
    while (a | b) {
      r += chunk_add_[std::size_t{a % B} * B + b % B] * m;
      a /= B;
      b /= B;
      m *= B;
    }
    return r;
  }
  while (a | b) {
    const std::uint32_t d = a % p_ + b % p_;
    r += (d >= p_ ? d - p_ : d) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

std::uint32_t IndexSpace::scale(std::uint32_t c, std::uint32_t a) const {
  c %= p_;
  if (c == 0) return 0;
  if (c == 1) return a;
  std::uint32_t r = 0, m = 1;
  while (a) {
    r += static_cast<std::uint32_t>((std::uint64_t{a % p_} * c) % p_) * m;
    a /= p_;
    m *= p_;
  }
  return r;
}

std::uint32_t IndexSpace::apply_rows(const std::vector<std::uint32_t>& rows, std::uint32_t v) const {
  std::uint32_t r = 0;
  if (p_ == 2) {
    for (std::size_t j = 0; v; ++j, v >>= 1)
      if (v & 1) r ^= rows[j];
    return r;
  }
  for (std::size_t j = 0; v; ++j) {
    const std::uint32_t d = v % p_;
    v /= p_;
    if (d) r = add(r, scale(d, rows[j]));
  }
  return r;
}

std::vector<std::uint32_t> matrix_rows_to_indices(const Matrix& m) {
  std::vector<std::uint32_t> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    out[i] = static_cast<std::uint32_t>(vec_index(m.field(), m.row(i)));
  return out;
}

Matrix indices_to_matrix(const Field& fp, const std::vector<std::uint32_t>& rows) {
  const std::size_t n = rows.size();
  Matrix m(fp, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec v = vec_from_index(fp, rows[i], n);
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, v[j]);
  }
  return m;
}

VectorAction::VectorAction(const std::vector<Matrix>& gens, std::uint64_t max_vectors)
    : sp_(gens.empty() ? 2 : gens[0].field().characteristic(), gens.empty() ? 0 : gens[0].rows()) {
  if (!gens.empty() && !gens[0].field().is_prime())
    throw InvalidArgument("vector action needs matrices over a prime field");
  if (sp_.size() > max_vectors)
    throw SpaceTooLarge("space has " + std::to_string(sp_.size()) + " vectors, above --max-vectors " +
                        std::to_string(max_vectors));
  const std::uint32_t p = sp_.p();
  const std::size_t n = sp_.dim();
  chunk_digits_ = 1;
  chunk_size_ = p;
  while (std::uint64_t{chunk_size_} * p <= 256) {
    chunk_size_ *= p;
    ++chunk_digits_;
  }
  const std::size_t chunks = n == 0 ? 0 : (n + chunk_digits_ - 1) / chunk_digits_;
  for (const auto& g : gens) {
    if (g.rows() != n || !g.square() || g.field() != gens[0].field())
      throw ShapeMismatch("generators of differing shape or field");
    rows_.push_back(matrix_rows_to_indices(g));
    const auto& r = rows_.back();
    std::vector<std::uint32_t> t(chunks * chunk_size_, 0);
    for (std::size_t c = 0; c < chunks; ++c) {
      for (std::uint32_t x = 1; x < chunk_size_; ++x) {
        // Peel the lowest nonzero digit of x.
        std::uint32_t y = x, j = 0;
        while (y % p == 0) {
          y /= p;
          ++j;
        }
        const std::size_t pos = c * chunk_digits_ + j;
        std::uint32_t pw = 1;
        for (std::uint32_t i = 0; i < j; ++i) pw *= p;
        const std::uint32_t rest = x - pw;
        const std::uint32_t img = pos < n ? r[pos] : 0;
        t[c * chunk_size_ + x] = sp_.add(t[c * chunk_size_ + rest], img);
      }
    }
    table_.push_back(std::move(t));
  }
}

std::uint32_t VectorAction::apply(std::size_t g, std::uint32_t v) const {
  const auto* t = table_[g].data();
  std::uint32_t r = 0;
  if (sp_.p() == 2) {
    for (std::size_t c = 0; v; ++c, v >>= 8) r ^= t[c * 256 + (v & 255)];
    return r;
  }
  for (std::size_t c = 0; v; ++c) {
    r = sp_.add(r, t[c * chunk_size_ + v % chunk_size_]);
    v /= chunk_size_;
  }
  return r;
}

}  // namespace pexc
