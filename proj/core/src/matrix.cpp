#include "pexc/matrix.hpp"

#include <algorithm>
#include <string>

#include "pexc/errors.hpp"

namespace pexc {

namespace {

void check_dims(std::size_t r, std::size_t c) {
  if (r > Matrix::kMaxDim || c > Matrix::kMaxDim) {
    throw DimensionTooLarge("matrix dimension " + std::to_string(std::max(r, c)) + " exceeds " +
                            std::to_string(Matrix::kMaxDim));
  }
}

void same_field(const Field& a, const Field& b) {
  if (a != b) throw FieldMismatch("operands over different fields: " + a.describe() + " vs " + b.describe());
}

// Row operation dst += c * src over columns [from, n).
void axpy(const Field& f, Elem* dst, const Elem* src, Elem c, std::size_t from, std::size_t n) {
  if (c == 0) return;
  if (f.characteristic() == 2 && c == 1) {
    for (std::size_t j = from; j < n; ++j) dst[j] ^= src[j];
    return;
  }
  for (std::size_t j = from; j < n; ++j) {
    if (src[j]) dst[j] = f.add(dst[j], f.mul(c, src[j]));
  }
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols) {
  check_dims(rows, cols);
  d_.assign(rows * cols, 0);
}

Matrix Matrix::identity(const Field& f, std::size_t n) { return scalar(f, n, 1); }

Matrix Matrix::scalar(const Field& f, std::size_t n, Elem c) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.d_[i * n + i] = c;
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::permutation(const Field& f, const std::vector<std::uint32_t>& perm) {
  Matrix m(f, perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.d_[i * perm.size() + perm[i]] = 1;
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Elem x) {
  if (!f_.valid(x)) throw InvalidArgument("invalid field element " + std::to_string(x));
  d_[i * c_ + j] = x;
}

Matrix Matrix::operator*(const Matrix& o) const {
  same_field(f_, o.f_);
  if (c_ != o.r_) throw ShapeMismatch("product of incompatible shapes");
  Matrix out(f_, r_, o.c_);
  if (f_.is_prime() && f_.characteristic() != 2) {
    const std::uint64_t p = f_.characteristic();
    std::vector<std::uint64_t> acc(o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < c_; ++k) {
        const std::uint64_t a = d_[i * c_ + k];
        if (!a) continue;
        const Elem* orow = o.row_ptr(k);
        for (std::size_t j = 0; j < o.c_; ++j) acc[j] += a * orow[j];
        if (k % 1024 == 1023) for (auto& x : acc) x %= p;
      }
      for (std::size_t j = 0; j < o.c_; ++j) out.d_[i * o.c_ + j] = static_cast<Elem>(acc[j] % p);
    }
    return out;
  }
  for (std::size_t i = 0; i < r_; ++i) {
    Elem* dst = out.d_.data() + i * o.c_;
    for (std::size_t k = 0; k < c_; ++k) axpy(f_, dst, o.row_ptr(k), d_[i * c_ + k], 0, o.c_);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  same_field(f_, o.f_);
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("sum of different shapes");
  Matrix out(*this);
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = f_.add(d_[i], o.d_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  same_field(f_, o.f_);
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("difference of different shapes");
  Matrix out(*this);
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = f_.sub(d_[i], o.d_[i]);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out(*this);
  for (auto& x : out.d_) x = f_.mul(x, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out.d_[j * r_ + i] = d_[i * c_ + j];
  return out;
}

bool Matrix::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (d_[i * c_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](Elem x) { return x == 0; });
}

Vec vec_mul(const Vec& v, const Matrix& m) {
  if (v.size() != m.rows()) throw ShapeMismatch("vector length does not match matrix rows");
  Vec out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) axpy(m.field(), out.data(), m.row_ptr(i), v[i], 0, m.cols());
  return out;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, const Vec& a, Elem c) {
  Vec out(a);
  for (auto& x : out) x = f.mul(x, c);
  return out;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

std::uint64_t vec_index(const Field& f, const Vec& v) {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * f.order() + v[i];
  return idx;
}

Vec vec_from_index(const Field& f, std::uint64_t idx, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Elem>(idx % f.order());
    idx /= f.order();
  }
  return v;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  const Field& f = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<Elem> d = m.data();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && d[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(d[piv * C + j], d[r * C + j]);
    const Elem inv = f.inv(d[r * C + c]);
    if (inv != 1)
      for (std::size_t j = c; j < C; ++j) d[r * C + j] = f.mul(d[r * C + j], inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || d[i * C + c] == 0) continue;
      axpy(f, d.data() + i * C, d.data() + r * C, f.neg(d[i * C + c]), c, C);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(f, R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (d[i * C + j]) out.set(i, j, d[i * C + j]);
  m = std::move(out);
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix t(m);
  return row_reduce(t).size();
}

Matrix kernel(const Matrix& m) {
  // Row reduce [M | I]; rows whose M-part vanishes span the left kernel.
  const Field& f = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  Matrix aug(f, R, C + R);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug.set(i, j, m(i, j));
    aug.set(i, C + i, 1);
  }
  const auto piv = row_reduce(aug);
  std::size_t first = 0;
  while (first < piv.size() && piv[first] < C) ++first;
  std::vector<Vec> rows;
  for (std::size_t i = first; i < R; ++i) {
    Vec v(R);
    for (std::size_t j = 0; j < R; ++j) v[j] = aug(i, C + j);
    rows.push_back(std::move(v));
  }
  Matrix k(f, rows.size(), R);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < R; ++j) k.set(i, j, rows[i][j]);
  row_reduce(k);
  return k;
}

bool is_invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw ShapeMismatch("inverse of non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  const auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, aug(i, n + j));
  return out;
}

Matrix power(const Matrix& m, std::int64_t k) {
  if (!m.square()) throw ShapeMismatch("power of non-square matrix");
  Matrix base = k < 0 ? inverse(m) : m;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Matrix r = Matrix::identity(m.field(), m.rows());
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::uint64_t element_order(const Matrix& m, std::uint64_t limit) {
  if (!is_invertible(m)) throw SingularMatrix("order of a singular matrix");
  Matrix x = m;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = x * m;
  }
  return 0;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  same_field(a.field(), b.field());
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, f.mul(x, b(k, l)));
    }
  return out;
}

Matrix frobenius_entries(const Matrix& m, unsigned e) {
  const Field& f = m.field();
  e %= f.degree();
  if (e == 0) return m;
  Matrix out(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, f.frobenius(m(i, j), e));
  return out;
}

Matrix frobenius_matrix(const Field& f, unsigned e) {
  const Field fp = f.prime_field();
  const unsigned a = f.degree();
  Matrix out(fp, a, a);
  Elem basis = 1;
  for (unsigned i = 0; i < a; ++i) {
    const auto dg = f.digits(f.frobenius(basis, e));
    for (unsigned j = 0; j < a; ++j) out.set(i, j, dg[j]);
    basis *= f.characteristic();
  }
  return out;
}

Matrix regular_rep(const Field& f, Elem x) {
  const Field fp = f.prime_field();
  const unsigned a = f.degree();
  Matrix out(fp, a, a);
  Elem basis = 1;
  for (unsigned i = 0; i < a; ++i) {
    const auto dg = f.digits(f.mul(basis, x));
    for (unsigned j = 0; j < a; ++j) out.set(i, j, dg[j]);
    basis *= f.characteristic();
  }
  return out;
}

Matrix blowup(const Matrix& m) {
  const Field& f = m.field();
  if (f.is_prime()) return m;
  const unsigned a = f.degree();
  Matrix out(f.prime_field(), m.rows() * a, m.cols() * a);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Elem x = m(i, j);
      if (!x) continue;
      const Matrix blk = regular_rep(f, x);
      for (unsigned k = 0; k < a; ++k)
        for (unsigned l = 0; l < a; ++l) out.set(i * a + k, j * a + l, blk(k, l));
    }
  return out;
}

Matrix blowup_semilinear(const Matrix& m, unsigned e) {
  const Field& f = m.field();
  e %= f.degree();
  const Matrix lin = blowup(m);
  if (e == 0) return lin;
  const unsigned a = f.degree();
  const Matrix fr = frobenius_matrix(f, e);
  Matrix blk(f.prime_field(), m.rows() * a, m.rows() * a);
  for (std::size_t b = 0; b < m.rows(); ++b)
    for (unsigned k = 0; k < a; ++k)
      for (unsigned l = 0; l < a; ++l) blk.set(b * a + k, b * a + l, fr(k, l));
  return blk * lin;
}

Matrix jordan_block(const Field& f, std::size_t k) {
  Matrix j = Matrix::identity(f, k);
  for (std::size_t i = 0; i + 1 < k; ++i) j.set(i, i + 1, 1);
  return j;
}

std::size_t JordanType::dim() const {
  std::size_t s = 0;
  for (auto b : blocks) s += b;
  return s;
}

JordanType make_jordan_type(std::vector<std::size_t> blocks) {
  std::sort(blocks.begin(), blocks.end(), std::greater<>());
  return JordanType{std::move(blocks)};
}

JordanType jordan_type_unipotent(const Matrix& g) {
  if (!g.square()) throw ShapeMismatch("Jordan type of non-square matrix");
  const std::size_t n = g.rows();
  const Matrix nil = g - Matrix::identity(g.field(), n);
  // r[k] = rank of (g - I)^k.
  std::vector<std::size_t> r{n};
  Matrix x = Matrix::identity(g.field(), n);
  while (r.back() != 0) {
    if (r.size() > n) throw NonUnipotent();
    x = x * nil;
    const std::size_t rk = rank(x);
    if (rk == r.back()) throw NonUnipotent();
    r.push_back(rk);
  }
  r.push_back(0);
  std::vector<std::size_t> blocks;
  // Blocks of size >= k number r[k-1] - r[k].
  for (std::size_t k = 1; k + 1 < r.size(); ++k) {
    const std::size_t exact = (r[k - 1] - r[k]) - (r[k] - r[k + 1]);
    for (std::size_t i = 0; i < exact; ++i) blocks.push_back(k);
  }
  return make_jordan_type(std::move(blocks));
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = v[piv_[i]];
    if (c) axpy(f_, v.data(), rows_[i].data(), f_.neg(c), piv_[i], n_);
  }
  return v;
}

bool EchelonBasis::add(const Vec& v) {
  if (v.size() != n_) throw ShapeMismatch("vector length does not match ambient dimension");
  Vec w = reduce(v);
  std::size_t p = 0;
  while (p < n_ && w[p] == 0) ++p;
  if (p == n_) return false;
  const Elem inv = f_.inv(w[p]);
  for (auto& x : w) x = f_.mul(x, inv);
  rows_.push_back(std::move(w));
  piv_.push_back(p);
  return true;
}

Matrix EchelonBasis::matrix() const {
  Matrix m(f_, rows_.size(), n_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set(i, j, rows_[i][j]);
  row_reduce(m);
  return m;
}

}  // namespace pexc
