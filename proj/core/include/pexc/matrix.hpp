#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pexc/field.hpp"

namespace pexc {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.  Group elements act on row
/// vectors from the right: v -> v*M.
class Matrix {
 public:
  static constexpr std::size_t kMaxDim = 4096;

  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix scalar(const Field& f, std::size_t n, Elem c);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);
  /// Permutation matrix with e_i * P = e_{perm[i]}.
  static Matrix permutation(const Field& f, const std::vector<std::uint32_t>& perm);

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Elem operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  void set(std::size_t i, std::size_t j, Elem x);
  const Elem* row_ptr(std::size_t i) const { return d_.data() + i * c_; }
  Vec row(std::size_t i) const { return Vec(row_ptr(i), row_ptr(i) + c_); }
  const std::vector<Elem>& data() const { return d_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  Matrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.f_ == b.f_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.d_ < b.d_; }

 private:
  Field f_;
  std::size_t r_, c_;
  std::vector<Elem> d_;
};

/// v * M.
Vec vec_mul(const Vec& v, const Matrix& m);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Vec& a, Elem c);
bool vec_is_zero(const Vec& v);

/// Index sum x_i q^i of a vector and its inverse.
std::uint64_t vec_index(const Field& f, const Vec& v);
Vec vec_from_index(const Field& f, std::uint64_t idx, std::size_t n);

/// Reduced row echelon form in place; returns pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis (rows, in reduced echelon form) of {v : v*M = 0}.  A 0 x rows matrix
/// when the kernel is trivial.
Matrix kernel(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);
Matrix power(const Matrix& m, std::int64_t k);
/// Order of an invertible matrix, or 0 if it exceeds `limit`.
std::uint64_t element_order(const Matrix& m, std::uint64_t limit = 1u << 20);

/// (u (x) w)(A (x) B) = uA (x) wB with basis u_i (x) w_j ordered i-major.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Entrywise x -> x^(p^e).
Matrix frobenius_entries(const Matrix& m, unsigned e);
/// Matrix over GF(p) of x -> x^(p^e) on GF(p^a) in the basis 1, x, ..., x^(a-1).
Matrix frobenius_matrix(const Field& f, unsigned e);
/// Regular representation of a single element over the prime field.
Matrix regular_rep(const Field& f, Elem x);
/// Replace every entry by its a x a regular-representation block.
Matrix blowup(const Matrix& m);
/// The GF(p)-matrix of v -> phi^e(v) * M, phi the Frobenius map.
Matrix blowup_semilinear(const Matrix& m, unsigned e);

/// J_k: upper unitriangular Jordan block over f.
Matrix jordan_block(const Field& f, std::size_t k);

struct JordanType {
  std::vector<std::size_t> blocks;  // descending
  friend bool operator==(const JordanType& a, const JordanType& b) { return a.blocks == b.blocks; }
  std::size_t dim() const;
};
JordanType make_jordan_type(std::vector<std::size_t> blocks);

/// Throws NonUnipotent unless (g - I)^dim = 0.
JordanType jordan_type_unipotent(const Matrix& g);

/// Incrementally maintained echelon basis of a subspace.
class EchelonBasis {
 public:
  EchelonBasis(Field f, std::size_t n) : f_(std::move(f)), n_(n) {}
  /// Reduce v against the basis.
  Vec reduce(Vec v) const;
  /// Adds v if independent; returns whether it was added.
  bool add(const Vec& v);
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }
  /// Fully reduced basis as a matrix (rows sorted by pivot).
  Matrix matrix() const;

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;          // each normalized so pivot entry is 1
  std::vector<std::size_t> piv_;
};

}  // namespace pexc
