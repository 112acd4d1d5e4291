#pragma once

#include "pexc/matrix.hpp"

namespace pexc {

/// A semilinear map v -> phi^frob(v) * mat on GF(q)^n, phi the Frobenius
/// x -> x^p.  frob = 0 is an ordinary linear map.
struct SemiMatrix {
  unsigned frob = 0;
  Matrix mat;

  explicit SemiMatrix(Matrix m, unsigned e = 0);
  const Field& field() const { return mat.field(); }
  std::size_t dim() const { return mat.rows(); }
  bool is_linear() const { return frob == 0; }
  bool is_identity() const { return frob == 0 && mat.is_identity(); }

  friend bool operator==(const SemiMatrix& a, const SemiMatrix& b) {
    return a.frob == b.frob && a.mat == b.mat;
  }
};

/// First a, then b.
SemiMatrix compose(const SemiMatrix& a, const SemiMatrix& b);
SemiMatrix inverse(const SemiMatrix& a);
Vec image_of(const Vec& v, const SemiMatrix& g);
/// The same map written over the prime field.
Matrix prime_matrix(const SemiMatrix& g);

}  // namespace pexc
