#include "pexc/semilinear.hpp"

#include "pexc/errors.hpp"

namespace pexc {

SemiMatrix::SemiMatrix(Matrix m, unsigned e) : frob(e % m.field().degree()), mat(std::move(m)) {
  if (!mat.square()) throw ShapeMismatch("semilinear map needs a square matrix");
}

// v -> phi^e1(phi^e2... : (phi^{e1}(v) M1) then phi^{e2}(.) M2
//   = phi^{e1+e2}(v) phi^{e2}(M1) M2.
SemiMatrix compose(const SemiMatrix& a, const SemiMatrix& b) {
  return SemiMatrix(frobenius_entries(a.mat, b.frob) * b.mat, a.frob + b.frob);
}

SemiMatrix inverse(const SemiMatrix& a) {
  const unsigned deg = a.field().degree();
  const unsigned back = (deg - a.frob) % deg;
  return SemiMatrix(frobenius_entries(inverse(a.mat), back), back);
}

Vec image_of(const Vec& v, const SemiMatrix& g) {
  if (g.frob == 0) return vec_mul(v, g.mat);
  Vec w(v);
  for (auto& x : w) x = g.field().frobenius(x, g.frob);
  return vec_mul(w, g.mat);
}

Matrix prime_matrix(const SemiMatrix& g) { return blowup_semilinear(g.mat, g.frob); }

}  // namespace pexc
