#include <cmath>

#include "doctest.h"
#include "pexc/errors.hpp"
#include "pexc/jordan.hpp"
#include "support.hpp"

using namespace pexc;

namespace {

oracle::Mat block(int k) {
  oracle::Mat m = oracle::identity(k);
  for (int i = 0; i + 1 < k; ++i) m[i][i + 1] = 1;
  return m;
}

oracle::Mat kron(const oracle::Mat& a, const oracle::Mat& b, int p) {
  const std::size_t n = a.size(), m = b.size();
  oracle::Mat out(n * m, std::vector<int>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l] % p;
  return out;
}

std::vector<std::size_t> to_sizes(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("tensor of two Jordan blocks") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::size_t b = 1; b <= p; ++b)
      for (std::size_t a = 1; a <= b; ++a) {
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        const auto want = oracle::unipotent_jordan(kron(block(int(a)), block(int(b)), int(p)), int(p));
        const auto got = jordan_tensor(a, b, p);
        CHECK(got.blocks == to_sizes(want));
        CHECK(jordan_tensor(b, a, p) == got);
        CHECK(got.dim() == a * b);
      }
}

TEST_CASE("tensor of Jordan blocks, small examples") {
  CHECK(jordan_tensor(2, 2, 3).blocks == std::vector<std::size_t>{3, 1});
  CHECK(jordan_tensor(2, 2, 2).blocks == std::vector<std::size_t>{2, 2});
  CHECK(jordan_tensor(3, 5, 7).blocks == std::vector<std::size_t>{7, 5, 3});
  CHECK(jordan_tensor(4, 5, 5).blocks == std::vector<std::size_t>{5, 5, 5, 5});
  CHECK_THROWS_AS(jordan_tensor(2, 6, 5), UnsupportedRange);
}

TEST_CASE("cyclic shift of tensor factors") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t m = 2; m <= 3; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      const Matrix s = tensor_shift_matrix(m, p, p);
      CHECK(s.rows() == static_cast<std::size_t>(std::pow(m, p)));
      const auto want = oracle::unipotent_jordan(support::to_oracle(s), int(p));
      const auto shape = cyclic_tensor_shape(m, p);
      CHECK(shape.blocks == to_sizes(want));
      CHECK(jordan_type_unipotent(s) == shape);
      CHECK(fixed_ratio(shape) == kappa_bound(m, p));
    }
}

TEST_CASE("kappa bound") {
  CHECK(kappa_bound(2, 2) == Rational::of(3, 4));
  CHECK(kappa_bound(2, 2).str() == "3/4");
  CHECK(kappa_bound(3, 3) == Rational::of(11, 27));
  CHECK(Rational::of(2, 4) == Rational::of(1, 2));
  CHECK(Rational::of(1, 3) + Rational::of(1, 6) == Rational::of(1, 2));
  CHECK(Rational::of(1, 3) <= Rational::of(1, 2));
}
