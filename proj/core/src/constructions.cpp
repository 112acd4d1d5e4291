#include "pexc/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <set>

#include "pexc/errors.hpp"

namespace pexc {

namespace {

Matrix block_diag_at(const Matrix& g, std::size_t blocks, std::size_t at) {
  const std::size_t d = g.rows();
  Matrix m = Matrix::identity(g.field(), d * blocks);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.set(at * d + i, at * d + j, g(i, j));
  return m;
}

std::vector<Matrix> linear_mats(const MatGroup& g) {
  std::vector<Matrix> out;
  for (const auto& s : g.generators()) {
    if (!s.is_linear()) throw InvalidArgument("expected a linear group");
    out.push_back(s.mat);
  }
  return out;
}

}  // namespace

MatGroup special_linear(std::size_t n, const Field& f) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Elem b = 1;
    for (unsigned k = 0; k < f.degree(); ++k, b *= f.characteristic()) {
      Matrix up = Matrix::identity(f, n), down = Matrix::identity(f, n);
      up.set(i, i + 1, b);
      down.set(i + 1, i, b);
      gens.push_back(up);
      gens.push_back(down);
    }
  }
  if (gens.empty()) gens.push_back(Matrix::identity(f, n));
  return MatGroup(f, n, gens, "SL" + std::to_string(n) + "(" + std::to_string(f.order()) + ")");
}

MatGroup general_linear(std::size_t n, const Field& f) {
  auto gens = linear_mats(special_linear(n, f));
  Matrix d = Matrix::identity(f, n);
  d.set(0, 0, f.primitive());
  gens.push_back(d);
  return MatGroup(f, n, gens, "GL" + std::to_string(n) + "(" + std::to_string(f.order()) + ")");
}

SemiMatrix scalar_generator(const Field& f, std::size_t n) { return SemiMatrix(Matrix::scalar(f, n, f.primitive())); }

MatGroup dual_module(const MatGroup& g) {
  if (!g.is_linear()) throw InvalidArgument("dual_module needs a linear group");
  std::vector<Matrix> gens;
  for (const auto& s : g.generators()) gens.push_back(inverse(s.mat).transpose());
  return MatGroup(g.field(), g.dim(), gens, g.label().empty() ? "" : g.label() + "*");
}

MatGroup with_scalars(const MatGroup& g) {
  if (g.field().order() == 2) return g;
  return g.extended({scalar_generator(g.field(), g.dim())}, g.label().empty() ? "" : g.label() + ".Z");
}

Matrix singer_cycle(std::uint32_t p, unsigned d) {
  const Field f = Field::make(p, d);
  return regular_rep(f, f.primitive());
}

MatGroup permutation_module(const PermGroup& h, const Field& f) {
  std::vector<Matrix> gens;
  for (const auto& g : h.generators()) gens.push_back(Matrix::permutation(f, g));
  return MatGroup(f, h.degree(), gens, h.label());
}

MatGroup deleted_permutation_module(const PermGroup& h, const Field& f) {
  const std::size_t c = h.degree();
  if (c < 3) throw InvalidArgument("deleted permutation module needs at least 3 points");
  const MatGroup perm = permutation_module(h, f);
  Matrix ones_col(f, c, 1);
  for (std::size_t i = 0; i < c; ++i) ones_col.set(i, 0, 1);
  const Matrix s = kernel(ones_col);  // zero-sum vectors
  const MatGroup on_s = restrict_to(perm, s);
  const std::string label = "deleted(" + h.label() + ")";
  // S cap T is T exactly when the constant vector sums to zero.
  EchelonBasis eb(f, c);
  for (std::size_t i = 0; i < s.rows(); ++i) eb.add(s.row(i));
  const Vec ones(c, 1);
  if (!eb.contains(ones)) return on_s.with_label(label);
  // Coordinates of the constant vector in the echelon basis of S.
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    std::size_t j = 0;
    while (s(i, j) == 0) ++j;
    piv.push_back(j);
  }
  Matrix t(f, 1, s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) t.set(0, i, ones[piv[i]]);
  return quotient_by(on_s, t, label);
}

Matrix swap_matrix(const Field& f, std::size_t m) {
  std::vector<std::uint32_t> perm(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) perm[i * m + j] = static_cast<std::uint32_t>(j * m + i);
  return Matrix::permutation(f, perm);
}

// ---------------------------------------------------------------------------

MatGroup gamma_l1(const GammaL1Spec& spec) {
  const std::uint32_t p = spec.p;
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (spec.s == 0 || spec.d % spec.s != 0) throw InvalidArgument("s must divide d");
  unsigned e = spec.d / spec.s;
  unsigned k = 0;
  while (e % p == 0) {
    e /= p;
    ++k;
  }
  if (e != 1 || k == 0) throw InvalidArgument("d / s must be a positive power of p");
  std::uint64_t ps = 1;
  for (unsigned i = 0; i < spec.s; ++i) ps *= p;
  if (spec.j == 0 || (ps - 1) % spec.j != 0) throw InvalidArgument("j must divide p^s - 1");
  const Field f = Field::make(p, spec.d);
  std::vector<SemiMatrix> gens;
  gens.emplace_back(Matrix::scalar(f, 1, f.pow(f.primitive(), (ps - 1) / spec.j)));
  gens.emplace_back(Matrix::identity(f, 1), spec.s);
  if (spec.include_full_frobenius) gens.emplace_back(Matrix::identity(f, 1), 1);
  const std::string label = "GammaL1(p=" + std::to_string(p) + ",d=" + std::to_string(spec.d) +
                            ",s=" + std::to_string(spec.s) + ",j=" + std::to_string(spec.j) + ")";
  return MatGroup(f, 1, gens, label).blown_up();
}

std::vector<GammaL1Spec> gamma_l1_specs(std::uint32_t p, unsigned d) {
  std::vector<GammaL1Spec> out;
  for (unsigned s = 1; s <= d; ++s) {
    if (d % s) continue;
    unsigned e = d / s, k = 0;
    while (e % p == 0) {
      e /= p;
      ++k;
    }
    if (e != 1 || k == 0) continue;
    std::uint64_t ps = 1;
    for (unsigned i = 0; i < s; ++i) ps *= p;
    for (std::uint64_t j = 1; j <= ps - 1; ++j)
      if ((ps - 1) % j == 0) out.push_back(GammaL1Spec{p, d, s, j, false});
  }
  return out;
}

// ---------------------------------------------------------------------------

MatGroup wreath(const MatGroup& inner_in, const PermGroup& top, bool post_check, const Limits& lim) {
  const MatGroup inner = inner_in.is_linear() ? inner_in : inner_in.blown_up();
  const Field& f = inner.field();
  const std::size_t d1 = inner.dim(), n = top.degree();
  std::vector<Matrix> gens;
  for (const auto& orb : point_orbits(top))
    for (const auto& g : inner.generators()) gens.push_back(block_diag_at(g.mat, n, orb.front()));
  const Matrix id1 = Matrix::identity(f, d1);
  for (const auto& t : top.generators()) gens.push_back(kronecker(Matrix::permutation(f, t), id1));
  MatGroup w(f, d1 * n, gens, inner.label() + " wr " + top.label());
  if (post_check && is_transitive_nonzero(inner, lim) && !check_wreath_orbit_formula(w, inner, top, lim))
    throw InvalidArgument("wreath product orbit sizes disagree with |V1#|^k * delta");
  return w;
}

bool check_wreath_orbit_formula(const MatGroup& w, const MatGroup& inner, const PermGroup& top, const Limits& lim) {
  const Field& f = w.field();
  const std::size_t d1 = w.dim() / top.degree();
  std::uint64_t v1 = 1;
  for (std::size_t i = 0; i < d1; ++i) v1 *= f.order();
  (void)inner;
  const auto& part = w.orbits(lim);
  for (std::size_t i = 0; i < part.representatives.size(); ++i) {
    const Vec v = vec_from_index(f, part.representatives[i], w.dim());
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < top.degree(); ++b)
      for (std::size_t k = 0; k < d1; ++k)
        if (v[b * d1 + k]) mask |= std::uint64_t{1} << b;
    // Orbit of the support under the top group.
    std::set<std::uint64_t> seen{mask};
    std::vector<std::uint64_t> queue{mask};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& g : top.generators()) {
        std::uint64_t img = 0;
        for (std::size_t b = 0; b < top.degree(); ++b)
          if (queue[h] >> b & 1) img |= std::uint64_t{1} << g[b];
        if (seen.insert(img).second) queue.push_back(img);
      }
    std::uint64_t expected = queue.size();
    for (int k = std::popcount(mask); k > 0; --k) expected *= v1 - 1;
    if (expected != part.rep_sizes[i]) return false;
  }
  return true;
}

MatGroup tensor_product_group(const MatGroup& a, const MatGroup& b, bool with_swap) {
  if (a.field() != b.field()) throw FieldMismatch("tensor factors over different fields");
  if (with_swap && a.dim() != b.dim()) throw ShapeMismatch("swap needs factors of equal dimension");
  const Field& f = a.field();
  const Matrix ia = Matrix::identity(f, a.dim()), ib = Matrix::identity(f, b.dim());
  std::vector<Matrix> gens;
  for (const auto& x : linear_mats(a)) gens.push_back(kronecker(x, ib));
  for (const auto& y : linear_mats(b)) gens.push_back(kronecker(ia, y));
  if (with_swap) gens.push_back(swap_matrix(f, a.dim()));
  return MatGroup(f, a.dim() * b.dim(), gens, a.label() + " (x) " + b.label());
}

namespace {

// lambda with w = [[0,1],[1,lambda]] of order q+1: multiplication by a root
// of x^2 + lambda x + 1 on GF(q^2) = GF(q) + GF(q) w.
Elem c4_lambda(const Field& f) {
  const std::uint32_t q = f.order();
  for (Elem l = 0; l < q; ++l) {
    const Matrix w = Matrix::from_rows(f, {{0, 1}, {1, l}});
    if (element_order(w, 4 * q) == q + 1) return l;
  }
  throw InvalidArgument("no element of order q+1 found");
}

}  // namespace

MatGroup c4_pair_group(std::uint32_t q) {
  if (q < 2 || (q & (q - 1)) != 0) throw InvalidArgument("c4_pair_group needs q a power of 2");
  const Field f = Field::of_order(q);
  const Elem l = c4_lambda(f);
  const Matrix w = Matrix::from_rows(f, {{0, 1}, {1, l}});
  const Matrix tau = Matrix::from_rows(f, {{1, 0}, {l, 1}});
  const Matrix i2 = Matrix::identity(f, 2);
  std::vector<Matrix> gens{kronecker(w, i2), kronecker(i2, w), kronecker(tau, tau)};
  if (q > 2) gens.push_back(Matrix::scalar(f, 4, f.primitive()));
  return MatGroup(f, 4, gens, "c4_pair(q=" + std::to_string(q) + ")");
}

std::pair<Matrix, Matrix> c4_pair_invariant_subspaces(std::uint32_t q) {
  const Field f = Field::of_order(q);
  const Elem l = c4_lambda(f);
  const Matrix w = Matrix::from_rows(f, {{0, 1}, {1, l}});
  const MatGroup x(f, 4, std::vector<Matrix>{kronecker(w, Matrix::identity(f, 2))});
  // Basis u_i (x) u_j, i-major, with u_0 = 1 and u_1 = w.
  const Vec v{1, 0, 0, 1};  // 1(x)1 + w(x)w
  const Vec u{0, 1, 1, 0};  // 1(x)w + w(x)1
  return {spin(x, v), spin(x, u)};
}

TensorWeight tensor_weight(const Field& f, const Vec& v, std::size_t dim_u, std::size_t dim_w) {
  if (v.size() != dim_u * dim_w) throw ShapeMismatch("vector length is not dimU * dimW");
  Matrix c(f, dim_u, dim_w);
  for (std::size_t i = 0; i < dim_u; ++i)
    for (std::size_t j = 0; j < dim_w; ++j) c.set(i, j, v[i * dim_w + j]);
  auto span = [&](Matrix m) {
    const auto piv = row_reduce(m);
    Matrix out(f, piv.size(), m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m(i, j));
    return out;
  };
  TensorWeight tw{0, span(c.transpose()), span(c)};
  tw.k = tw.w0.rows();
  return tw;
}

MatGroup singer_tensor_group(const std::string& variant) {
  const Field f2 = Field::make(2);
  const Matrix s = singer_cycle(2, 3);
  const Matrix t = frobenius_matrix(Field::make(2, 3), 1);
  const Matrix i3 = Matrix::identity(f2, 3);
  std::vector<Matrix> gens{kronecker(s, i3), kronecker(i3, s)};
  if (variant == "7^2.S3") {
    gens.push_back(kronecker(t, inverse(t)));
  } else if (variant == "(7.3)^2.2") {
    gens.push_back(kronecker(t, i3));
    gens.push_back(kronecker(i3, t));
  } else {
    throw InvalidArgument("unknown Singer tensor variant '" + variant + "'");
  }
  gens.push_back(swap_matrix(f2, 3));
  return MatGroup(f2, 9, gens, variant);
}

MatGroup torus_group(std::uint32_t q, bool with_frobenius) {
  const Field f = Field::of_order(q);
  std::vector<SemiMatrix> gens;
  Matrix a = Matrix::identity(f, 2), b = Matrix::identity(f, 2);
  a.set(0, 0, f.primitive());
  b.set(1, 1, f.primitive());
  gens.emplace_back(a);
  gens.emplace_back(b);
  if (with_frobenius) gens.emplace_back(Matrix::identity(f, 2), 1);
  return MatGroup(f, 2, gens, std::string(with_frobenius ? "T.<phi>" : "T") + " in GL2(" + std::to_string(q) + ")");
}

MatGroup sl2_5_in_gl4_3(std::uint32_t scalar_order, std::uint64_t seed) {
  const Field f = Field::make(3, 2);
  if (scalar_order == 0 || 8 % scalar_order != 0) throw InvalidArgument("scalar order must divide 8");
  using M2 = std::array<Elem, 4>;
  auto mul = [&](const M2& x, const M2& y) {
    return M2{f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
              f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
  };
  const M2 id{1, 0, 0, 1};
  const M2 minus_id{f.neg(1), 0, 0, f.neg(1)};
  auto order = [&](const M2& x) {
    M2 y = x;
    for (int k = 1; k <= 100; ++k) {
      if (y == id) return k;
      y = mul(y, x);
    }
    return 0;
  };
  // All of SL_2(9), in ascending entry order.
  std::vector<M2> of5, of4;
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b)
      for (Elem c = 0; c < 9; ++c)
        for (Elem d = 0; d < 9; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) != 1) continue;
          const M2 x{a, b, c, d};
          const int o = order(x);
          if (o == 5) of5.push_back(x);
          if (o == 4) of4.push_back(x);
        }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> p5(0, of5.size() - 1), p4(0, of4.size() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const M2 x = of5[p5(rng)], y = of4[p4(rng)];
    std::set<M2> h{id};
    std::vector<M2> queue{id};
    for (std::size_t i = 0; i < queue.size() && h.size() <= 120; ++i)
      for (const M2& g : {x, y}) {
        const M2 z = mul(queue[i], g);
        if (h.insert(z).second) queue.push_back(z);
      }
    if (h.size() != 120 || !h.count(minus_id)) continue;
    std::vector<SemiMatrix> gens;
    gens.emplace_back(Matrix::from_rows(f, {{x[0], x[1]}, {x[2], x[3]}}));
    gens.emplace_back(Matrix::from_rows(f, {{y[0], y[1]}, {y[2], y[3]}}));
    std::string label = "SL2(5) in GL4(3)";
    if (scalar_order > 2) {
      gens.emplace_back(Matrix::scalar(f, 2, f.exp(8 / scalar_order)));
      label = "SL2(5)." + std::to_string(scalar_order) + " in GL4(3)";
    }
    return MatGroup(f, 2, gens, label).blown_up();
  }
  throw InvalidArgument("no SL2(5) found inside SL2(9)");
}

}  // namespace pexc
