#include <random>

#include "pexc/errors.hpp"
#include "pexc/matrix_group.hpp"

namespace pexc {

Matrix spin(const MatGroup& g, const Vec& v) {
  if (v.size() != g.dim()) throw ShapeMismatch("vector length does not match group dimension");
  EchelonBasis eb(g.field(), g.dim());
  std::vector<Vec> queue;
  if (eb.add(v)) queue.push_back(v);
  for (std::size_t h = 0; h < queue.size() && eb.dim() < g.dim(); ++h) {
    for (const auto& s : g.generators()) {
      Vec w = image_of(queue[h], s);
      if (eb.add(w)) queue.push_back(std::move(w));
    }
  }
  return eb.matrix();
}

bool is_irreducible(const MatGroup& g, const Limits& lim) {
  const auto& part = g.orbits(lim);
  for (std::size_t i = 1; i < part.representatives.size(); ++i) {
    const Vec v = vec_from_index(g.field(), part.representatives[i], g.dim());
    if (spin(g, v).rows() < g.dim()) return false;
  }
  return true;
}

namespace {

// Echelon basis with the pivot columns it was reduced on.
struct Subspace {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

Subspace echelon(const Matrix& basis) {
  Matrix b(basis);
  auto piv = row_reduce(b);
  Matrix trimmed(b.field(), piv.size(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) trimmed.set(i, j, b(i, j));
  return {std::move(trimmed), std::move(piv)};
}

// Coordinates of w in the echelon basis; throws if w is outside the span.
Vec coordinates(const Subspace& s, const Vec& w) {
  const Field& f = s.basis.field();
  Vec c(s.pivots.size());
  Vec rest(w);
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    c[i] = w[s.pivots[i]];
    if (c[i])
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = f.sub(rest[j], f.mul(c[i], s.basis(i, j)));
  }
  if (!vec_is_zero(rest)) throw InvalidArgument("subspace is not invariant under the group");
  return c;
}

Vec reduce_mod(const Subspace& s, Vec w) {
  const Field& f = s.basis.field();
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    const Elem c = w[s.pivots[i]];
    if (c)
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, s.basis(i, j)));
  }
  return w;
}

}  // namespace

MatGroup restrict_to(const MatGroup& g, const Matrix& basis, std::string label) {
  const Subspace s = echelon(basis);
  const std::size_t k = s.pivots.size();
  if (k == 0) throw InvalidArgument("cannot restrict to the zero subspace");
  std::vector<SemiMatrix> gens;
  for (const auto& x : g.generators()) {
    Matrix a(g.field(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const Vec c = coordinates(s, image_of(s.basis.row(i), x));
      for (std::size_t j = 0; j < k; ++j) a.set(i, j, c[j]);
    }
    gens.emplace_back(std::move(a), x.frob);
  }
  return MatGroup(g.field(), k, std::move(gens), std::move(label));
}

MatGroup quotient_by(const MatGroup& g, const Matrix& basis, std::string label) {
  const Subspace s = echelon(basis);
  const std::size_t d = g.dim();
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0, i = 0; j < d; ++j) {
    if (i < s.pivots.size() && s.pivots[i] == j) {
      ++i;
      continue;
    }
    free_cols.push_back(j);
  }
  const std::size_t k = free_cols.size();
  if (k == 0) throw InvalidArgument("quotient by the whole space");
  // Invariance check on the subspace itself.
  for (const auto& x : g.generators())
    for (std::size_t i = 0; i < s.pivots.size(); ++i) coordinates(s, image_of(s.basis.row(i), x));
  std::vector<SemiMatrix> gens;
  for (const auto& x : g.generators()) {
    Matrix a(g.field(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
      Vec e(d, 0);
      e[free_cols[i]] = 1;
      const Vec w = reduce_mod(s, image_of(e, x));
      for (std::size_t j = 0; j < k; ++j) a.set(i, j, w[free_cols[j]]);
    }
    gens.emplace_back(std::move(a), x.frob);
  }
  return MatGroup(g.field(), k, std::move(gens), std::move(label));
}

SplitResult split_constituent(const MatGroup& g, const Limits& lim, unsigned max_tries) {
  if (!g.is_linear()) throw InvalidArgument("meataxe needs a linear group; blow up semilinear groups first");
  const Field& f = g.field();
  const std::size_t d = g.dim();
  SplitResult res{true, Matrix(f, 0, d), std::nullopt, std::nullopt, false};
  auto finish = [&](const Matrix& w) {
    res.irreducible = false;
    res.basis = w;
    res.sub = restrict_to(g, w, g.label().empty() ? "" : g.label() + ".sub");
    res.quot = quotient_by(g, w, g.label().empty() ? "" : g.label() + ".quot");
    return res;
  };
  if (d == 1) return res;

  std::mt19937_64 rng(lim.seed);
  const auto& gens = g.generators();
  std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
  std::uniform_int_distribution<unsigned> pick_len(1, 8);
  std::uniform_int_distribution<Elem> pick_coef(0, f.order() - 1);
  for (unsigned t = 0; t < max_tries; ++t) {
    // theta: a random combination of three random words.
    Matrix theta(f, d, d);
    for (int term = 0; term < 3; ++term) {
      Matrix w = Matrix::identity(f, d);
      const unsigned len = pick_len(rng);
      for (unsigned i = 0; i < len; ++i) w = w * gens[pick_gen(rng)].mat;
      Elem c = pick_coef(rng);
      if (c == 0) c = 1;
      theta = theta + w.scaled(c);
    }
    const Matrix k = kernel(theta);
    if (k.rows() == 0 || k.rows() == d) continue;
    const std::size_t tries = std::min<std::size_t>(k.rows(), 64);
    for (std::size_t i = 0; i < tries; ++i) {
      const Matrix w = spin(g, k.row(i));
      if (w.rows() < d) return finish(w);
    }
  }
  // Exhaustive fallback: spin one vector from every orbit.
  res.found_by_fallback = true;
  const auto& part = g.orbits(lim);
  for (std::size_t i = 1; i < part.representatives.size(); ++i) {
    const Matrix w = spin(g, vec_from_index(f, part.representatives[i], d));
    if (w.rows() < d) return finish(w);
  }
  return res;
}

}  // namespace pexc
