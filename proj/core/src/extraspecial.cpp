#include <functional>
#include <set>

#include "pexc/constructions.hpp"
#include "pexc/errors.hpp"

namespace pexc {

namespace {

Matrix place(const Matrix& m, std::size_t before, std::size_t after) {
  const Field& f = m.field();
  return kronecker(kronecker(Matrix::identity(f, before), m), Matrix::identity(f, after));
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Closure of a set of invertible matrices under multiplication.
std::set<Matrix> closure(const std::vector<Matrix>& gens, std::size_t cap) {
  std::set<Matrix> seen;
  std::vector<Matrix> queue;
  const Matrix id = Matrix::identity(gens.at(0).field(), gens[0].rows());
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Matrix x = queue[i] * g;
      if (seen.insert(x).second) {
        if (seen.size() > cap) throw GroupTooLarge("matrix closure exceeds cap");
        queue.push_back(std::move(x));
      }
    }
  return seen;
}

}  // namespace

Matrix Extraspecial::element(const Vec& v) const {
  const Field& f = basis.at(0).field();
  Matrix e = Matrix::identity(f, basis[0].rows());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i]) e = e * power(basis[i], v[i]);
  return e;
}

std::vector<Vec> Extraspecial::commutator_form() const {
  const Field& f = basis.at(0).field();
  const std::size_t n = basis.size();
  auto comm = [&](const Matrix& a, const Matrix& b) { return (inverse(a) * inverse(b) * a * b)(0, 0); };
  const Elem z0 = comm(basis[0], basis[1]);
  std::vector<Vec> out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Elem c = comm(basis[i], basis[j]);
      Elem k = 0, x = 1;
      while (x != c) {
        x = f.mul(x, z0);
        if (++k > spec.r) throw InvalidArgument("commutator is not a power of [X1, Z1]");
      }
      out[i][j] = k;
    }
  return out;
}

std::vector<std::uint32_t> Extraspecial::quadratic_form() const {
  if (spec.r != 2 || spec.variant == ExtraspecialVariant::Sym4Circ)
    throw InvalidArgument("quadratic form needs R = 2^{1+2m}_+-");
  const Field& f = basis.at(0).field();
  const std::size_t n = basis.size(), d = basis[0].rows();
  const Matrix id = Matrix::identity(f, d), minus = Matrix::scalar(f, d, f.neg(1));
  std::vector<std::uint32_t> q(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < q.size(); ++idx) {
    const Matrix e = element(vec_from_index(rfield, idx, n));
    const Matrix sq = e * e;
    if (sq == id) q[idx] = 0;
    else if (sq == minus) q[idx] = 1;
    else throw InvalidArgument("element square is not +-1");
  }
  return q;
}

Extraspecial extraspecial(const ExtraspecialSpec& spec) {
  const Field f = Field::of_order(spec.q);
  const std::uint32_t r = spec.r;
  if (!is_prime(r) || spec.m == 0) throw InvalidArgument("need r prime and m >= 1");
  if (spec.q % r == 0) throw InvalidArgument("r must not divide q");
  std::vector<Matrix> basis;
  std::vector<Matrix> extra;
  std::uint64_t expected = ipow(r, 1 + 2 * spec.m);
  if (r != 2) {
    if (spec.variant != ExtraspecialVariant::OddExponentR) throw InvalidArgument("odd r needs the odd_exponent_r variant");
    if ((spec.q - 1) % r != 0) throw InvalidArgument("need q = 1 mod r");
    const Elem zeta = f.pow(f.primitive(), (spec.q - 1) / r);
    Matrix x(f, r, r), z(f, r, r);
    for (std::uint32_t i = 0; i < r; ++i) {
      x.set(i, (i + 1) % r, 1);
      z.set(i, i, f.pow(zeta, i));
    }
    for (unsigned k = 0; k < spec.m; ++k) {
      basis.push_back(place(x, ipow(r, k), ipow(r, spec.m - k - 1)));
      basis.push_back(place(z, ipow(r, k), ipow(r, spec.m - k - 1)));
    }
  } else {
    if (spec.q % 2 == 0) throw InvalidArgument("2^{1+2m} needs q odd");
    if (spec.variant == ExtraspecialVariant::OddExponentR) throw InvalidArgument("r = 2 needs plus, minus or sym_4circ");
    if (spec.variant == ExtraspecialVariant::Sym4Circ && spec.q % 4 != 1) throw InvalidArgument("4 o 2^{1+2m} needs q = 1 mod 4");
    const Elem m1 = f.neg(1);
    const Matrix dx = Matrix::from_rows(f, {{0, 1}, {1, 0}});
    const Matrix dz = Matrix::from_rows(f, {{1, 0}, {0, m1}});
    // Quaternion pair [[0,1],[-1,0]], [[a,b],[b,-a]] with a^2 + b^2 = -1.
    Elem qa = 0, qb = 0;
    bool found = false;
    for (Elem a = 0; a < f.order() && !found; ++a)
      for (Elem b = 0; b < f.order() && !found; ++b)
        if (f.add(f.mul(a, a), f.mul(b, b)) == m1) {
          qa = a;
          qb = b;
          found = true;
        }
    const Matrix qx = Matrix::from_rows(f, {{0, 1}, {m1, 0}});
    const Matrix qz = Matrix::from_rows(f, {{qa, qb}, {qb, f.neg(qa)}});
    for (unsigned k = 0; k < spec.m; ++k) {
      const bool quat = spec.variant == ExtraspecialVariant::Minus && k == 0;
      basis.push_back(place(quat ? qx : dx, ipow(2, k), ipow(2, spec.m - k - 1)));
      basis.push_back(place(quat ? qz : dz, ipow(2, k), ipow(2, spec.m - k - 1)));
    }
    if (spec.variant == ExtraspecialVariant::Sym4Circ) {
      const Elem i = f.pow(f.primitive(), (spec.q - 1) / 4);
      extra.push_back(Matrix::scalar(f, ipow(2, spec.m), i));
      expected *= 2;
    }
  }
  std::vector<Matrix> gens = basis;
  gens.insert(gens.end(), extra.begin(), extra.end());
  std::string name = std::to_string(r) + "^{1+" + std::to_string(2 * spec.m) + "}";
  if (spec.variant == ExtraspecialVariant::Plus) name += "_+";
  if (spec.variant == ExtraspecialVariant::Minus) name += "_-";
  if (spec.variant == ExtraspecialVariant::Sym4Circ) name = "4o" + name;
  MatGroup g(f, basis[0].rows(), gens, name);
  const std::uint64_t ord = group_order(g);
  if (ord != expected)
    throw InvalidArgument(name + " has order " + std::to_string(ord) + ", expected " + std::to_string(expected));
  return Extraspecial{spec, std::move(g), std::move(basis), Field::make(r)};
}

Matrix lift_outer(const Extraspecial& R, const std::vector<Matrix>& images) {
  const auto& gens = R.group.generators();
  if (images.size() != gens.size()) throw InvalidArgument("one image per generator of R required");
  const Field& f = R.group.field();
  const std::size_t d = R.group.dim();
  // Images must lie in R times scalars.
  std::vector<Matrix> rg;
  for (const auto& g : gens) rg.push_back(g.mat);
  const auto elems = closure(rg, 1u << 12);
  for (std::size_t i = 0; i < images.size(); ++i) {
    bool ok = false;
    for (Elem c = 1; c < f.order() && !ok; ++c) ok = elems.count(images[i].scaled(c)) > 0;
    if (!ok) throw InvalidArgument("image " + std::to_string(i) + " is not in R times scalars");
  }
  // Row (a,b) is E_ab X_i - Y_i E_ab for every generator, side by side.
  const std::size_t k = gens.size();
  Matrix sys(f, d * d, k * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t row = a * d + b;
      for (std::size_t i = 0; i < k; ++i) {
        const Matrix& x = gens[i].mat;
        const Matrix& y = images[i];
        const std::size_t off = i * d * d;
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t e = 0; e < d; ++e) {
            Elem v = c == a ? x(b, e) : 0;
            if (e == b) v = f.sub(v, y(c, a));
            if (v) sys.set(row, off + c * d + e, v);
          }
      }
    }
  const Matrix sol = kernel(sys);
  for (std::size_t s = 0; s < sol.rows(); ++s) {
    Matrix g(f, d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) g.set(a, b, sol(s, a * d + b));
    if (is_invertible(g)) return g;
  }
  throw NoLift("no invertible solution of g X = Y g");
}

Matrix lift_isometry(const Extraspecial& R, const Matrix& a) {
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < R.basis.size(); ++i) images.push_back(R.element(a.row(i)));
  for (std::size_t i = R.basis.size(); i < R.group.generators().size(); ++i) images.push_back(R.group.generators()[i].mat);
  return lift_outer(R, images);
}

std::vector<Matrix> isometry_group(const Extraspecial& R, std::optional<Vec> fixed) {
  const Field& fr = R.rfield;
  const std::uint32_t r = R.spec.r;
  const std::size_t n = R.basis.size();
  const auto B = R.commutator_form();
  const bool quad = r == 2 && R.spec.variant != ExtraspecialVariant::Sym4Circ;
  const auto Q = quad ? R.quadratic_form() : std::vector<std::uint32_t>{};
  const std::uint64_t N = ipow(r, static_cast<unsigned>(n));
  std::vector<Vec> vecs(N);
  for (std::uint64_t i = 0; i < N; ++i) vecs[i] = vec_from_index(fr, i, n);
  auto form = [&](const Vec& u, const Vec& v) {
    Elem s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (u[i])
        for (std::size_t j = 0; j < n; ++j)
          if (v[j]) s = fr.add(s, fr.mul(fr.mul(u[i], v[j]), B[i][j]));
    return s;
  };
  std::vector<Matrix> out;
  std::vector<std::uint64_t> img(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<Vec> rows;
      for (auto x : img) rows.push_back(vecs[x]);
      Matrix a = Matrix::from_rows(fr, rows);
      if (fixed && vec_mul(*fixed, a) != *fixed) return;
      out.push_back(std::move(a));
      return;
    }
    Vec ei(n, 0);
    ei[i] = 1;
    for (std::uint64_t c = 1; c < N; ++c) {
      if (quad && Q[c] != Q[vec_index(fr, ei)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = form(vecs[c], vecs[img[j]]) == B[i][j] && form(vecs[img[j]], vecs[c]) == B[j][i];
      }
      if (!ok) continue;
      img[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Matrix> generating_subset(const std::vector<Matrix>& elements) {
  std::vector<Matrix> gens;
  std::set<Matrix> h;
  for (const auto& x : elements) {
    if (x.is_identity() || h.count(x)) continue;
    gens.push_back(x);
    h = closure(gens, 1u << 22);
  }
  return gens;
}

namespace {

// (x | z) -> (xA | z A^-T) in interleaved coordinates x1, z1, x2, z2, ...
Matrix split_block(const Matrix& a) {
  const std::size_t m = a.rows();
  const Matrix ait = inverse(a).transpose();
  Matrix out(a.field(), 2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      out.set(2 * i, 2 * j, a(i, j));
      out.set(2 * i + 1, 2 * j + 1, ait(i, j));
    }
  return out;
}

// (x | z) -> (x + zC | z).
Matrix split_lower(const Matrix& c) {
  const std::size_t m = c.rows();
  Matrix out = Matrix::identity(c.field(), 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(2 * i + 1, 2 * j, c(i, j));
  return out;
}

bool is_isometry(const Extraspecial& R, const Matrix& a) {
  const auto Q = R.quadratic_form();
  for (std::size_t idx = 0; idx < Q.size(); ++idx) {
    const Vec v = vec_from_index(R.rfield, idx, a.rows());
    if (Q[vec_index(R.rfield, vec_mul(v, a))] != Q[idx]) return false;
  }
  return true;
}

std::uint64_t odd_part_order(const Matrix& a) { return element_order(a, 1u << 16); }

// An L3(2) complement to 2^3 in 2^3:L3(2) < O+_6(2) that leaves no complement
// of E = <x-coordinates> invariant, i.e. the complement class other than
// diag(A, A^-T).  Candidates <c1 b(s), c2 b(t)> are tried in a fixed order.
std::vector<Matrix> nonsplit_l32_complement() {
  const Field f2 = Field::make(2);
  const Matrix s = split_block(singer_cycle(2, 3));
  Matrix tr = Matrix::identity(f2, 3);
  tr.set(0, 1, 1);
  const Matrix t = split_block(tr);
  std::vector<Matrix> lowers;
  for (unsigned bits = 0; bits < 8; ++bits) {
    Matrix c(f2, 3, 3);
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (unsigned k = 0; k < 3; ++k)
      if (bits >> k & 1) {
        c.set(pairs[k][0], pairs[k][1], 1);
        c.set(pairs[k][1], pairs[k][0], 1);
      }
    lowers.push_back(split_lower(c));
  }
  // Complements of E: graphs {(zM | z)} of maps M from z-space to x-space.
  auto stabilizes_complement = [&](const std::vector<Matrix>& gens) {
    for (unsigned bits = 0; bits < 512; ++bits) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < 3; ++i) {
        Vec v(6, 0);
        v[2 * i + 1] = 1;
        for (std::size_t j = 0; j < 3; ++j) v[2 * j] = bits >> (3 * i + j) & 1;
        rows.push_back(v);
      }
      EchelonBasis w(f2, 6);
      for (const auto& r : rows) w.add(r);
      bool inv = true;
      for (const auto& g : gens)
        for (const auto& r : rows) inv = inv && w.contains(vec_mul(r, g));
      if (inv) return true;
    }
    return false;
  };
  for (const auto& c1 : lowers)
    for (const auto& c2 : lowers) {
      const std::vector<Matrix> gens{c1 * s, c2 * t};
      if (closure(gens, 2000).size() != 168) continue;
      if (!stabilizes_complement(gens)) return gens;
    }
  throw InvalidArgument("no second class of L3(2) complements found");
}

}  // namespace

MatGroup extraspecial_normalizer_subgroup(const ExtraspecialSpec& spec, const std::string& top) {
  const Extraspecial R = extraspecial(spec);
  std::vector<SemiMatrix> gens = R.group.generators();
  std::vector<SemiMatrix> extra;
  const Field f2 = Field::make(2);
  const std::string name = R.group.label() + "." + top;
  auto lift = [&](const Matrix& a) {
    if (R.spec.r == 2 && !is_isometry(R, a)) throw InvalidArgument("outer element does not preserve the form");
    extra.emplace_back(lift_isometry(R, a));
  };
  auto from_list = [&](const std::vector<Matrix>& elems) {
    for (const auto& a : generating_subset(elems)) lift(a);
  };

  if (top == "none") {
  } else if (spec.r == 2 && spec.variant == ExtraspecialVariant::Plus && spec.m == 3 &&
             (top == "L3(2)" || top == "2^3.L3(2)" || top == "2^3.7.3")) {
    const Matrix s = singer_cycle(2, 3);
    Matrix c(f2, 3, 3);
    c.set(0, 1, 1);
    c.set(1, 0, 1);
    if (top == "L3(2)") {
      for (const auto& a : nonsplit_l32_complement()) lift(a);
    } else if (top == "2^3.7.3") {
      lift(split_block(s));
      lift(split_block(frobenius_matrix(Field::make(2, 3), 1)));
      lift(split_lower(c));
    } else {
      Matrix tr = Matrix::identity(f2, 3);
      tr.set(0, 1, 1);
      lift(split_block(s));
      lift(split_block(tr));
      lift(split_lower(c));
    }
  } else if (spec.r == 2 && spec.variant == ExtraspecialVariant::Minus &&
             ((spec.m == 3 && (top == "2^4.A5" || top == "2^4.S5")) || (spec.m == 2 && (top == "A4" || top == "S4")))) {
    // Stabilizer of the least nonzero singular vector of R/Z(R).
    const auto Q = R.quadratic_form();
    std::size_t v0 = 1;
    while (Q[v0] != 0) ++v0;
    const auto stab = isometry_group(R, vec_from_index(R.rfield, v0, R.basis.size()));
    if (top == "2^4.S5" || top == "S4") {
      from_list(stab);
    } else {
      std::vector<Matrix> odd;
      for (const auto& a : stab)
        if (odd_part_order(a) % 2 == 1) odd.push_back(a);
      from_list(odd);
    }
  } else if (spec.r == 3 && spec.m == 1 && spec.q == 4 &&
             (top == "2" || top == "6" || top == "S3a" || top == "S3b" || top == "D12")) {
    const Field f3 = Field::make(3);
    const Matrix minus = Matrix::scalar(f3, 2, 2);
    const Matrix t = Matrix::from_rows(f3, {{1, 1}, {0, 1}});
    const SemiMatrix frob(Matrix::identity(R.group.field(), 3), 1);
    const SemiMatrix lm(lift_isometry(R, minus));
    const SemiMatrix lt(lift_isometry(R, t));
    if (top == "2") extra = {lm};
    if (top == "6") extra = {lm, lt};
    if (top == "S3a") extra = {lt, frob};
    if (top == "S3b") extra = {lt, compose(frob, lm)};
    if (top == "D12") extra = {lm, lt, frob};
  } else {
    throw InvalidArgument("unsupported top group '" + top + "' for " + R.group.label());
  }
  gens.insert(gens.end(), extra.begin(), extra.end());
  return MatGroup(R.group.field(), R.group.dim(), gens, name);
}

}  // namespace pexc
