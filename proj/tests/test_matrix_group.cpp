#include <random>

#include "doctest.h"
#include "pexc/constructions.hpp"
#include "pexc/errors.hpp"
#include "pexc/io.hpp"
#include "support.hpp"

using namespace pexc;

namespace {

std::map<std::uint64_t, std::uint64_t> oracle_orbits(const MatGroup& g) {
  const auto elems = oracle::closure(support::to_oracle(g.prime_generators()), static_cast<int>(g.field().characteristic()));
  REQUIRE(!elems.empty());
  return oracle::orbit_sizes(elems, static_cast<int>(g.prime_dim()), static_cast<int>(g.field().characteristic()));
}

std::uint64_t oracle_order(const MatGroup& g) {
  const auto elems = oracle::closure(support::to_oracle(g.prime_generators()), static_cast<int>(g.field().characteristic()));
  REQUIRE(!elems.empty());
  return elems.size();
}

MatGroup random_group(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, f.order() - 1);
  std::vector<Matrix> gens;
  while (gens.size() < k) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
    if (is_invertible(m)) gens.push_back(m);
  }
  return MatGroup(f, n, gens);
}

bool invariant(const MatGroup& g, const Matrix& basis) {
  EchelonBasis w(g.field(), g.dim());
  for (std::size_t i = 0; i < basis.rows(); ++i) w.add(basis.row(i));
  for (const auto& s : g.generators())
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (!w.contains(image_of(basis.row(i), s))) return false;
  return true;
}

PermGroup m11_12() { return load_perm_file(support::data_dir() / "perm" / "M11_12.json").group; }

}  // namespace

TEST_CASE("orbit partition examples") {
  const Field f3 = Field::make(3);
  const MatGroup triv(f3, 2, std::vector<Matrix>{Matrix::identity(f3, 2)});
  CHECK(triv.orbits().sizes == std::map<std::uint64_t, std::uint64_t>{{1, 9}});
  CHECK(triv.order() == 1);

  const MatGroup sl23 = special_linear(2, f3);
  CHECK(sl23.orbits().sizes == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {8, 1}});
  CHECK(sl23.order() == 24);
  // Representatives are the least index of each orbit.
  CHECK(sl23.orbits().representatives == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("orbits and orders agree with element enumeration") {
  std::vector<MatGroup> groups{
      general_linear(2, Field::make(3)),
      general_linear(3, Field::make(2)),
      special_linear(2, Field::of_order(4)).blown_up(),
      deleted_permutation_module(alternating_group(5), Field::make(2)),
      deleted_permutation_module(symmetric_group(6), Field::make(3)),
      c4_pair_group(2).blown_up(),
      torus_group(4, true).blown_up(),
      singer_tensor_group("7^2.S3"),
      gamma_l1({2, 4, 2, 1, false}),
      sl2_5_in_gl4_3(1),
  };
  std::mt19937_64 rng(19);
  for (int t = 0; t < 6; ++t) groups.push_back(random_group(Field::make(t % 2 ? 2 : 3), t % 2 ? 4 : 3, 1 + t % 2, rng));
  for (const auto& g : groups) {
    CAPTURE(g.label());
    const auto n = oracle_order(g);
    CHECK(g.order() == n);
    CHECK(enumerate_elements(g).size() == n);
    CHECK(g.orbits().sizes == oracle_orbits(g));
    std::uint64_t sum = 0;
    for (auto [s, m] : g.orbits().sizes) {
      sum += s * m;
      CHECK(g.order() % s == 0);
    }
    CHECK(sum == g.orbits().total);
  }
  CHECK(sl2_5_in_gl4_3(1).order() == 120);
}

TEST_CASE("p-exceptional verdicts") {
  const Field f2 = Field::make(2);
  const auto v = is_p_exceptional(general_linear(2, f2), 2);
  CHECK(v.status == PexcStatus::P_EXCEPTIONAL);

  const MatGroup a5 = deleted_permutation_module(alternating_group(5), f2);
  const auto w = is_p_exceptional(a5, 2);
  REQUIRE(w.status == PexcStatus::BAD_ORBIT);
  CHECK(*w.witness_size == 10);
  CHECK(orbit_of(a5, *w.witness).size() == 10);

  // A 2'-group.
  const MatGroup c7(f2, 3, std::vector<Matrix>{singer_cycle(2, 3)});
  CHECK(is_p_exceptional(c7, 2).status == PexcStatus::ORDER_NOT_DIVISIBLE_BY_P);
  CHECK_THROWS_AS(is_p_exceptional(c7, 3), InvalidArgument);
}

TEST_CASE("transitivity predicates") {
  CHECK(is_transitive_nonzero(general_linear(3, Field::make(2))));
  CHECK(is_half_transitive(general_linear(3, Field::make(2))));
  const MatGroup sl25 = sl2_5_in_gl4_3(4);
  CHECK(is_half_transitive(sl25));
  CHECK_FALSE(is_transitive_nonzero(sl25));
  CHECK(sl25.orbits().nonzero_sizes() == std::map<std::uint64_t, std::uint64_t>{{40, 2}});
  const MatGroup a5 = deleted_permutation_module(alternating_group(5), Field::make(2));
  CHECK_FALSE(is_half_transitive(a5));
  const MatGroup c7(Field::make(2), 3, std::vector<Matrix>{singer_cycle(2, 3)});
  CHECK(is_semiregular(c7));
}

TEST_CASE("space cap") {
  Limits lim;
  lim.max_vectors = 100;
  CHECK_THROWS_AS(orbit_partition(general_linear(7, Field::make(2)), lim), SpaceTooLarge);
}

TEST_CASE("spin and irreducibility") {
  const Field f2 = Field::make(2);
  const MatGroup gl3 = general_linear(3, f2);
  CHECK(spin(gl3, Vec{0, 0, 0}).rows() == 0);
  CHECK(spin(gl3, Vec{0, 1, 1}).rows() == 3);

  const MatGroup perm7 = permutation_module(alternating_group(7), f2);
  CHECK(spin(perm7, Vec{1, 1, 0, 0, 0, 0, 0}).rows() == 6);
  CHECK(spin(perm7, Vec{1, 1, 1, 1, 1, 1, 1}).rows() == 1);

  const Field f3 = Field::make(3);
  CHECK_FALSE(is_irreducible(MatGroup(f3, 2, std::vector<Matrix>{Matrix::scalar(f3, 2, 2)})));
  // GL_2(2) acting diagonally on two copies of its natural module.
  std::vector<Matrix> diag;
  const MatGroup gl2 = general_linear(2, f2);
  for (const auto& s : gl2.generators()) {
    Matrix m(f2, 4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        m.set(i, j, s.mat(i, j));
        m.set(i + 2, j + 2, s.mat(i, j));
      }
    diag.push_back(m);
  }
  CHECK_FALSE(is_irreducible(MatGroup(f2, 4, diag)));
  CHECK(is_irreducible(deleted_permutation_module(alternating_group(7), f2)));

  // Spin dimension is constant along orbits.
  const MatGroup a6 = deleted_permutation_module(symmetric_group(6), f3);
  const auto& part = a6.orbits();
  const auto elems = enumerate_elements(a6);
  for (std::size_t i = 0; i < part.representatives.size(); ++i) {
    const Vec v = vec_from_index(f3, part.representatives[i], a6.dim());
    const auto d = spin(a6, v).rows();
    for (std::size_t k = 0; k < elems.size(); k += 97) CHECK(spin(a6, vec_mul(v, elems[k])).rows() == d);
  }
}

TEST_CASE("meataxe step") {
  const Field f2 = Field::make(2), f3 = Field::make(3);
  const auto a7 = split_constituent(deleted_permutation_module(alternating_group(7), f2));
  CHECK(a7.irreducible);

  const MatGroup m23 = deleted_permutation_module(load_perm_file(support::data_dir() / "perm" / "M23.json").group, f2);
  REQUIRE(m23.dim() == 22);
  const auto s = split_constituent(m23);
  REQUIRE_FALSE(s.irreducible);
  CHECK(s.sub->dim() == 11);
  CHECK(s.quot->dim() == 11);
  CHECK(invariant(m23, s.basis));

  const MatGroup m11 = deleted_permutation_module(m11_12(), f3);
  REQUIRE(m11.dim() == 10);
  const auto t = split_constituent(m11);
  REQUIRE_FALSE(t.irreducible);
  CHECK(t.sub->dim() + t.quot->dim() == 10);
  CHECK(t.sub->dim() == 5);
  CHECK(invariant(m11, t.basis));
  CHECK(is_irreducible(*t.sub));
  CHECK(is_irreducible(*t.quot));
}

TEST_CASE("p-residual") {
  const Field f2 = Field::make(2);
  const MatGroup c7(f2, 3, std::vector<Matrix>{singer_cycle(2, 3)});
  CHECK(p_residual(c7, 2).order() == 1);
  const MatGroup s3 = general_linear(2, f2);
  CHECK(p_residual(s3, 3).order() == 3);
  const MatGroup t = torus_group(4, true).blown_up();
  REQUIRE(is_p_exceptional(t, 2).ok());
  CHECK(is_p_exceptional(p_residual(t, 2), 2).ok());
  Limits lim;
  lim.max_elements = 10;
  CHECK_THROWS_AS(p_residual(general_linear(3, f2), 2, lim), GroupTooLarge);
}

TEST_CASE("fixed point cover") {
  const Field f2 = Field::make(2), f3 = Field::make(3);
  const MatGroup gl3 = general_linear(3, f2);
  const auto t = find_element_of_order(gl3, 2);
  REQUIRE(t);
  CHECK(verify_fixed_point_cover(gl3, 2, *t));

  const auto m11 = split_constituent(deleted_permutation_module(m11_12(), f3));
  REQUIRE(m11.sub);
  const auto u = find_element_of_order(*m11.sub, 3);
  REQUIRE(u);
  CHECK(verify_fixed_point_cover(*m11.sub, 3, *u));

  // Every vector of the 10-orbit has an S3 stabilizer.
  const MatGroup a5 = deleted_permutation_module(alternating_group(5), f2);
  const auto x = find_element_of_order(a5, 2);
  REQUIRE(x);
  CHECK(verify_fixed_point_cover(a5, 2, *x));

  Matrix tr = Matrix::identity(f3, 2);
  tr.set(0, 1, 1);
  CHECK_FALSE(verify_fixed_point_cover(MatGroup(f3, 2, std::vector<Matrix>{tr}), 3, tr));
}

TEST_CASE("membership and normality") {
  const Field f3 = Field::make(3);
  const MatGroup gl = general_linear(2, f3), sl = special_linear(2, f3);
  CHECK(is_normal_subgroup(sl, gl));
  Matrix tr = Matrix::identity(f3, 2);
  tr.set(0, 1, 1);
  const MatGroup u(f3, 2, std::vector<Matrix>{tr});
  CHECK(contains_all(gl, {tr}));
  CHECK_FALSE(is_normal_subgroup(u, gl));
  CHECK_FALSE(contains_all(sl, {Matrix::from_rows(f3, {{2, 0}, {0, 1}})}));
}
