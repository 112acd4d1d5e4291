#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pexc/matrix_group.hpp"
#include "pexc/perm_group.hpp"

namespace pexc {

// ---------------------------------------------------------------------------
// Small building blocks

/// GL_n(q) on its natural module: elementary transvections plus diag(mu,1,...).
MatGroup general_linear(std::size_t n, const Field& f);
MatGroup special_linear(std::size_t n, const Field& f);
/// The group generated by the scalar matrices of GF(q)^*.
SemiMatrix scalar_generator(const Field& f, std::size_t n);
/// Multiplication by a primitive element of GF(p^d), as a d x d matrix over GF(p).
Matrix singer_cycle(std::uint32_t p, unsigned d);
/// Permutation module: e_i -> e_{h(i)}.
MatGroup permutation_module(const PermGroup& h, const Field& f);
/// S/(S cap T) with S the zero-sum vectors and T the constants.
MatGroup deleted_permutation_module(const PermGroup& h, const Field& f);
/// The dual module: generators g -> g^{-T}.  Linear groups only.
MatGroup dual_module(const MatGroup& g);
/// g joined with the scalars of GF(q)^* (a generator is added only when q > 2).
MatGroup with_scalars(const MatGroup& g);
/// u (x) w -> w (x) u on GF(q)^m (x) GF(q)^m.
Matrix swap_matrix(const Field& f, std::size_t m);

// ---------------------------------------------------------------------------
// Semilinear groups of dimension one

struct GammaL1Spec {
  std::uint32_t p = 2;
  unsigned d = 1;   // dimension over GF(p)
  unsigned s = 1;   // d / s must be a positive power of p
  std::uint64_t j = 1;  // divides p^s - 1
  bool include_full_frobenius = false;
};
/// <omega^((p^s-1)/j), phi^s> on GF(p^d), written over GF(p).
MatGroup gamma_l1(const GammaL1Spec& spec);
/// Valid (s, j) pairs for given p, d.
std::vector<GammaL1Spec> gamma_l1_specs(std::uint32_t p, unsigned d);

// ---------------------------------------------------------------------------
// Wreath products and tensor products

/// inner wr top on V_1^n.  The inner generators act on the first block of
/// each top orbit; the top permutes blocks.  When the inner group is transitive
/// on nonzero vectors and post_check is set, every orbit size is compared with
/// |V_1^#|^k * delta (k the support size, delta the top orbit of the support);
/// a mismatch throws.
MatGroup wreath(const MatGroup& inner, const PermGroup& top, bool post_check = true, const Limits& lim = {});
/// Orbit-by-orbit check of the wreath orbit formula; returns false on the first mismatch.
bool check_wreath_orbit_formula(const MatGroup& w, const MatGroup& inner, const PermGroup& top,
                                const Limits& lim = {});

/// Generators a (x) I, I (x) b, and the swap when requested.
MatGroup tensor_product_group(const MatGroup& a, const MatGroup& b, bool with_swap);

/// (GL_1(q^2) o GL_1(q^2)).2 on GF(q)^2 (x) GF(q)^2, q even.
MatGroup c4_pair_group(std::uint32_t q);
/// The two invariant 2-dimensional subspaces U_1, U_2 of c4_pair_group(q), as
/// echelon bases (spanned by 1(x)1 + w(x)w and 1(x)w + w(x)1).
std::pair<Matrix, Matrix> c4_pair_invariant_subspaces(std::uint32_t q);

struct TensorWeight {
  std::size_t k = 0;
  Matrix u0;  // basis of the least U_0 with v in U_0 (x) W
  Matrix w0;  // basis of the least W_0 with v in U (x) W_0
};
/// Rank of the dimU x dimW coefficient matrix of v (basis u_i (x) w_j, i-major).
TensorWeight tensor_weight(const Field& f, const Vec& v, std::size_t dim_u, std::size_t dim_w);

/// 7^2.S3 (variant "7^2.S3") or (7.3)^2.2 (variant "(7.3)^2.2") in GL_9(2).
MatGroup singer_tensor_group(const std::string& variant);

/// Diagonal torus of GL_2(q), optionally extended by the Frobenius map.
MatGroup torus_group(std::uint32_t q, bool with_frobenius);

/// SL_2(5) inside SL_2(9), found by a seeded search, joined with the GF(9)
/// scalars of the given order (1, 2, 4 or 8; orders 1 and 2 add nothing since
/// -I already lies in SL_2(5)), written over GF(3).
MatGroup sl2_5_in_gl4_3(std::uint32_t scalar_order, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Extraspecial groups

enum class ExtraspecialVariant { OddExponentR, Sym4Circ, Plus, Minus };

struct ExtraspecialSpec {
  std::uint32_t r = 2;
  unsigned m = 1;
  ExtraspecialVariant variant = ExtraspecialVariant::Plus;
  std::uint32_t q = 3;
};

/// R with generators X_1, Z_1, ..., X_m, Z_m (and i*I for 4 o 2^{1+2m}).
/// The element attached to v in GF(r)^{2m} (coordinates x_1, z_1, ...) is
/// X_1^{x_1} Z_1^{z_1} ... X_m^{x_m} Z_m^{z_m}.
struct Extraspecial {
  ExtraspecialSpec spec;
  MatGroup group;
  std::vector<Matrix> basis;  // X_1, Z_1, ..., X_m, Z_m
  Field rfield;               // GF(r)

  Matrix element(const Vec& v) const;
  /// B(u,v) in GF(r): [e(u), e(v)] = zeta^B(u,v), zeta the commutator [X_1, Z_1].
  std::vector<Vec> commutator_form() const;
  /// Quadratic form for r = 2: e(v)^2 = (-1)^Q(v).  Indexed by vec_index.
  std::vector<std::uint32_t> quadratic_form() const;
};
Extraspecial extraspecial(const ExtraspecialSpec& spec);

/// g with g X_i = images_i g for all generators X_i of R; NoLift when every
/// solution is singular.  Images must lie in R times scalars.
Matrix lift_outer(const Extraspecial& R, const std::vector<Matrix>& images);
/// Lift of an isometry A of R/Z(R) (acting on row vectors of GF(r)^{2m}).
Matrix lift_isometry(const Extraspecial& R, const Matrix& a);

/// All isometries of the form on R/Z(R) (quadratic form when r = 2), optionally
/// fixing a vector.  Enumerated by backtracking; order of output is deterministic.
std::vector<Matrix> isometry_group(const Extraspecial& R, std::optional<Vec> fixed = std::nullopt);
/// Greedy generating set of the subgroup of GL over GF(r) formed by `elements`
/// (elements assumed closed); picks elements in order.
std::vector<Matrix> generating_subset(const std::vector<Matrix>& elements);

/// R extended by lifts of the named top group.  Supported tops:
///  plus, m=3 over GF(3):  "L3(2)", "2^3.L3(2)", "2^3.7.3";
///  minus, m=3 over GF(3): "2^4.A5", "2^4.S5";  minus, m=2 over GF(3): "A4", "S4";
///  odd r=3, m=1 over GF(4): "2", "6", "S3a", "S3b", "D12";  any: "none".
MatGroup extraspecial_normalizer_subgroup(const ExtraspecialSpec& spec, const std::string& top);

}  // namespace pexc
