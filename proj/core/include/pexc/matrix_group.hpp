#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pexc/semilinear.hpp"

namespace pexc {

/// Resource caps and the seed shared by every randomized step.
struct Limits {
  std::uint64_t max_vectors = std::uint64_t{1} << 22;
  std::uint64_t max_elements = 1000000;
  std::uint64_t seed = 0;
};

struct OrbitPartition {
  std::map<std::uint64_t, std::uint64_t> sizes;  // orbit size -> multiplicity
  std::vector<std::uint64_t> representatives;    // least index of each orbit, ascending
  std::vector<std::uint64_t> rep_sizes;          // parallel to representatives
  std::uint64_t total = 0;

  std::uint64_t num_orbits() const { return representatives.size(); }
  /// Multiset of the sizes of orbits on nonzero vectors.
  std::map<std::uint64_t, std::uint64_t> nonzero_sizes() const;
};

enum class PexcStatus { P_EXCEPTIONAL, ORDER_NOT_DIVISIBLE_BY_P, BAD_ORBIT };
const char* to_string(PexcStatus s);

struct PexcVerdict {
  PexcStatus status = PexcStatus::P_EXCEPTIONAL;
  std::uint32_t p = 0;
  std::uint64_t order = 0;
  std::optional<std::uint64_t> witness;       // orbit representative (vector index)
  std::optional<std::uint64_t> witness_size;
  bool ok() const { return status == PexcStatus::P_EXCEPTIONAL; }
};

/// A finite group of (semi)linear maps on GF(q)^d, given by generators.
///
/// Copies share one cache of derived artifacts (orbit partition, order); the
/// cache is filled at most once per artifact and guarded for concurrent use.
class MatGroup {
 public:
  static constexpr std::size_t kMaxPrimeDim = 256;

  MatGroup(Field f, std::size_t dim, std::vector<SemiMatrix> gens, std::string label = "");
  MatGroup(Field f, std::size_t dim, const std::vector<Matrix>& gens, std::string label = "");

  const Field& field() const { return f_; }
  std::size_t dim() const { return d_; }
  const std::vector<SemiMatrix>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  bool is_linear() const;
  /// Dimension over the prime field.
  std::size_t prime_dim() const { return d_ * f_.degree(); }
  /// Generators as matrices over GF(p).
  const std::vector<Matrix>& prime_generators() const;
  /// The same group written over GF(p).
  MatGroup blown_up() const;

  MatGroup with_label(std::string label) const;
  /// Group generated by these generators together with `extra`.
  MatGroup extended(const std::vector<SemiMatrix>& extra, std::string label = "") const;

  /// Cached artifacts (see the free functions below).
  const OrbitPartition& orbits(const Limits& lim = {}) const;
  std::uint64_t order(const Limits& lim = {}) const;

 private:
  struct Cache;
  Field f_;
  std::size_t d_;
  std::vector<SemiMatrix> gens_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

/// Exact orbits on all q^d vectors.  Throws SpaceTooLarge above max_vectors.
OrbitPartition orbit_partition(const MatGroup& g, const Limits& lim = {});
/// Orbit of one vector index, sorted.
std::vector<std::uint64_t> orbit_of(const MatGroup& g, std::uint64_t v, const Limits& lim = {});
/// Order from a stabilizer chain on the faithful action on vectors.
std::uint64_t group_order(const MatGroup& g, const Limits& lim = {});

/// Membership of GF(p) matrices in the blown-up group, via a stabilizer chain.
bool contains_all(const MatGroup& g, const std::vector<Matrix>& xs, const Limits& lim = {});
/// k <= g and k is normalized by the generators of g.
bool is_normal_subgroup(const MatGroup& k, const MatGroup& g, const Limits& lim = {});

/// Evaluated on the GF(p) blow-up of g; p must be the field characteristic.
PexcVerdict is_p_exceptional(const MatGroup& g, std::uint32_t p, const Limits& lim = {});
bool is_half_transitive(const MatGroup& g, const Limits& lim = {});
bool is_transitive_nonzero(const MatGroup& g, const Limits& lim = {});
/// Every nonzero vector has trivial stabilizer.
bool is_semiregular(const MatGroup& g, const Limits& lim = {});

/// Least invariant subspace containing v, as an echelon basis.
Matrix spin(const MatGroup& g, const Vec& v);
bool is_irreducible(const MatGroup& g, const Limits& lim = {});

/// Action on an invariant subspace (rows of `basis`, echelon form) and on the
/// quotient by it.  Throws InvalidArgument if the subspace is not invariant.
MatGroup restrict_to(const MatGroup& g, const Matrix& basis, std::string label = "");
MatGroup quotient_by(const MatGroup& g, const Matrix& basis, std::string label = "");

struct SplitResult {
  bool irreducible = true;
  Matrix basis;  // invariant subspace found (empty when irreducible)
  std::optional<MatGroup> sub;
  std::optional<MatGroup> quot;
  bool found_by_fallback = false;
};
/// One meataxe step on a linear group.  Seeded by lim.seed.
SplitResult split_constituent(const MatGroup& g, const Limits& lim = {}, unsigned max_tries = 200);

/// Group elements as GF(p) matrices, in breadth-first order from the
/// identity.  Throws GroupTooLarge above max_elements.
std::vector<Matrix> enumerate_elements(const MatGroup& g, const Limits& lim = {});
/// O^{p'}(G): the subgroup generated by elements of p-power order, over GF(p).
MatGroup p_residual(const MatGroup& g, std::uint32_t p, const Limits& lim = {});
/// Some element of order exactly p (GF(p) matrix), found by seeded random
/// products; nullopt if none is found.
std::optional<Matrix> find_element_of_order(const MatGroup& g, std::uint32_t p, const Limits& lim = {},
                                            unsigned tries = 4000);
/// Whether the fixed spaces of the conjugates of t cover the space.  t is a
/// GF(p) matrix in the blown-up group.
bool verify_fixed_point_cover(const MatGroup& g, std::uint32_t p, const Matrix& t, const Limits& lim = {});

}  // namespace pexc
