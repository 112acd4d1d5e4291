#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pexc/schreier_sims.hpp"

namespace pexc {

/// Permutation group on {0..n-1}, n <= 64, given by image-array generators.
class PermGroup {
 public:
  static constexpr std::size_t kMaxDegree = 64;

  PermGroup(std::size_t n, std::vector<Perm> gens, std::string label = "");
  /// From cycles over 0-based points.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& label() const { return label_; }

 private:
  std::size_t n_;
  std::vector<Perm> gens_;
  std::string label_;
};

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);

/// Exact order by Schreier-Sims with base = ascending moved points.
std::uint64_t perm_order(const PermGroup& h);
/// Orbits on points, each sorted, ordered by least point.
std::vector<std::vector<std::uint32_t>> point_orbits(const PermGroup& h);

struct SubsetOrbitReport {
  std::uint32_t p = 0;
  std::uint64_t order = 0;
  std::vector<std::map<std::uint64_t, std::uint64_t>> levels;  // k -> (size -> multiplicity)
  bool concealed = false;
  std::optional<std::uint64_t> witness;  // bitmask of a subset
  std::optional<std::uint64_t> witness_size;
};

/// Orbits on all subsets.  Uses one pass over all 2^n masks when 2^n <=
/// max_subsets, otherwise one pass per level k (each needs C(n,k) <= max_subsets).
/// The witness is the first subset met (ascending mask, or per level ascending
/// colex rank) whose orbit size is divisible by p.
SubsetOrbitReport subset_orbits(const PermGroup& h, std::uint32_t p,
                                std::uint64_t max_subsets = std::uint64_t{1} << 24);

/// Exact C(n,k) (throws InvalidArgument on 64-bit overflow).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// v_p(C(n,k)) as the number of carries adding k and n-k in base p.
unsigned binom_p_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p);
/// The same valuation from the floor sums of Legendre's formula.
unsigned legendre_binom_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// Closed form for A_n (and S_n) being p-concealed: n = a p^s - 1 with s >= 1,
/// 1 <= a <= p-1, (a,s) != (1,1), and p dividing |A_n|.
bool an_concealed_predicate(std::uint64_t n, std::uint64_t p);
/// The definition evaluated through valuations: p | |A_n| and p divides no
/// C(n,k).  Valid because A_n (n >= 3) is transitive on k-subsets for each k.
bool an_concealed_by_valuations(std::uint64_t n, std::uint64_t p);

}  // namespace pexc
