#pragma once

#include <cstdint>
#include <vector>

namespace pexc {

/// Permutation of {0..n-1} as an image array.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
/// First a, then b.
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);
bool perm_is_valid(const Perm& a);

/// Deterministic Schreier-Sims stabilizer chain with Schreier vectors.
///
/// New base points are taken as the first point of `priority` moved by the
/// element that needs a new level; an empty priority means ascending order.
class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Perm>& gens, std::vector<std::uint32_t> priority = {});

  std::size_t degree() const { return n_; }
  /// Throws GroupTooLarge when the order does not fit in 64 bits.
  std::uint64_t order() const;
  std::vector<std::uint32_t> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;
  bool contains(const Perm& g) const;

 private:
  struct Level {
    std::uint32_t base;
    std::vector<Perm> gens, inv;
    std::vector<std::int32_t> label;  // -1 outside orbit, -2 base point
    std::vector<std::uint32_t> orbit;
  };
  struct Sifted {
    Perm residue;
    std::size_t level;
  };

  Sifted sift(Perm g, std::size_t from) const;
  Perm transversal(std::size_t k, std::uint32_t x) const;
  void add_strong(const Perm& h, std::size_t lo, std::size_t hi);
  void add_to_level(std::size_t k, const Perm& h);
  std::uint32_t choose_base(const Perm& h) const;

  std::size_t n_;
  std::vector<std::uint32_t> priority_;
  std::vector<Level> levels_;
};

}  // namespace pexc
