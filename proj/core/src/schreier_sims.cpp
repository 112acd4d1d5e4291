#include "pexc/schreier_sims.hpp"

#include <numeric>

#include "pexc/errors.hpp"

namespace pexc {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

bool perm_is_valid(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (auto x : a) {
    if (x >= a.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& gens, std::vector<std::uint32_t> priority)
    : n_(degree), priority_(std::move(priority)) {
  if (priority_.empty()) priority_ = perm_identity(n_);
  for (const auto& g : gens) {
    if (g.size() != n_ || !perm_is_valid(g)) throw InvalidArgument("generator is not a permutation of the domain");
    auto s = sift(g, 0);
    if (!perm_is_identity(s.residue)) add_strong(s.residue, 0, s.level);
  }
}

std::uint32_t StabChain::choose_base(const Perm& h) const {
  for (auto x : priority_)
    if (h[x] != x) return x;
  throw InvalidArgument("identity has no moved point");
}

StabChain::Sifted StabChain::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    std::uint32_t y = g[L.base];
    if (L.label[y] == -1) return {std::move(g), l};
    while (y != L.base) {
      const auto k = static_cast<std::size_t>(L.label[y]);
      g = perm_mul(g, L.inv[k]);
      y = L.inv[k][y];
    }
  }
  return {std::move(g), levels_.size()};
}

Perm StabChain::transversal(std::size_t k, std::uint32_t x) const {
  const Level& L = levels_[k];
  std::vector<std::size_t> word;
  while (x != L.base) {
    const auto s = static_cast<std::size_t>(L.label[x]);
    word.push_back(s);
    x = L.inv[s][x];
  }
  Perm u = perm_identity(n_);
  for (std::size_t i = word.size(); i-- > 0;) u = perm_mul(u, L.gens[word[i]]);
  return u;
}

void StabChain::add_strong(const Perm& h, std::size_t lo, std::size_t hi) {
  if (hi == levels_.size()) {
    Level L;
    L.base = choose_base(h);
    L.label.assign(n_, -1);
    L.label[L.base] = -2;
    L.orbit.push_back(L.base);
    levels_.push_back(std::move(L));
  }
  for (std::size_t k = hi + 1; k-- > lo;) add_to_level(k, h);
}

void StabChain::add_to_level(std::size_t k, const Perm& h) {
  const std::size_t old_size = levels_[k].orbit.size();
  const std::size_t gi = levels_[k].gens.size();
  levels_[k].gens.push_back(h);
  levels_[k].inv.push_back(perm_inverse(h));
  {
    Level& L = levels_[k];
    for (std::size_t i = 0; i < L.orbit.size(); ++i) {
      const std::uint32_t x = L.orbit[i];
      const std::size_t first_gen = i < old_size ? gi : 0;
      for (std::size_t s = first_gen; s < L.gens.size(); ++s) {
        const std::uint32_t y = L.gens[s][x];
        if (L.label[y] == -1) {
          L.label[y] = static_cast<std::int32_t>(s);
          L.orbit.push_back(y);
        }
      }
    }
  }
  // Schreier generators u_x s u_{xs}^-1 not yet tested: old points with the
  // new generator, new points with every generator.
  const std::size_t orbit_size = levels_[k].orbit.size();
  for (std::size_t i = 0; i < orbit_size; ++i) {
    const std::uint32_t x = levels_[k].orbit[i];
    const Perm u = transversal(k, x);
    const std::size_t first_gen = i < old_size ? gi : 0;
    const std::size_t ngens = levels_[k].gens.size();
    for (std::size_t s = first_gen; s < ngens; ++s) {
      auto r = sift(perm_mul(u, levels_[k].gens[s]), k);
      if (!perm_is_identity(r.residue)) add_strong(r.residue, k + 1, r.level);
    }
  }
}

std::uint64_t StabChain::order() const {
  unsigned __int128 o = 1;
  for (const auto& L : levels_) {
    o *= L.orbit.size();
    if (o > ~std::uint64_t{0}) throw GroupTooLarge("group order exceeds 2^64");
  }
  return static_cast<std::uint64_t>(o);
}

std::vector<std::uint32_t> StabChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<std::size_t> StabChain::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& L : levels_) out.push_back(L.orbit.size());
  return out;
}

bool StabChain::contains(const Perm& g) const {
  if (g.size() != n_) return false;
  return perm_is_identity(sift(g, 0).residue);
}

}  // namespace pexc
