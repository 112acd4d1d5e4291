#include "pexc/perm_group.hpp"

#include <algorithm>
#include <bit>

#include "pexc/errors.hpp"
#include "pexc/field.hpp"

namespace pexc {

PermGroup::PermGroup(std::size_t n, std::vector<Perm> gens, std::string label)
    : n_(n), gens_(std::move(gens)), label_(std::move(label)) {
  if (n_ == 0 || n_ > kMaxDegree) throw InvalidArgument("permutation degree must be in 1..64");
  if (gens_.empty()) gens_.push_back(perm_identity(n_));
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].size() != n_ || !perm_is_valid(gens_[i]))
      throw InvalidArgument("generator " + std::to_string(i) + " is not a permutation of " + std::to_string(n_) +
                            " points");
}

Perm PermGroup::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm p = perm_identity(n);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || used[c[i]]) throw InvalidArgument("bad cycle notation");
      used[c[i]] = true;
      p[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> cyc(n);
    for (std::uint32_t i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(PermGroup::from_cycles(n, {cyc}));
    gens.push_back(PermGroup::from_cycles(n, {{0, 1}}));
  }
  return PermGroup(n, gens, "S" + std::to_string(n));
}

PermGroup alternating_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 3) {
    gens.push_back(PermGroup::from_cycles(n, {{0, 1, 2}}));
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t i = (n % 2 == 0 ? 1 : 0); i < n; ++i) cyc.push_back(i);
    if (cyc.size() >= 2) gens.push_back(PermGroup::from_cycles(n, {cyc}));
  }
  return PermGroup(n, gens, "A" + std::to_string(n));
}

std::uint64_t perm_order(const PermGroup& h) { return StabChain(h.degree(), h.generators()).order(); }

std::vector<std::vector<std::uint32_t>> point_orbits(const PermGroup& h) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(h.degree(), false);
  for (std::uint32_t x = 0; x < h.degree(); ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orb{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : h.generators())
        if (!seen[g[orb[i]]]) {
          seen[g[orb[i]]] = true;
          orb.push_back(g[orb[i]]);
        }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

namespace {

// Image of a subset mask under a permutation, via 8-bit chunk tables.
class MaskAction {
 public:
  MaskAction(const PermGroup& h) : n_(h.degree()), chunks_((n_ + 7) / 8) {
    for (const auto& g : h.generators()) {
      std::vector<std::uint64_t> t(chunks_ * 256, 0);
      for (std::size_t c = 0; c < chunks_; ++c)
        for (std::uint32_t x = 1; x < 256; ++x) {
          const unsigned low = static_cast<unsigned>(std::countr_zero(x));
          const std::size_t pt = c * 8 + low;
          const std::uint64_t bit = pt < n_ ? std::uint64_t{1} << g[pt] : 0;
          t[c * 256 + x] = t[c * 256 + (x & (x - 1))] | bit;
        }
      tables_.push_back(std::move(t));
    }
  }
  std::size_t num_gens() const { return tables_.size(); }
  std::uint64_t apply(std::size_t g, std::uint64_t m) const {
    const auto* t = tables_[g].data();
    std::uint64_t r = 0;
    for (std::size_t c = 0; m; ++c, m >>= 8) r |= t[c * 256 + (m & 255)];
    return r;
  }

 private:
  std::size_t n_, chunks_;
  std::vector<std::vector<std::uint64_t>> tables_;
};

// Colex rank/unrank of k-subsets of {0..n-1}.
std::uint64_t rank_subset(std::uint64_t m, const std::vector<std::vector<std::uint64_t>>& C) {
  std::uint64_t r = 0;
  unsigned i = 1;
  while (m) {
    const unsigned x = static_cast<unsigned>(std::countr_zero(m));
    r += C[x][i];
    ++i;
    m &= m - 1;
  }
  return r;
}

std::uint64_t unrank_subset(std::uint64_t r, unsigned n, unsigned k, const std::vector<std::vector<std::uint64_t>>& C) {
  std::uint64_t m = 0;
  for (unsigned i = k; i >= 1; --i) {
    unsigned x = i - 1;
    while (x + 1 < n && C[x + 1][i] <= r) ++x;
    r -= C[x][i];
    m |= std::uint64_t{1} << x;
  }
  return m;
}

}  // namespace

SubsetOrbitReport subset_orbits(const PermGroup& h, std::uint32_t p, std::uint64_t max_subsets) {
  const unsigned n = static_cast<unsigned>(h.degree());
  SubsetOrbitReport rep;
  rep.p = p;
  rep.order = perm_order(h);
  rep.levels.assign(n + 1, {});
  const MaskAction act(h);
  auto note = [&](std::uint64_t start, std::uint64_t size) {
    ++rep.levels[static_cast<std::size_t>(std::popcount(start))][size];
    if (!rep.witness && size % p == 0) {
      rep.witness = start;
      rep.witness_size = size;
    }
  };

  if (n < 64 && (std::uint64_t{1} << n) <= max_subsets) {
    const std::uint64_t N = std::uint64_t{1} << n;
    std::vector<bool> seen(N, false);
    std::vector<std::uint64_t> queue;
    for (std::uint64_t m0 = 0; m0 < N; ++m0) {
      if (seen[m0]) continue;
      queue.assign(1, m0);
      seen[m0] = true;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t s = 0; s < act.num_gens(); ++s) {
          const std::uint64_t w = act.apply(s, queue[i]);
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      note(m0, queue.size());
    }
  } else {
    std::vector<std::vector<std::uint64_t>> C(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (unsigned a = 0; a <= n; ++a) {
      C[a][0] = 1;
      for (unsigned b = 1; b <= a; ++b) {
        const unsigned __int128 v = static_cast<unsigned __int128>(C[a - 1][b - 1]) + C[a - 1][b];
        C[a][b] = v > max_subsets ? max_subsets + 1 : static_cast<std::uint64_t>(v);
      }
    }
    for (unsigned k = 0; k <= n; ++k)
      if (C[n][k] > max_subsets)
        throw TooManySubsets("level k=" + std::to_string(k) + " has more than " + std::to_string(max_subsets) +
                             " subsets");
    for (unsigned k = 0; k <= n; ++k) {
      const std::uint64_t N = C[n][k];
      std::vector<bool> seen(N, false);
      std::vector<std::uint64_t> queue;
      for (std::uint64_t r0 = 0; r0 < N; ++r0) {
        if (seen[r0]) continue;
        const std::uint64_t m0 = unrank_subset(r0, n, k, C);
        queue.assign(1, m0);
        seen[r0] = true;
        for (std::size_t i = 0; i < queue.size(); ++i)
          for (std::size_t s = 0; s < act.num_gens(); ++s) {
            const std::uint64_t w = act.apply(s, queue[i]);
            const std::uint64_t r = rank_subset(w, C);
            if (!seen[r]) {
              seen[r] = true;
              queue.push_back(w);
            }
          }
        note(m0, queue.size());
      }
    }
  }
  rep.concealed = rep.order % p == 0 && !rep.witness;
  return rep;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ~std::uint64_t{0}) throw InvalidArgument("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

unsigned binom_p_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) throw InvalidArgument("need 0 <= k <= n");
  if (p < 2) throw InvalidArgument("p must be prime");
  std::uint64_t a = k, b = n - k, carry = 0;
  unsigned carries = 0;
  while (a || b || carry) {
    const std::uint64_t s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

unsigned legendre_binom_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) throw InvalidArgument("need 0 <= k <= n");
  if (p < 2) throw InvalidArgument("p must be prime");
  std::uint64_t v = 0;
  for (unsigned __int128 pr = p; pr <= n; pr *= p) {
    const auto q = static_cast<std::uint64_t>(pr);
    v += n / q - k / q - (n - k) / q;
  }
  return static_cast<unsigned>(v);
}

namespace {
// p divides n!/2.
bool p_divides_an_order(std::uint64_t n, std::uint64_t p) { return p == 2 ? n >= 4 : n >= p; }
}  // namespace

bool an_concealed_predicate(std::uint64_t n, std::uint64_t p) {
  if (n < 3) throw InvalidArgument("A_n needs n >= 3");
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (!p_divides_an_order(n, p)) return false;
  unsigned __int128 ps = p;
  for (unsigned s = 1; ps <= n + 1; ++s, ps *= p) {
    if ((n + 1) % static_cast<std::uint64_t>(ps) != 0) continue;
    const std::uint64_t a = (n + 1) / static_cast<std::uint64_t>(ps);
    if (a >= 1 && a <= p - 1 && !(a == 1 && s == 1)) return true;
  }
  return false;
}

bool an_concealed_by_valuations(std::uint64_t n, std::uint64_t p) {
  if (n < 3) throw InvalidArgument("A_n needs n >= 3");
  if (!p_divides_an_order(n, p)) return false;
  for (std::uint64_t k = 0; k <= n; ++k)
    if (binom_p_valuation(n, k, p) != 0) return false;
  return true;
}

}  // namespace pexc
