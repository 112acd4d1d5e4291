#include "pexc/matrix_group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "pexc/errors.hpp"
#include "pexc/schreier_sims.hpp"
#include "pexc/vector_space.hpp"

namespace pexc {

struct MatGroup::Cache {
  std::vector<Matrix> prime;
  std::mutex orbit_mu, order_mu;
  std::optional<OrbitPartition> orbits;
  std::optional<std::uint64_t> order;
};

std::map<std::uint64_t, std::uint64_t> OrbitPartition::nonzero_sizes() const {
  auto s = sizes;
  // The zero vector is the first representative, a singleton.
  if (!representatives.empty() && --s[1] == 0) s.erase(1);
  return s;
}

const char* to_string(PexcStatus s) {
  switch (s) {
    case PexcStatus::P_EXCEPTIONAL: return "P_EXCEPTIONAL";
    case PexcStatus::ORDER_NOT_DIVISIBLE_BY_P: return "ORDER_NOT_DIVISIBLE_BY_P";
    case PexcStatus::BAD_ORBIT: return "BAD_ORBIT";
  }
  return "?";
}

MatGroup::MatGroup(Field f, std::size_t dim, std::vector<SemiMatrix> gens, std::string label)
    : f_(std::move(f)), d_(dim), gens_(std::move(gens)), label_(std::move(label)), cache_(std::make_shared<Cache>()) {
  if (gens_.empty()) throw InvalidArgument("a group needs at least one generator");
  if (d_ == 0) throw InvalidArgument("dimension must be positive");
  if (d_ * f_.degree() > kMaxPrimeDim) throw DimensionTooLarge("dimension over the prime field exceeds 256");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.field() != f_) throw FieldMismatch("generator " + std::to_string(i) + " is over a different field");
    if (g.dim() != d_) throw ShapeMismatch("generator " + std::to_string(i) + " has the wrong shape");
    if (!is_invertible(g.mat)) throw SingularMatrix("generator " + std::to_string(i) + " is not invertible");
    cache_->prime.push_back(prime_matrix(g));
  }
}

namespace {
std::vector<SemiMatrix> as_semi(const std::vector<Matrix>& gens) {
  std::vector<SemiMatrix> out;
  out.reserve(gens.size());
  for (const auto& m : gens) out.emplace_back(m, 0);
  return out;
}
}  // namespace

MatGroup::MatGroup(Field f, std::size_t dim, const std::vector<Matrix>& gens, std::string label)
    : MatGroup(std::move(f), dim, as_semi(gens), std::move(label)) {}

bool MatGroup::is_linear() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const SemiMatrix& g) { return g.is_linear(); });
}

const std::vector<Matrix>& MatGroup::prime_generators() const { return cache_->prime; }

MatGroup MatGroup::blown_up() const {
  if (f_.is_prime()) return *this;
  return MatGroup(f_.prime_field(), prime_dim(), cache_->prime, label_);
}

MatGroup MatGroup::with_label(std::string label) const {
  MatGroup g(*this);
  g.label_ = std::move(label);
  return g;
}

MatGroup MatGroup::extended(const std::vector<SemiMatrix>& extra, std::string label) const {
  auto gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return MatGroup(f_, d_, std::move(gens), label.empty() ? label_ : std::move(label));
}

namespace {

void check_space(const MatGroup& g, const Limits& lim) {
  const IndexSpace sp(g.field().characteristic(), g.prime_dim());
  if (sp.size() > lim.max_vectors)
    throw SpaceTooLarge("space has " + std::to_string(sp.size()) + " vectors, above --max-vectors " +
                        std::to_string(lim.max_vectors));
}

}  // namespace

const OrbitPartition& MatGroup::orbits(const Limits& lim) const {
  check_space(*this, lim);
  std::lock_guard<std::mutex> lock(cache_->orbit_mu);
  if (!cache_->orbits) cache_->orbits = orbit_partition(*this, lim);
  return *cache_->orbits;
}

std::uint64_t MatGroup::order(const Limits& lim) const {
  check_space(*this, lim);
  std::lock_guard<std::mutex> lock(cache_->order_mu);
  if (!cache_->order) cache_->order = group_order(*this, lim);
  return *cache_->order;
}

OrbitPartition orbit_partition(const MatGroup& g, const Limits& lim) {
  const VectorAction act(g.prime_generators(), lim.max_vectors);
  const std::uint64_t N = act.size();
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> seen(N, kUnseen);
  std::vector<std::uint32_t> queue;
  queue.reserve(N);
  OrbitPartition out;
  out.total = N;
  std::uint32_t id = 0;
  for (std::uint64_t v0 = 0; v0 < N; ++v0) {
    if (seen[v0] != kUnseen) continue;
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(v0));
    seen[v0] = id;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::uint32_t v = queue[h];
      for (std::size_t s = 0; s < act.num_gens(); ++s) {
        const std::uint32_t w = act.apply(s, v);
        if (seen[w] == kUnseen) {
          seen[w] = id;
          queue.push_back(w);
        }
      }
    }
    out.representatives.push_back(v0);
    out.rep_sizes.push_back(queue.size());
    ++out.sizes[queue.size()];
    ++id;
  }
  return out;
}

std::vector<std::uint64_t> orbit_of(const MatGroup& g, std::uint64_t v, const Limits& lim) {
  const VectorAction act(g.prime_generators(), lim.max_vectors);
  if (v >= act.size()) throw InvalidArgument("vector index out of range");
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(v)};
  std::unordered_map<std::uint32_t, bool> seen{{static_cast<std::uint32_t>(v), true}};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t s = 0; s < act.num_gens(); ++s) {
      const std::uint32_t w = act.apply(s, queue[h]);
      if (seen.emplace(w, true).second) queue.push_back(w);
    }
  }
  std::vector<std::uint64_t> out(queue.begin(), queue.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Faithful permutation domain: the union of the orbits of the basis vectors.
struct Domain {
  std::vector<std::uint32_t> points;
  std::vector<std::uint64_t> orbit_size_of;
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  std::vector<Perm> perms;  // nonidentity generator permutations
  std::vector<std::uint32_t> priority;
};

Domain make_domain(const VectorAction& act) {
  Domain dm;
  const auto& sp = act.space();
  for (std::size_t j = 0; j < sp.dim(); ++j) {
    const std::uint32_t u = sp.unit(j);
    if (dm.local.count(u)) continue;
    const std::size_t start = dm.points.size();
    dm.local[u] = static_cast<std::uint32_t>(dm.points.size());
    dm.points.push_back(u);
    for (std::size_t h = start; h < dm.points.size(); ++h) {
      for (std::size_t s = 0; s < act.num_gens(); ++s) {
        const std::uint32_t w = act.apply(s, dm.points[h]);
        if (dm.local.emplace(w, static_cast<std::uint32_t>(dm.points.size())).second) dm.points.push_back(w);
      }
    }
    dm.orbit_size_of.resize(dm.points.size(), dm.points.size() - start);
  }
  for (std::size_t s = 0; s < act.num_gens(); ++s) {
    Perm pm(dm.points.size());
    for (std::size_t i = 0; i < dm.points.size(); ++i) pm[i] = dm.local.at(act.apply(s, dm.points[i]));
    if (!perm_is_identity(pm)) dm.perms.push_back(std::move(pm));
  }
  // Base points: largest orbit first, then smallest vector index.
  dm.priority.resize(dm.points.size());
  for (std::uint32_t i = 0; i < dm.priority.size(); ++i) dm.priority[i] = i;
  std::sort(dm.priority.begin(), dm.priority.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (dm.orbit_size_of[a] != dm.orbit_size_of[b]) return dm.orbit_size_of[a] > dm.orbit_size_of[b];
    return dm.points[a] < dm.points[b];
  });
  return dm;
}

// Permutation of the domain induced by a GF(p) matrix; nullopt if it leaves the domain.
std::optional<Perm> domain_perm(const Domain& dm, const IndexSpace& sp, const Matrix& x) {
  const auto rows = matrix_rows_to_indices(x);
  Perm pm(dm.points.size());
  for (std::size_t i = 0; i < dm.points.size(); ++i) {
    auto it = dm.local.find(sp.apply_rows(rows, dm.points[i]));
    if (it == dm.local.end()) return std::nullopt;
    pm[i] = it->second;
  }
  return pm;
}

}  // namespace

std::uint64_t group_order(const MatGroup& g, const Limits& lim) {
  const VectorAction act(g.prime_generators(), lim.max_vectors);
  const Domain dm = make_domain(act);
  if (dm.perms.empty()) return 1;
  return StabChain(dm.points.size(), dm.perms, dm.priority).order();
}

bool contains_all(const MatGroup& g, const std::vector<Matrix>& xs, const Limits& lim) {
  const VectorAction act(g.prime_generators(), lim.max_vectors);
  const Domain dm = make_domain(act);
  const StabChain chain(dm.points.size(), dm.perms, dm.priority);
  for (const auto& x : xs) {
    if (!x.field().is_prime() || x.field().characteristic() != act.space().p() || x.rows() != act.space().dim() || x.cols() != x.rows())
      throw ShapeMismatch("element does not act on the group's space");
    const auto pm = domain_perm(dm, act.space(), x);
    if (!pm || !chain.contains(*pm)) return false;
  }
  return true;
}

bool is_normal_subgroup(const MatGroup& k, const MatGroup& g, const Limits& lim) {
  const auto& kg = k.prime_generators();
  const auto& gg = g.prime_generators();
  if (!contains_all(g, kg, lim)) return false;
  std::vector<Matrix> conj;
  for (const auto& s : gg)
    for (const auto& x : kg) conj.push_back(inverse(s) * x * s);
  return contains_all(k, conj, lim);
}

PexcVerdict is_p_exceptional(const MatGroup& g, std::uint32_t p, const Limits& lim) {
  if (p != g.field().characteristic())
    throw InvalidArgument("p = " + std::to_string(p) + " is not the characteristic of " + g.field().describe());
  PexcVerdict v;
  v.p = p;
  v.order = g.order(lim);
  if (v.order % p != 0) {
    v.status = PexcStatus::ORDER_NOT_DIVISIBLE_BY_P;
    return v;
  }
  const auto& part = g.orbits(lim);
  for (std::size_t i = 0; i < part.representatives.size(); ++i) {
    if (part.rep_sizes[i] % p == 0) {
      v.status = PexcStatus::BAD_ORBIT;
      v.witness = part.representatives[i];
      v.witness_size = part.rep_sizes[i];
      return v;
    }
  }
  v.status = PexcStatus::P_EXCEPTIONAL;
  return v;
}

bool is_half_transitive(const MatGroup& g, const Limits& lim) {
  const auto nz = g.orbits(lim).nonzero_sizes();
  return nz.size() == 1;
}

bool is_transitive_nonzero(const MatGroup& g, const Limits& lim) {
  const auto nz = g.orbits(lim).nonzero_sizes();
  return nz.size() == 1 && nz.begin()->second == 1;
}

bool is_semiregular(const MatGroup& g, const Limits& lim) {
  const auto nz = g.orbits(lim).nonzero_sizes();
  const auto ord = g.order(lim);
  return nz.size() == 1 && nz.begin()->first == ord;
}

}  // namespace pexc
