#include <memory>
#include <random>
#include <unordered_set>

#include "pexc/errors.hpp"
#include "pexc/matrix_group.hpp"
#include "pexc/vector_space.hpp"

namespace pexc {

namespace {

using Key = std::vector<std::uint32_t>;  // images of the GF(p) basis vectors

// Flat store of distinct keys with a hash index into it.  The state lives
// behind a pointer so the hash functors stay valid when the set is moved.
class KeySet {
 public:
  explicit KeySet(std::size_t n) : s_(std::make_unique<State>(n)) {}

  std::size_t size() const { return s_->flat.size() / (s_->n ? s_->n : 1); }
  Key get(std::size_t i) const {
    const std::size_t n = s_->n;
    return Key(s_->flat.begin() + i * n, s_->flat.begin() + (i + 1) * n);
  }
  bool contains(const Key& k) const {
    s_->probe = &k;
    const bool found = s_->index.count(kProbe) > 0;
    s_->probe = nullptr;
    return found;
  }
  bool insert(const Key& k) {
    if (contains(k)) return false;
    s_->flat.insert(s_->flat.end(), k.begin(), k.end());
    s_->index.insert(size() - 1);
    return true;
  }

 private:
  static constexpr std::size_t kProbe = ~std::size_t{0};
  struct State;
  struct Hash {
    const State* s;
    std::size_t operator()(std::size_t id) const;
  };
  struct Eq {
    const State* s;
    bool operator()(std::size_t a, std::size_t b) const;
  };
  struct State {
    explicit State(std::size_t n_) : n(n_), index(16, Hash{this}, Eq{this}) {}
    const std::uint32_t* at(std::size_t id) const { return id == kProbe ? probe->data() : flat.data() + id * n; }
    std::size_t n;
    std::vector<std::uint32_t> flat;
    const Key* probe = nullptr;
    std::unordered_set<std::size_t, Hash, Eq> index;
  };
  std::unique_ptr<State> s_;
};

std::size_t KeySet::Hash::operator()(std::size_t id) const {
  const std::uint32_t* p = s->at(id);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < s->n; ++i) h = (h ^ p[i]) * 1099511628211ull;
  return static_cast<std::size_t>(h);
}

bool KeySet::Eq::operator()(std::size_t a, std::size_t b) const {
  const std::uint32_t *x = s->at(a), *y = s->at(b);
  for (std::size_t i = 0; i < s->n; ++i)
    if (x[i] != y[i]) return false;
  return true;
}

Key identity_key(const IndexSpace& sp) {
  Key k(sp.dim());
  for (std::size_t j = 0; j < sp.dim(); ++j) k[j] = sp.unit(j);
  return k;
}

Key times_gen(const VectorAction& act, const Key& a, std::size_t s) {
  Key r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = act.apply(s, a[j]);
  return r;
}

// a then b.
Key times(const IndexSpace& sp, const Key& a, const Key& b) {
  Key r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = sp.apply_rows(b, a[j]);
  return r;
}

Key key_power(const IndexSpace& sp, const Key& a, std::uint64_t e) {
  Key r = identity_key(sp), b = a;
  while (e) {
    if (e & 1) r = times(sp, r, b);
    e >>= 1;
    if (e) b = times(sp, b, b);
  }
  return r;
}

// Closure of the identity under right multiplication by the action's generators.
KeySet closure(const VectorAction& act, std::uint64_t cap) {
  KeySet set(act.space().dim());
  set.insert(identity_key(act.space()));
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Key k = set.get(i);
    for (std::size_t s = 0; s < act.num_gens(); ++s) {
      if (set.insert(times_gen(act, k, s)) && set.size() > cap)
        throw GroupTooLarge("group has more than --max-elements = " + std::to_string(cap) + " elements");
    }
  }
  return set;
}

std::uint64_t key_order(const IndexSpace& sp, const Key& a, std::uint64_t limit) {
  const Key id = identity_key(sp);
  Key x = a;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (x == id) return k;
    x = times(sp, x, a);
  }
  return 0;
}

}  // namespace

std::vector<Matrix> enumerate_elements(const MatGroup& g, const Limits& lim) {
  const VectorAction act(g.prime_generators(), lim.max_vectors);
  const KeySet set = closure(act, lim.max_elements);
  const Field fp = g.field().prime_field();
  std::vector<Matrix> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out.push_back(indices_to_matrix(fp, set.get(i)));
  return out;
}

MatGroup p_residual(const MatGroup& g, std::uint32_t p, const Limits& lim) {
  const VectorAction act(g.prime_generators(), lim.max_vectors);
  const auto& sp = act.space();
  const KeySet all = closure(act, lim.max_elements);
  std::uint64_t order = all.size(), pe = 1;
  while (order % p == 0) {
    order /= p;
    pe *= p;
  }
  const Field fp = g.field().prime_field();
  const std::size_t n = sp.dim();
  const Key id = identity_key(sp);
  std::vector<Matrix> gens;
  KeySet h(n);
  h.insert(id);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Key x = all.get(i);
    if (x == id || h.contains(x)) continue;
    // x is a p-element iff x^(p-part of |G|) = 1.
    if (key_power(sp, x, pe) != id) continue;
    gens.push_back(indices_to_matrix(fp, x));
    const VectorAction sub(gens, lim.max_vectors);
    h = closure(sub, lim.max_elements);
  }
  if (gens.empty()) gens.push_back(Matrix::identity(fp, n));
  return MatGroup(fp, n, gens, g.label().empty() ? "" : "O^p'(" + g.label() + ")");
}

std::optional<Matrix> find_element_of_order(const MatGroup& g, std::uint32_t p, const Limits& lim, unsigned tries) {
  const VectorAction act(g.prime_generators(), lim.max_vectors);
  const auto& sp = act.space();
  const Field fp = g.field().prime_field();
  std::mt19937_64 rng(lim.seed);
  std::uniform_int_distribution<std::size_t> pick(0, act.num_gens() - 1);
  std::uniform_int_distribution<unsigned> len(1, 24);
  for (unsigned t = 0; t < tries; ++t) {
    Key x = identity_key(sp);
    const unsigned l = len(rng);
    for (unsigned i = 0; i < l; ++i) x = times_gen(act, x, pick(rng));
    const std::uint64_t o = key_order(sp, x, lim.max_elements);
    if (o == 0 || o % p != 0) continue;
    return indices_to_matrix(fp, key_power(sp, x, o / p));
  }
  // Exhaustive search when the group is small enough.
  const KeySet all = closure(act, lim.max_elements);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Key x = all.get(i);
    const std::uint64_t o = key_order(sp, x, all.size());
    if (o % p == 0) return indices_to_matrix(fp, key_power(sp, x, o / p));
  }
  return std::nullopt;
}

bool verify_fixed_point_cover(const MatGroup& g, std::uint32_t p, const Matrix& t, const Limits& lim) {
  if (p != g.field().characteristic()) throw InvalidArgument("p is not the field characteristic");
  const auto& gens = g.prime_generators();
  const std::size_t n = g.prime_dim();
  if (t.rows() != n || !t.square() || t.field() != gens[0].field())
    throw ShapeMismatch("element does not act on the blown-up space");
  std::vector<Matrix> inv;
  for (const auto& s : gens) inv.push_back(inverse(s));
  const VectorAction act(gens, lim.max_vectors);
  const VectorAction act_inv(inv, lim.max_vectors);
  const auto& sp = act.space();

  // Conjugacy class of t under the generators: t^s = s^-1 t s.
  KeySet cls(n);
  cls.insert(matrix_rows_to_indices(t));
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const Key c = cls.get(i);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Key r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = act.apply(s, sp.apply_rows(c, act_inv.apply(s, sp.unit(j))));
      if (cls.insert(r) && cls.size() > lim.max_elements)
        throw GroupTooLarge("conjugacy class exceeds --max-elements");
    }
  }

  const Field fp = gens[0].field();
  const std::uint64_t N = sp.size();
  std::vector<bool> covered(N, false);
  covered[0] = true;
  std::uint64_t count = 1;
  const Matrix id = Matrix::identity(fp, n);
  for (std::size_t i = 0; i < cls.size() && count < N; ++i) {
    const Matrix k = kernel(indices_to_matrix(fp, cls.get(i)) - id);
    const auto rows = matrix_rows_to_indices(k);
    // Walk all p^dim combinations of the kernel basis.
    std::uint64_t combos = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) combos *= p;
    for (std::uint64_t c = 1; c < combos; ++c) {
      std::uint32_t v = 0;
      std::uint64_t cc = c;
      for (std::size_t r = 0; r < rows.size(); ++r, cc /= p)
        if (cc % p) v = sp.add(v, sp.scale(static_cast<std::uint32_t>(cc % p), rows[r]));
      if (!covered[v]) {
        covered[v] = true;
        ++count;
      }
    }
  }
  return count == N;
}

}  // namespace pexc
