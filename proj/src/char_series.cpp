#include "gfit/char_series.hpp"

#include <mutex>
#include <unordered_map>

#include "gfit/errors.hpp"

namespace gfit {

namespace {

// Invariants keyed by fingerprint, shared by every parent group. Values are
// computed outside the lock; racing inserts store equal values.
struct CachedInvariants {
  std::optional<std::vector<Permutation>> layer_generators;
  std::optional<std::size_t> gen_fitting_height;
  std::optional<std::size_t> insoluble_length;
};

class InvariantCache {
public:
  template <typename F> std::optional<std::invoke_result_t<F, const CachedInvariants &>>
  lookup(const Fingerprint &key, F field) {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end())
      return std::nullopt;
    return field(it->second);
  }

  template <typename F> void store(const Fingerprint &key, F update) {
    std::lock_guard lock(mu_);
    update(map_[key]);
  }

  void clear() {
    std::lock_guard lock(mu_);
    map_.clear();
  }

private:
  std::mutex mu_;
  std::unordered_map<Fingerprint, CachedInvariants, FingerprintHash> map_;
};

InvariantCache &cache() {
  static InvariantCache instance;
  return instance;
}

// G/N as a standalone group, or G itself when N is trivial (avoids building
// the regular representation).
struct Reduction {
  std::optional<QuotientMap> map;
  Subgroup top;

  Subgroup lift(const Subgroup &s) const { return map ? map->preimage_of(s) : s; }
  Subgroup push(const Subgroup &s) const { return map ? map->image_of(s) : s; }
};

Reduction reduce(const Subgroup &g, const Subgroup &n) {
  if (n.is_trivial())
    return Reduction{std::nullopt, g};
  QuotientMap q = quotient(g, n);
  Subgroup top = Subgroup::whole(q.image());
  return Reduction{std::move(q), std::move(top)};
}

template <typename Pred>
Subgroup join_members(const Subgroup &g, const NormalLattice &lattice, Pred pred) {
  Subgroup acc = Subgroup::trivial(g.parent());
  for (const auto &m : lattice.members)
    if (!acc.contains(m) && pred(m))
      acc = join(acc, m);
  return acc;
}

} // namespace

void clear_invariant_cache() { cache().clear(); }

Subgroup fitting_subgroup(const Subgroup &g) { return fitting_subgroup(g, normal_subgroups(g)); }

Subgroup fitting_subgroup(const Subgroup &g, const NormalLattice &lattice) {
  Subgroup f = join_members(g, lattice, [](const Subgroup &m) { return is_nilpotent(m); });
  if (!is_nilpotent(f))
    throw ConsistencyError("join of nilpotent normal subgroups is not nilpotent: " + f.describe());
  return f;
}

Subgroup o_p_core(const Subgroup &g, std::size_t p) {
  auto lattice = normal_subgroups(g);
  return join_members(g, lattice, [p](const Subgroup &m) { return is_p_group(m, p); });
}

Subgroup odd_core(const Subgroup &g) {
  auto lattice = normal_subgroups(g);
  return join_members(g, lattice, [](const Subgroup &m) { return m.order() % 2 == 1; });
}

Subgroup soluble_radical(const Subgroup &g) { return soluble_radical(g, normal_subgroups(g)); }

Subgroup soluble_radical(const Subgroup &g, const NormalLattice &lattice) {
  return join_members(g, lattice, [](const Subgroup &m) { return is_soluble(m); });
}

Subgroup layer(const Subgroup &g) {
  const Fingerprint key = g.fingerprint();
  if (auto hit = cache().lookup(key, [](const CachedInvariants &c) { return c.layer_generators; });
      hit && *hit)
    return Subgroup::generated(g.parent(), std::span<const Permutation>(**hit));

  Subgroup result = Subgroup::trivial(g.parent());
  if (g.is_trivial() || is_soluble(g)) {
    // no components
  } else if (is_quasisimple(g)) {
    result = g;
  } else {
    // Every component of a non-quasisimple group lies in a proper normal
    // subgroup, and the components of a normal subgroup are components of G.
    auto lattice = normal_subgroups(g);
    const auto &ms = lattice.members;
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j + 1 < ms.size() && maximal; ++j)
        if (ms[j].order() > ms[i].order() && ms[j].contains(ms[i]))
          maximal = false;
      if (maximal)
        result = join(result, layer(ms[i]));
    }
  }
  cache().store(key, [&](CachedInvariants &c) { c.layer_generators = result.generator_perms(); });
  return result;
}

Subgroup generalized_fitting_via_socle(const Subgroup &g) {
  Subgroup f = fitting_subgroup(g);
  Subgroup cf = join(centralizer(g, f), f);
  Reduction red = reduce(g, f);
  Subgroup image = red.push(cf);
  return red.lift(socle(image));
}

Subgroup generalized_fitting(const Subgroup &g, bool crosscheck) {
  Subgroup fstar = join(fitting_subgroup(g), layer(g));
  if (crosscheck) {
    Subgroup other = generalized_fitting_via_socle(g);
    if (!(other == fstar))
      throw ConsistencyError("F* disagreement: F(G)E(G) = " + fstar.describe() +
                             " but socle route = " + other.describe());
  }
  return fstar;
}

namespace {

template <typename Step>
SeriesRecord height_series(const Subgroup &g, SeriesKind kind, Step step) {
  SeriesRecord s{kind, {}, 0};
  if (g.is_trivial())
    return s;
  s.terms.push_back(step(g));
  while (!(s.terms.back() == g)) {
    Reduction red = reduce(g, s.terms.back());
    Subgroup next_top = step(red.top);
    if (next_top.is_trivial())
      throw ConsistencyError("characteristic term of a nontrivial quotient is trivial");
    s.terms.push_back(red.lift(next_top));
  }
  s.length = s.terms.size();
  return s;
}

} // namespace

SeriesRecord gen_fitting_series(const Subgroup &g, bool crosscheck) {
  auto s = height_series(g, SeriesKind::generalized_fitting,
                         [crosscheck](const Subgroup &h) { return generalized_fitting(h, crosscheck); });
  cache().store(g.fingerprint(), [&](CachedInvariants &c) { c.gen_fitting_height = s.length; });
  return s;
}

std::size_t gen_fitting_height(const Subgroup &g) {
  const Fingerprint key = g.fingerprint();
  if (auto hit = cache().lookup(key, [](const CachedInvariants &c) { return c.gen_fitting_height; });
      hit && *hit)
    return **hit;
  return gen_fitting_series(g).length;
}

SeriesRecord fitting_series(const Subgroup &g) {
  if (!is_soluble(g))
    throw PreconditionError("Fitting series requested for an insoluble group");
  return height_series(g, SeriesKind::fitting, [](const Subgroup &h) { return fitting_subgroup(h); });
}

std::size_t fitting_height(const Subgroup &g) { return fitting_series(g).length; }

std::size_t insoluble_length(const Subgroup &g) {
  const Fingerprint key = g.fingerprint();
  if (auto hit = cache().lookup(key, [](const CachedInvariants &c) { return c.insoluble_length; });
      hit && *hit)
    return **hit;

  std::size_t lambda = 0;
  if (!is_soluble(g)) {
    Reduction mod_radical = reduce(g, soluble_radical(g));
    Subgroup top = mod_radical.lift(socle(mod_radical.top));
    if (top == g) {
      lambda = 1;
    } else {
      Reduction rest = reduce(g, top);
      lambda = 1 + insoluble_length(rest.top);
    }
  }
  cache().store(key, [&](CachedInvariants &c) { c.insoluble_length = lambda; });
  return lambda;
}

Subgroup insoluble_radical(const Subgroup &g, std::size_t h) {
  return insoluble_radical(g, h, normal_subgroups(g));
}

Subgroup insoluble_radical(const Subgroup &g, std::size_t h, const NormalLattice &lattice) {
  return join_members(g, lattice, [h](const Subgroup &m) { return insoluble_length(m) <= h; });
}

SeriesRecord upper_insoluble_series(const Subgroup &g, std::size_t h_max) {
  auto lattice = normal_subgroups(g);
  SeriesRecord s{SeriesKind::insoluble_upper, {}, 0};
  for (std::size_t h = 0; h <= h_max; ++h) {
    s.terms.push_back(insoluble_radical(g, h, lattice));
    if (s.terms.back() == g)
      break;
  }
  s.length = s.terms.size() - 1;
  return s;
}

CharacteristicProfile characteristic_profile(const Subgroup &g, bool crosscheck) {
  auto lattice = normal_subgroups(g);
  CharacteristicProfile p;
  p.fitting = fitting_subgroup(g, lattice);
  p.layer = layer(g);
  p.gen_fitting = generalized_fitting(g, crosscheck);
  p.soluble_radical = soluble_radical(g, lattice);
  p.odd_core = odd_core(g);
  if (p.soluble_radical == g)
    p.fitting_height = fitting_height(g);
  p.gen_fitting_height = gen_fitting_series(g, crosscheck).length;
  p.insoluble_length = insoluble_length(g);
  return p;
}

} // namespace gfit
