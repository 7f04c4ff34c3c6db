#include "gfit/engel.hpp"

#include <algorithm>
#include <unordered_map>

#include "gfit/errors.hpp"

namespace gfit {

// --- automorphisms ---------------------------------------------------------------------

AutomorphismMap AutomorphismMap::make(GroupPtr group, std::vector<Permutation> images, std::string name) {
  const Group &g = *group;
  const auto &gens = g.generator_indices();
  const std::string label = name.empty() ? std::string("automorphism") : name;
  if (images.size() != gens.size())
    throw ValidationError(label + ": expected " + std::to_string(gens.size()) + " generator images, got " +
                          std::to_string(images.size()));
  std::vector<Index> image_idx;
  for (std::size_t s = 0; s < images.size(); ++s) {
    auto idx = g.index_of(images[s]);
    if (!idx)
      throw ValidationError(label + ": image " + format_cycles(images[s]) + " of generator " +
                            format_cycles(g.generators()[s]) + " is not in the group");
    image_idx.push_back(*idx);
  }

  // Define the map along a breadth-first spanning tree and check
  // f(e * s) = f(e) * f(s) for every element e and generator s; that is
  // exactly the homomorphism condition since every element is a positive
  // word in the generators.
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> table(g.order(), unset);
  table[Group::identity()] = Group::identity();
  std::vector<Index> queue{Group::identity()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Index e = queue[k];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Index child = g.mul(e, gens[s]);
      Index value = g.mul(table[e], image_idx[s]);
      if (table[child] == unset) {
        table[child] = value;
        queue.push_back(child);
      }
    }
  }
  for (Index e = 0; e < g.order(); ++e) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Index child = g.mul(e, gens[s]);
      if (table[child] != g.mul(table[e], image_idx[s]))
        throw ValidationError(label + ": not a homomorphism on the pair (" + format_cycles(g.element(e)) +
                              ", " + format_cycles(g.generators()[s]) + ")");
    }
  }
  std::vector<bool> hit(g.order(), false);
  for (Index e = 0; e < g.order(); ++e) {
    if (hit[table[e]])
      throw ValidationError(label + ": not injective, " + format_cycles(g.element(e)) + " collides");
    hit[table[e]] = true;
  }

  AutomorphismMap a;
  a.group_ = std::move(group);
  a.name_ = std::move(name);
  a.images_ = std::move(images);
  a.table_ = std::move(table);
  std::vector<Index> power = a.table_;
  a.order_ = 1;
  auto is_id = [](const std::vector<Index> &t) {
    for (Index i = 0; i < t.size(); ++i)
      if (t[i] != i)
        return false;
    return true;
  };
  while (!is_id(power)) {
    for (auto &v : power)
      v = a.table_[v];
    ++a.order_;
  }
  return a;
}

AutomorphismMap AutomorphismMap::inner(GroupPtr group, const Permutation &t, std::string name) {
  if (t.degree() != group->degree())
    throw ValidationError("conjugating element has degree " + std::to_string(t.degree()) + ", group has " +
                          std::to_string(group->degree()));
  std::vector<Permutation> images;
  for (const auto &s : group->generators())
    images.push_back(conjugate(s, t));
  if (name.empty())
    name = "inner " + format_cycles(t);
  AutomorphismMap a = make(std::move(group), std::move(images), std::move(name));
  a.conjugator_ = t;
  return a;
}

AutomorphismMap AutomorphismMap::identity(GroupPtr group) {
  auto images = group->generators();
  return make(std::move(group), std::move(images), "identity");
}

Permutation AutomorphismMap::apply(const Permutation &g) const {
  return group_->element(table_[group_->require_index(g)]);
}

Permutation AutomorphismMap::as_element_permutation() const {
  return Permutation(std::vector<Point>(table_.begin(), table_.end()));
}

Subgroup AutomorphismMap::fixed_subgroup() const {
  ElementSet mask = group_->empty_set();
  for (Index i = 0; i < table_.size(); ++i)
    if (table_[i] == i)
      mask.set(i);
  return Subgroup::from_mask(group_, std::move(mask));
}

Index commutator_with_actor(Index g, const AutomorphismMap &actor) {
  const Group &grp = *actor.group();
  return grp.mul(grp.inv(g), actor.apply(g));
}

Permutation commutator_with_actor(const Permutation &g, const AutomorphismMap &actor) {
  const Group &grp = *actor.group();
  return grp.element(commutator_with_actor(grp.require_index(g), actor));
}

// --- Engel sets ---------------------------------------------------------------------

std::pair<std::vector<ElementSet>, std::size_t> engel_sets(const AutomorphismMap &actor, std::size_t k_cap) {
  const Group &g = *actor.group();
  if (k_cap == 0)
    k_cap = g.order();
  std::vector<Index> step(g.order());
  for (Index i = 0; i < g.order(); ++i)
    step[i] = commutator_with_actor(i, actor);

  // E_{G,0} stays out of the cycle search so that E_{G,1} is always stored;
  // the reported cycle then starts at some k >= 1.
  std::vector<ElementSet> sets{g.full_set()};
  std::unordered_multimap<std::size_t, std::size_t> seen;
  std::hash<ElementSet> hasher;
  for (;;) {
    const ElementSet &cur = sets.back();
    ElementSet next(g.order());
    for (auto i = cur.find_first(); i != ElementSet::npos; i = cur.find_next(i))
      next.set(step[i]);
    const std::size_t h = hasher(next);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (sets[it->second] == next)
        return {std::move(sets), it->second};
    if (sets.size() > k_cap)
      throw ResourceError("Engel set sequence did not cycle within " + std::to_string(k_cap) + " steps",
                          sets.size());
    seen.emplace(h, sets.size());
    sets.push_back(std::move(next));
  }
}

std::optional<std::size_t> EngelChain::first_trivial() const {
  for (std::size_t k = 1; k < sets.size(); ++k)
    if (sets[k].count() == 1 && sets[k].test(Group::identity()))
      return k;
  return std::nullopt;
}

std::size_t EngelChain::stabilization_index() const {
  std::size_t k = generated.size() - 1;
  while (k > 1 && generated[k - 1] == stable_K)
    --k;
  return std::max<std::size_t>(k, 1);
}

EngelChain engel_chain(const AutomorphismMap &actor, std::size_t k_cap) {
  const GroupPtr &gp = actor.group();
  EngelChain chain;
  std::tie(chain.sets, chain.cycle_start) = engel_sets(actor, k_cap);
  chain.cycle_length = chain.sets.size() - chain.cycle_start;

  for (std::size_t k = 0; k < chain.sets.size(); ++k) {
    const ElementSet &e = chain.sets[k];
    for (auto i = e.find_first(); i != ElementSet::npos; i = e.find_next(i))
      if (!e.test(actor.apply(static_cast<Index>(i))))
        throw ConsistencyError("Engel set " + std::to_string(k) + " is not invariant under the actor");
    chain.generated.push_back(Subgroup::generated_by_set(gp, e));
    if (k > 0 && !chain.generated[k - 1].contains(chain.generated[k]))
      throw ConsistencyError("generated Engel subgroups are not descending at k = " + std::to_string(k));
  }
  // The tail of a descending chain that is also periodic is constant.
  chain.stable_K = chain.generated.back();
  if (!(chain.generated[chain.cycle_start] == chain.stable_K))
    throw ConsistencyError("generated Engel subgroups vary along the set cycle");

  chain.descent_H = SeriesRecord{SeriesKind::engel_chain, {Subgroup::whole(gp)}, 0};
  for (;;) {
    Subgroup next = commutator_with_map(chain.descent_H.terms.back(), actor.table());
    if (next == chain.descent_H.terms.back())
      break;
    chain.descent_H.terms.push_back(std::move(next));
  }
  chain.descent_H.length = chain.descent_H.terms.size() - 1;
  return chain;
}

bool baer_membership(const GroupPtr &g, Index x, std::size_t k_cap) {
  auto actor = AutomorphismMap::inner(g, g->element(x));
  auto [sets, start] = engel_sets(actor, k_cap);
  for (std::size_t k = 1; k < sets.size(); ++k)
    if (sets[k].count() == 1 && sets[k].test(Group::identity()))
      return true;
  return false;
}

// --- involutions ----------------------------------------------------------------------

InvolutionReport j_set(const AutomorphismMap &alpha) {
  const GroupPtr &gp = alpha.group();
  const Group &g = *gp;
  if (!(alpha.order() == 2 || (alpha.order() == 1 && g.order() == 1)))
    throw PreconditionError("automorphism " + alpha.name() + " has order " + std::to_string(alpha.order()) +
                            ", not 2");
  InvolutionReport r{alpha, g.empty_set(), 1, {}, {}};
  for (Index i = 0; i < g.order(); ++i) {
    if (alpha.apply(i) != g.inv(i))
      continue;
    const auto &elem = g.element(i);
    r.two_part = std::max(r.two_part, p_part(elem, 2));
    if (elem.order() % 2 == 1)
      r.j_set.set(i);
  }
  r.generated_j = Subgroup::generated_by_set(gp, r.j_set);
  r.fixed_points = alpha.fixed_subgroup();
  return r;
}

CentralizerIntersection centralizer_intersection_check(const AutomorphismMap &alpha) {
  const GroupPtr &gp = alpha.group();
  Subgroup whole = Subgroup::whole(gp);
  if (!(commutator_with_map(whole, alpha.table()) == whole))
    throw PreconditionError("[G, alpha] != G for " + alpha.name());
  InvolutionReport rep = j_set(alpha);
  const Subgroup &c = rep.fixed_points;
  ElementSet meet = c.mask();
  for (auto j = rep.j_set.find_first(); j != ElementSet::npos; j = rep.j_set.find_next(j))
    meet &= conjugate(c, static_cast<Index>(j)).mask();
  CentralizerIntersection out;
  out.intersection = Subgroup::from_mask(gp, std::move(meet));
  Subgroup z = center(whole);
  out.central_fixed = intersection(z, c);
  out.holds = out.intersection == out.central_fixed && z.contains(out.intersection);
  return out;
}

GroupPtr holomorph_extension(const AutomorphismMap &alpha, std::size_t cap) {
  const Group &g = *alpha.group();
  if (g.order() > cap)
    throw ResourceError("holomorph extension needs |G| <= " + std::to_string(cap), g.order());
  std::vector<Permutation> gens;
  for (Index t : g.generator_indices()) {
    std::vector<Point> images(g.order());
    for (Index i = 0; i < g.order(); ++i)
      images[i] = g.mul(i, t);
    gens.emplace_back(std::move(images));
  }
  gens.push_back(alpha.as_element_permutation());
  return Group::close(std::move(gens));
}

} // namespace gfit
