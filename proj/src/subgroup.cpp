#include "gfit/subgroup.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "gfit/errors.hpp"

namespace gfit {

namespace {

constexpr std::uint32_t kNoCoset = std::numeric_limits<std::uint32_t>::max();

// Adds each of `extra` to `gens` unless already inside the running closure.
void extend_generators(const Group &g, ElementSet &mask, std::vector<Index> &gens,
                       std::span<const Index> extra) {
  for (Index x : extra) {
    if (mask.test(x))
      continue;
    gens.push_back(x);
    mask = closure(g, gens);
  }
}

} // namespace

// --- Subgroup -------------------------------------------------------------------

Subgroup Subgroup::whole(GroupPtr parent) {
  ElementSet mask = parent->full_set();
  std::vector<Index> gens;
  for (Index i : parent->generator_indices())
    if (i != Group::identity() && std::find(gens.begin(), gens.end(), i) == gens.end())
      gens.push_back(i);
  return Subgroup(std::move(parent), std::move(mask), std::move(gens));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet mask = parent->empty_set();
  mask.set(Group::identity());
  return Subgroup(std::move(parent), std::move(mask), {});
}

Subgroup Subgroup::generated(GroupPtr parent, std::vector<Index> gens) {
  std::erase(gens, Group::identity());
  std::vector<Index> kept;
  ElementSet mask = parent->empty_set();
  mask.set(Group::identity());
  extend_generators(*parent, mask, kept, gens);
  return Subgroup(std::move(parent), std::move(mask), std::move(kept));
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Permutation> gens) {
  std::vector<Index> idx;
  for (const auto &p : gens)
    idx.push_back(parent->require_index(p));
  return generated(std::move(parent), std::move(idx));
}

Subgroup Subgroup::generated_by_set(GroupPtr parent, const ElementSet &set) {
  std::vector<Index> gens;
  ElementSet mask = parent->empty_set();
  mask.set(Group::identity());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    if (mask.test(i))
      continue;
    gens.push_back(static_cast<Index>(i));
    mask = closure(*parent, gens);
  }
  return Subgroup(std::move(parent), std::move(mask), std::move(gens));
}

Subgroup Subgroup::from_mask(GroupPtr parent, ElementSet mask) {
  Subgroup s = generated_by_set(parent, mask);
  if (s.mask_ != mask)
    throw ValidationError("element set is not closed under multiplication");
  return s;
}

Subgroup Subgroup::from_parts(GroupPtr parent, ElementSet mask, std::vector<Index> gens) {
  return Subgroup(std::move(parent), std::move(mask), std::move(gens));
}

bool Subgroup::contains(const Permutation &g) const {
  auto idx = parent_->index_of(g);
  return idx && mask_.test(*idx);
}

bool Subgroup::contains(const Subgroup &other) const {
  return other.mask_.is_subset_of(mask_);
}

GroupPtr Subgroup::materialize() const {
  std::vector<Permutation> elems;
  elems.reserve(order());
  for (auto i = mask_.find_first(); i != ElementSet::npos; i = mask_.find_next(i))
    elems.push_back(parent_->element(static_cast<Index>(i)));
  return Group::from_sorted_elements(generator_perms(), std::move(elems));
}

std::vector<Permutation> Subgroup::generator_perms() const {
  std::vector<Permutation> out;
  for (Index i : gens_)
    out.push_back(parent_->element(i));
  return out;
}

std::string Subgroup::describe() const {
  std::ostringstream os;
  os << '<';
  if (gens_.empty())
    os << "()";
  for (std::size_t i = 0; i < gens_.size(); ++i)
    os << (i ? ", " : "") << parent_->element(gens_[i]);
  os << "> order " << order();
  return os.str();
}

bool subgroup_less(const Subgroup &a, const Subgroup &b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.mask() < b.mask();
}

void require_common_parent(const Subgroup &a, const Subgroup &b) {
  if (a.parent() != b.parent())
    throw ValidationError("subgroups belong to different parent groups");
}

// --- joins, closures, conjugates -------------------------------------------------------

Subgroup join(const Subgroup &a, const Subgroup &b) {
  require_common_parent(a, b);
  if (a.contains(b))
    return a;
  if (b.contains(a))
    return b;
  ElementSet mask = a.mask();
  std::vector<Index> gens = a.generators();
  extend_generators(a.ambient(), mask, gens, b.generators());
  return Subgroup::from_parts(a.parent(), std::move(mask), std::move(gens));
}

Subgroup intersection(const Subgroup &a, const Subgroup &b) {
  require_common_parent(a, b);
  return Subgroup::from_mask(a.parent(), a.mask() & b.mask());
}

Subgroup normal_closure(const Subgroup &a, const Subgroup &g) {
  require_common_parent(a, g);
  const Group &amb = a.ambient();
  ElementSet mask = a.mask();
  std::vector<Index> gens = a.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (Index t : g.generators()) {
      Index c = amb.conj(gens[k], t);
      if (!mask.test(c)) {
        gens.push_back(c);
        mask = closure(amb, gens);
      }
    }
  }
  return Subgroup::from_parts(a.parent(), std::move(mask), std::move(gens));
}

bool is_normal(const Subgroup &n, const Subgroup &g) {
  require_common_parent(n, g);
  const Group &amb = n.ambient();
  for (Index s : n.generators())
    for (Index t : g.generators())
      if (!n.contains(amb.conj(s, t)))
        return false;
  return true;
}

Subgroup conjugate(const Subgroup &a, Index g) {
  const Group &amb = a.ambient();
  ElementSet mask = amb.empty_set();
  for (auto i = a.mask().find_first(); i != ElementSet::npos; i = a.mask().find_next(i))
    mask.set(amb.conj(static_cast<Index>(i), g));
  std::vector<Index> gens;
  for (Index s : a.generators())
    gens.push_back(amb.conj(s, g));
  return Subgroup::from_parts(a.parent(), std::move(mask), std::move(gens));
}

// --- centralizers and cores ----------------------------------------------------------------

Subgroup centralizer(const Subgroup &g, std::span<const Index> s) {
  const Group &amb = g.ambient();
  ElementSet mask = amb.empty_set();
  for (auto i = g.mask().find_first(); i != ElementSet::npos; i = g.mask().find_next(i)) {
    Index x = static_cast<Index>(i);
    bool commutes = true;
    for (Index y : s) {
      if (amb.mul(x, y) != amb.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes)
      mask.set(x);
  }
  return Subgroup::from_mask(g.parent(), std::move(mask));
}

Subgroup centralizer(const Subgroup &g, const Subgroup &s) {
  require_common_parent(g, s);
  return centralizer(g, s.generators());
}

Subgroup center(const Subgroup &g) { return centralizer(g, g.generators()); }

Subgroup normal_core(const Subgroup &g, const Subgroup &h) {
  require_common_parent(g, h);
  Subgroup core = h;
  for (;;) {
    ElementSet mask = core.mask();
    for (Index t : g.generators())
      mask &= conjugate(core, t).mask();
    if (mask == core.mask())
      return core;
    core = Subgroup::from_mask(g.parent(), std::move(mask));
  }
}

// --- commutators and series -----------------------------------------------------------------

Subgroup commutator_subgroup(const Subgroup &h, const Subgroup &k) {
  require_common_parent(h, k);
  const Group &amb = h.ambient();
  std::vector<Index> gens;
  for (Index a : h.generators())
    for (Index b : k.generators())
      gens.push_back(amb.comm(a, b));
  Subgroup seed = Subgroup::generated(h.parent(), std::move(gens));
  return normal_closure(seed, join(h, k));
}

Subgroup commutator_with_map(const Subgroup &n, std::span<const Index> map) {
  const Group &amb = n.ambient();
  ElementSet values = amb.empty_set();
  for (auto i = n.mask().find_first(); i != ElementSet::npos; i = n.mask().find_next(i))
    values.set(amb.mul(amb.inv(static_cast<Index>(i)), map[i]));
  return Subgroup::generated_by_set(n.parent(), values);
}

bool is_soluble(const Subgroup &g) {
  Subgroup d = g;
  while (!d.is_trivial()) {
    Subgroup next = commutator_subgroup(d, d);
    if (next == d)
      return false;
    d = std::move(next);
  }
  return true;
}

bool is_nilpotent(const Subgroup &g) {
  Subgroup gamma = g;
  while (!gamma.is_trivial()) {
    Subgroup next = commutator_subgroup(gamma, g);
    if (next == gamma)
      return false;
    gamma = std::move(next);
  }
  return true;
}

bool is_perfect(const Subgroup &g) { return commutator_subgroup(g, g) == g; }

bool is_p_group(const Subgroup &g, std::size_t p) {
  std::size_t n = g.order();
  while (n % p == 0)
    n /= p;
  return n == 1;
}

SubnormalWitness is_subnormal(const Subgroup &a, const Subgroup &g) {
  require_common_parent(a, g);
  SubnormalWitness w;
  w.chain.push_back(g);
  for (;;) {
    Subgroup next = normal_closure(a, w.chain.back());
    if (next == w.chain.back())
      break;
    w.chain.push_back(std::move(next));
  }
  w.subnormal = w.chain.back() == a;
  return w;
}

// --- quotients ------------------------------------------------------------------------------

QuotientMap::QuotientMap(Subgroup source, Subgroup kernel)
    : source_(std::move(source)), kernel_(std::move(kernel)) {
  const Group &amb = source_.ambient();
  coset_.assign(amb.order(), kNoCoset);
  const auto kernel_elems = kernel_.elements();
  const ElementSet &m = source_.mask();
  for (auto i = m.find_first(); i != ElementSet::npos; i = m.find_next(i)) {
    if (coset_[i] != kNoCoset)
      continue;
    const auto label = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(static_cast<Index>(i));
    for (Index n : kernel_elems)
      coset_[amb.mul(n, static_cast<Index>(i))] = label;
  }
  std::vector<Permutation> gens;
  for (Index t : source_.generators())
    gens.push_back(image_of(t));
  if (gens.empty())
    gens.push_back(Permutation::identity(reps_.size()));
  image_ = Group::close(std::move(gens));
}

Permutation QuotientMap::image_of(Index g) const {
  const Group &amb = source_.ambient();
  std::vector<Point> images(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c)
    images[c] = coset_[amb.mul(reps_[c], g)];
  return Permutation(std::move(images));
}

Index QuotientMap::image_index(Index g) const { return image_->require_index(image_of(g)); }

Index QuotientMap::lift(Index e) const { return reps_[image_->element(e)(0)]; }

Subgroup QuotientMap::image_of(const Subgroup &h) const {
  require_common_parent(h, source_);
  std::vector<Index> gens;
  for (Index t : h.generators())
    gens.push_back(image_index(t));
  return Subgroup::generated(image_, std::move(gens));
}

Subgroup QuotientMap::preimage_of(const Subgroup &s) const {
  if (s.parent() != image_)
    throw ValidationError("subgroup does not live in this quotient's image");
  std::vector<Index> gens = kernel_.generators();
  for (Index e : s.generators())
    gens.push_back(lift(e));
  return Subgroup::generated(source_.parent(), std::move(gens));
}

QuotientMap quotient(const Subgroup &g, const Subgroup &n) {
  require_common_parent(g, n);
  if (!g.contains(n) || !is_normal(n, g))
    throw PreconditionError("quotient kernel " + n.describe() + " is not normal");
  return QuotientMap(g, n);
}

// --- normal lattice ------------------------------------------------------------------------------

ConjugacyClassTable conjugacy_classes(const Subgroup &g) {
  return conjugation_orbits(g.ambient(), g.mask(), g.generators());
}

namespace {

std::vector<Subgroup> class_closures(const Subgroup &g) {
  auto classes = conjugacy_classes(g);
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Subgroup> out;
  for (Index r : classes.representative_indices) {
    if (r == Group::identity())
      continue;
    Subgroup c = normal_closure(Subgroup::generated(g.parent(), std::vector<Index>{r}), g);
    if (seen.insert(c).second)
      out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

} // namespace

NormalLattice normal_subgroups(const Subgroup &g, std::size_t count_cap) {
  NormalLattice lat;
  lat.group = g;
  const auto closures = class_closures(g);

  std::unordered_set<Subgroup, SubgroupHash> seen;
  lat.members.push_back(Subgroup::trivial(g.parent()));
  seen.insert(lat.members.back());
  for (std::size_t k = 0; k < lat.members.size(); ++k) {
    for (const auto &c : closures) {
      if (lat.members[k].contains(c))
        continue;
      Subgroup j = join(lat.members[k], c);
      if (seen.insert(j).second) {
        if (seen.size() > count_cap)
          throw ResourceError("normal lattice exceeds " + std::to_string(count_cap) + " members",
                              seen.size());
        lat.members.push_back(std::move(j));
      }
    }
  }
  std::sort(lat.members.begin(), lat.members.end(), subgroup_less);
  for (std::size_t i = 1; i < lat.members.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (lat.members[j].order() < lat.members[i].order() && lat.includes(j, i))
        minimal = false;
    if (minimal)
      lat.minimal_members.push_back(i);
  }
  return lat;
}

std::vector<Subgroup> minimal_normals(const Subgroup &g) {
  auto lat = normal_subgroups(g);
  std::vector<Subgroup> out;
  for (auto i : lat.minimal_members)
    out.push_back(lat.members[i]);
  return out;
}

Subgroup socle(const Subgroup &g) {
  Subgroup s = Subgroup::trivial(g.parent());
  for (const auto &m : minimal_normals(g))
    s = join(s, m);
  return s;
}

bool is_simple(const Subgroup &g) {
  if (g.order() <= 1)
    return false;
  for (const auto &c : class_closures(g))
    if (!(c == g))
      return false;
  return true;
}

bool is_quasisimple(const Subgroup &g) {
  if (g.order() <= 1 || !is_perfect(g))
    return false;
  Subgroup z = center(g);
  if (z.is_trivial())
    return is_simple(g);
  auto q = quotient(g, z);
  return is_simple(Subgroup::whole(q.image()));
}

} // namespace gfit
