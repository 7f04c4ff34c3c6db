#include "gfit/group.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>
#include <unordered_set>

#include "gfit/errors.hpp"

namespace gfit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

} // namespace

std::string Fingerprint::hex() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

FingerprintBuilder::FingerprintBuilder(std::size_t degree)
    : degree_(degree), a_(1469598103934665603ull ^ degree), b_(splitmix(degree)) {}

void FingerprintBuilder::add(std::span<const Point> images) {
  for (Point v : images) {
    a_ = (a_ ^ v) * 1099511628211ull;
    b_ = splitmix(b_ ^ (static_cast<std::uint64_t>(v) + 0x100000000ull * (count_ + 1)));
  }
  ++count_;
  a_ = (a_ ^ 0xffu) * 1099511628211ull;
}

Fingerprint FingerprintBuilder::finish() const {
  return Fingerprint{degree_, count_, splitmix(a_ ^ count_), b_};
}

// --- stabilizer chain -------------------------------------------------------

namespace {

void rebuild_orbit(StabilizerChain::Level &level, std::size_t degree) {
  level.orbit.assign(1, level.base);
  level.transversal.assign(1, Permutation::identity(degree));
  level.position.assign(degree, -1);
  level.position[level.base] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto &s : level.generators) {
      Point img = s(level.orbit[k]);
      if (level.position[img] < 0) {
        level.position[img] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(img);
        level.transversal.push_back(level.transversal[k] * s);
      }
    }
  }
}

} // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto &g : generators)
    if (!g.is_identity())
      gens.push_back(g);

  std::vector<bool> moved(degree, false);
  for (const auto &g : gens)
    for (Point i = 0; i < degree; ++i)
      if (g(i) != i)
        moved[i] = true;
  for (Point i = 0; i < degree; ++i)
    if (moved[i])
      levels_.push_back(Level{i, {}, {}, {}, {}});

  const std::size_t depth = levels_.size();
  for (std::size_t l = 0; l < depth; ++l) {
    for (const auto &g : gens) {
      bool fixes = true;
      for (std::size_t m = 0; m < l && fixes; ++m)
        fixes = g(levels_[m].base) == levels_[m].base;
      if (fixes)
        levels_[l].generators.push_back(g);
    }
    rebuild_orbit(levels_[l], degree);
  }

  // sift h from level `from`; returns the residue and the level where it stopped
  auto sift = [&](Permutation h, std::size_t from) {
    std::size_t l = from;
    for (; l < depth; ++l) {
      const auto &lev = levels_[l];
      std::int32_t pos = lev.position[h(lev.base)];
      if (pos < 0)
        break;
      h *= lev.transversal[static_cast<std::size_t>(pos)].inverse();
    }
    return std::make_pair(std::move(h), l);
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(depth) - 1;
  while (i >= 0) {
    auto &lev = levels_[static_cast<std::size_t>(i)];
    bool extended = false;
    for (std::size_t k = 0; k < lev.orbit.size() && !extended; ++k) {
      for (std::size_t s = 0; s < lev.generators.size() && !extended; ++s) {
        const Permutation &gen = lev.generators[s];
        Point img = gen(lev.orbit[k]);
        const Permutation &u_img = lev.transversal[static_cast<std::size_t>(lev.position[img])];
        Permutation h = lev.transversal[k] * gen * u_img.inverse();
        auto [residue, stop] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (stop < depth || !residue.is_identity()) {
          // The base holds every moved point, so a non-identity residue
          // always stops inside the chain.
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop && l < depth; ++l) {
            levels_[l].generators.push_back(residue);
            rebuild_orbit(levels_[l], degree);
          }
          i = static_cast<std::ptrdiff_t>(stop);
          extended = true;
        }
      }
    }
    if (!extended)
      --i;
  }

  std::erase_if(levels_, [](const Level &l) { return l.orbit.size() <= 1; });
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto &l : levels_)
    b.push_back(l.base);
  return b;
}

std::size_t StabilizerChain::order() const {
  std::size_t n = 1;
  for (const auto &l : levels_) {
    if (n > std::numeric_limits<std::size_t>::max() / l.orbit.size())
      return std::numeric_limits<std::size_t>::max();
    n *= l.orbit.size();
  }
  return n;
}

bool StabilizerChain::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  Permutation h = g;
  for (const auto &lev : levels_) {
    std::int32_t pos = lev.position[h(lev.base)];
    if (pos < 0)
      return false;
    h *= lev.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return h.is_identity();
}

// --- group --------------------------------------------------------------------

Group::Group(Private, std::size_t degree, std::vector<Permutation> generators,
             std::vector<Permutation> sorted_elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {
  index_.reserve(elements_.size() * 2);
  FingerprintBuilder fp(degree_);
  for (Index i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
    fp.add(elements_[i].images());
  }
  fingerprint_ = fp.finish();
  inverse_.resize(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i)
    inverse_[i] = require_index(elements_[i].inverse());
  for (const auto &g : generators_)
    generator_indices_.push_back(require_index(g));
}

GroupPtr Group::close(std::vector<Permutation> generators, std::size_t cap) {
  if (generators.empty())
    throw ValidationError("a group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  if (degree == 0)
    throw ValidationError("degree must be positive");
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw ValidationError("generators have mixed degrees " + std::to_string(degree) + " and " +
                            std::to_string(g.degree()));

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue;
  queue.push_back(Permutation::identity(degree));
  seen.insert(queue.back());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto &s : generators) {
      Permutation p = queue[k] * s;
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw ResourceError("element cap " + std::to_string(cap) + " exceeded during closure",
                              seen.size());
        queue.push_back(std::move(p));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return std::make_shared<const Group>(Private{}, degree, std::move(generators), std::move(queue));
}

GroupPtr Group::from_sorted_elements(std::vector<Permutation> generators,
                                     std::vector<Permutation> sorted_elements) {
  if (sorted_elements.empty())
    throw ValidationError("empty element list");
  std::size_t degree = sorted_elements.front().degree();
  if (generators.empty())
    generators.push_back(Permutation::identity(degree));
  return std::make_shared<const Group>(Private{}, degree, std::move(generators),
                                       std::move(sorted_elements));
}

std::optional<Index> Group::index_of(const Permutation &g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Index Group::require_index(const Permutation &g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    throw ValidationError(format_cycles(g) + " is not an element of the group");
  return it->second;
}

const StabilizerChain &Group::chain() const {
  std::call_once(chain_once_, [this] {
    chain_ = std::make_unique<StabilizerChain>(degree_, generators_);
  });
  return *chain_;
}

bool Group::chain_contains(const Permutation &g) const { return chain().contains(g); }

void Group::build_table() const {
  const std::size_t n = order();
  table_.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      table_[a * n + b] = static_cast<std::uint16_t>(index_.at(elements_[a] * elements_[b]));
}

Index Group::mul(Index a, Index b) const {
  const std::size_t n = order();
  if (n <= kTableCap) {
    std::call_once(table_once_, [this] { build_table(); });
    return table_[a * n + b];
  }
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t Group::element_order(Index a) const { return elements_[a].order(); }

bool Group::is_abelian() const {
  for (Index a : generator_indices_)
    for (Index b : generator_indices_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

// --- free helpers -----------------------------------------------------------------

ElementSet closure(const Group &g, std::span<const Index> gens) {
  ElementSet set(g.order());
  set.set(Group::identity());
  std::vector<Index> queue{Group::identity()};
  queue.reserve(64);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Index s : gens) {
      Index p = g.mul(queue[k], s);
      if (!set.test(p)) {
        set.set(p);
        queue.push_back(p);
      }
    }
  }
  return set;
}

std::vector<Index> set_members(const ElementSet &s) {
  std::vector<Index> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Index>(i));
  return out;
}

Fingerprint fingerprint_of(const Group &g, const ElementSet &s) {
  FingerprintBuilder fp(g.degree());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    fp.add(g.element(static_cast<Index>(i)).images());
  return fp.finish();
}

ConjugacyClassTable conjugation_orbits(const Group &g, const ElementSet &members,
                                       std::span<const Index> gens) {
  ConjugacyClassTable table;
  ElementSet seen(g.order());
  std::vector<Index> orbit;
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
    if (seen.test(i))
      continue;
    orbit.assign(1, static_cast<Index>(i));
    seen.set(i);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (Index t : gens) {
        Index c = g.conj(orbit[k], t);
        if (!seen.test(c)) {
          seen.set(c);
          orbit.push_back(c);
        }
      }
    }
    table.representative_indices.push_back(static_cast<Index>(i));
    table.representatives.push_back(g.element(static_cast<Index>(i)));
    table.class_sizes.push_back(orbit.size());
  }
  return table;
}

ConjugacyClassTable conjugacy_classes(const Group &g) {
  return conjugation_orbits(g, g.full_set(), g.generator_indices());
}

} // namespace gfit
