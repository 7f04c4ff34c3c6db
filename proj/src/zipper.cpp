#include "gfit/zipper.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "gfit/errors.hpp"

namespace gfit {

std::string to_string(ZipperBranch b) {
  switch (b) {
  case ZipperBranch::y_equals_g:
    return "Y_equals_G";
  case ZipperBranch::unique_maximal:
    return "unique_maximal";
  case ZipperBranch::neither:
    return "neither";
  }
  return "unknown";
}

std::size_t SubgroupLattice::index_of(const Subgroup &s) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].order() == s.order() && members[i].mask() == s.mask())
      return i;
  throw ValidationError("subgroup " + s.describe() + " is not in the lattice");
}

SubgroupLattice all_subgroups(const GroupPtr &g, const LatticeCaps &caps) {
  if (g->order() > caps.max_order)
    throw ResourceError("lattice enumeration needs |G| <= " + std::to_string(caps.max_order), g->order());

  std::unordered_set<ElementSet> seen;
  std::vector<Subgroup> cyclic;
  for (Index i = 1; i < g->order(); ++i) {
    Subgroup c = Subgroup::generated(g, std::vector<Index>{i});
    if (seen.insert(c.mask()).second)
      cyclic.push_back(std::move(c));
  }

  std::vector<Subgroup> members{Subgroup::trivial(g)};
  seen.insert(members.front().mask());
  for (auto &c : cyclic)
    members.push_back(c);
  // Every subgroup is a join of cyclic subgroups, so closing under
  // "join with one cyclic subgroup" reaches all of them.
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (const auto &c : cyclic) {
      if (members[k].contains(c.generators().front()))
        continue;
      Subgroup j = join(members[k], c);
      if (seen.insert(j.mask()).second) {
        if (seen.size() > caps.max_members)
          throw ResourceError("subgroup lattice exceeds " + std::to_string(caps.max_members) + " members",
                              seen.size());
        members.push_back(std::move(j));
      }
    }
  }

  std::vector<std::pair<Fingerprint, std::size_t>> keys;
  for (std::size_t i = 0; i < members.size(); ++i)
    keys.emplace_back(members[i].fingerprint(), i);
  std::sort(keys.begin(), keys.end(), [&](const auto &x, const auto &y) {
    if (members[x.second].order() != members[y.second].order())
      return members[x.second].order() < members[y.second].order();
    return x.first < y.first;
  });

  SubgroupLattice lat;
  lat.parent = g;
  for (auto &[fp, i] : keys)
    lat.members.push_back(std::move(members[i]));

  const std::size_t n = lat.members.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < n && maximal; ++j)
      if (lat.members[j].order() > lat.members[i].order() && lat.includes(i, j))
        maximal = false;
    if (maximal)
      lat.maximal.push_back(i);
  }
  return lat;
}

SeriesRecord normal_closure_descent(const Subgroup &a, const Subgroup &h) {
  require_common_parent(a, h);
  if (!h.contains(a))
    throw ValidationError(a.describe() + " is not contained in " + h.describe());
  SeriesRecord s{SeriesKind::normal_closure_descent, {h}, 0};
  for (;;) {
    Subgroup next = normal_closure(a, s.terms.back());
    if (next == s.terms.back())
      break;
    s.terms.push_back(std::move(next));
  }
  s.length = s.terms.size() - 1;
  return s;
}

std::vector<std::string> check_descent(const SeriesRecord &descent, const Subgroup &a, const Subgroup &h) {
  std::vector<std::string> failures;
  const auto &t = descent.terms;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (!is_normal(t[i + 1], t[i]))
      failures.push_back("H_" + std::to_string(i + 1) + " not normal in H_" + std::to_string(i));
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!is_subnormal(t[i], h).subnormal)
      failures.push_back("H_" + std::to_string(i) + " not subnormal in H");
  if (!(normal_closure(a, descent.stable()) == descent.stable()))
    failures.push_back("<A^F(A,H)> != F(A,H)");
  return failures;
}

namespace {

std::vector<std::size_t> maximal_over(const SubgroupLattice &lattice, const Subgroup &a) {
  std::vector<std::size_t> out;
  for (std::size_t i : lattice.maximal)
    if (lattice.members[i].contains(a))
      out.push_back(i);
  return out;
}

bool has_unique_maximal_element(const std::vector<Subgroup> &values) {
  std::vector<const Subgroup *> tops;
  for (const auto &v : values) {
    bool dominated = false;
    for (const auto &w : values)
      if (w.order() > v.order() && w.contains(v))
        dominated = true;
    if (!dominated && std::none_of(tops.begin(), tops.end(), [&](const Subgroup *t) { return *t == v; }))
      tops.push_back(&v);
  }
  return tops.size() == 1;
}

} // namespace

bool unique_max_element_check(const SubgroupLattice &lattice, const Subgroup &a) {
  std::vector<Subgroup> values;
  for (std::size_t i : maximal_over(lattice, a))
    values.push_back(normal_closure_descent(a, lattice.members[i]).stable());
  return values.empty() || has_unique_maximal_element(values);
}

ZipperCase zipper_case(const SubgroupLattice &lattice, const Subgroup &a) {
  Subgroup g = Subgroup::whole(lattice.parent);
  if (a.is_whole() || !(normal_closure(a, g) == g))
    throw PreconditionError("zipper case needs a proper A with <A^G> = G, got " + a.describe());

  ZipperCase zc;
  zc.a = a;
  zc.y = Subgroup::trivial(lattice.parent);
  for (const auto &h : lattice.members) {
    if (h.is_whole() || !h.contains(a))
      continue;
    if (normal_closure(a, h) == h) {
      zc.omega.push_back(h);
      zc.y = join(zc.y, h);
    }
  }

  std::vector<Subgroup> stable_terms;
  std::vector<bool> subnormal_in;
  for (std::size_t i : maximal_over(lattice, a)) {
    const Subgroup &m = lattice.members[i];
    zc.maximal_over_a.push_back(m);
    SeriesRecord d = normal_closure_descent(a, m);
    for (auto &f : check_descent(d, a, m))
      zc.failures.push_back("in " + m.describe() + ": " + f);
    const Subgroup &fam = d.stable();
    for (const auto &l : zc.omega)
      if (m.contains(l) && !fam.contains(l))
        zc.failures.push_back("omega member " + l.describe() + " <= " + m.describe() + " but not <= F(A,M)");
    stable_terms.push_back(fam);
    subnormal_in.push_back(fam == a);
  }
  zc.unique_max_element = stable_terms.empty() || has_unique_maximal_element(stable_terms);

  if (zc.y == g)
    zc.branch = ZipperBranch::y_equals_g;
  else if (zc.maximal_over_a.size() == 1)
    zc.branch = ZipperBranch::unique_maximal;
  else
    zc.branch = ZipperBranch::neither;

  if (zc.branch == ZipperBranch::unique_maximal && !(stable_terms.front() == zc.y))
    zc.failures.push_back("Y != F(A,M) for the unique maximal M");

  // If A is subnormal in all but at most one maximal overgroup, the stable
  // term is A itself in each of the others.
  const auto not_subnormal = std::count(subnormal_in.begin(), subnormal_in.end(), false);
  if (zc.maximal_over_a.size() >= 2 && not_subnormal <= 1) {
    for (std::size_t k = 0; k < stable_terms.size(); ++k)
      if (subnormal_in[k] && !(stable_terms[k] == a))
        zc.failures.push_back("F(A,L) != A for subnormal overgroup " + zc.maximal_over_a[k].describe());
  }
  return zc;
}

bool subnormal_by_search(const SubgroupLattice &lattice, const Subgroup &a, const Subgroup &g) {
  if (!g.contains(a))
    return false;
  const auto &ms = lattice.members;
  std::vector<bool> reached(ms.size(), false);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i] == a) {
      reached[i] = true;
      queue.push_back(i);
    }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Subgroup &y = ms[queue[k]];
    if (y == g)
      return true;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (reached[i] || ms[i].order() <= y.order() || !g.contains(ms[i]) || !ms[i].contains(y))
        continue;
      if (is_normal(y, ms[i])) {
        reached[i] = true;
        queue.push_back(i);
      }
    }
  }
  return false;
}

} // namespace gfit
