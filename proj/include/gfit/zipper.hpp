#ifndef GFIT_ZIPPER_HPP
#define GFIT_ZIPPER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gfit/series.hpp"
#include "gfit/subgroup.hpp"

namespace gfit {

inline constexpr std::size_t kDefaultLatticeOrderCap = 360;
inline constexpr std::size_t kDefaultLatticeMemberCap = 100000;

struct LatticeCaps {
  std::size_t max_order = kDefaultLatticeOrderCap;
  std::size_t max_members = kDefaultLatticeMemberCap;
};

/// Every subgroup of a small group, ordered by (order, fingerprint).
struct SubgroupLattice {
  GroupPtr parent;
  std::vector<Subgroup> members;
  // Indices of the maximal proper subgroups.
  std::vector<std::size_t> maximal;

  std::size_t index_of(const Subgroup &s) const; // throws if absent
  bool includes(std::size_t small, std::size_t big) const {
    return members[big].contains(members[small]);
  }
};

// Cyclic subgroups closed under joining with cyclic subgroups.
SubgroupLattice all_subgroups(const GroupPtr &g, const LatticeCaps &caps = {});

// H_0 = H, H_{i+1} = <A^{H_i}>, down to the stable term F(A, H).
SeriesRecord normal_closure_descent(const Subgroup &a, const Subgroup &h);

// Checks on a computed descent of A in H: each term normal in the previous
// one, each term subnormal in H, and <A^F> = F for the stable term F.
// Returns human-readable failures (empty when all hold).
std::vector<std::string> check_descent(const SeriesRecord &descent, const Subgroup &a, const Subgroup &h);

enum class ZipperBranch { y_equals_g, unique_maximal, neither };

std::string to_string(ZipperBranch b);

struct ZipperCase {
  Subgroup a;
  // Proper overgroups H of A with <A^H> = H.
  std::vector<Subgroup> omega;
  Subgroup y;
  std::vector<Subgroup> maximal_over_a;
  ZipperBranch branch = ZipperBranch::neither;
  // Diagnostics: {F(A,M) : M maximal over A} has a unique maximal element.
  bool unique_max_element = false;
  // Failed auxiliary checks (descent series properties, overgroup containment, the
  // stable term in overgroups where A is subnormal).
  std::vector<std::string> failures;

  bool valid() const { return branch != ZipperBranch::neither && failures.empty(); }
};

// PreconditionError unless A is proper and <A^G> = G.
ZipperCase zipper_case(const SubgroupLattice &lattice, const Subgroup &a);

bool unique_max_element_check(const SubgroupLattice &lattice, const Subgroup &a);

// Exhaustive oracle: is there a chain A = X_0 <| X_1 <| ... <| X_r = G
// through lattice members?
bool subnormal_by_search(const SubgroupLattice &lattice, const Subgroup &a, const Subgroup &g);

} // namespace gfit

#endif
