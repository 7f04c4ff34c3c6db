#ifndef GFIT_ENGEL_HPP
#define GFIT_ENGEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gfit/series.hpp"
#include "gfit/subgroup.hpp"

namespace gfit {

/// An automorphism of a materialized group, stored as an element-level
/// table. Construction validates that the generator images extend to a
/// bijective homomorphism.
class AutomorphismMap {
public:
  // `images` holds one image per generator of `group`, in order.
  static AutomorphismMap make(GroupPtr group, std::vector<Permutation> images, std::string name = {});
  // Conjugation g -> t^-1 g t by a permutation t normalizing the group
  // (t itself need not be an element).
  static AutomorphismMap inner(GroupPtr group, const Permutation &t, std::string name = {});
  static AutomorphismMap identity(GroupPtr group);

  const GroupPtr &group() const noexcept { return group_; }
  const std::string &name() const noexcept { return name_; }
  const std::vector<Permutation> &images() const noexcept { return images_; }
  const std::vector<Index> &table() const noexcept { return table_; }
  std::size_t order() const noexcept { return order_; }
  bool is_involution() const noexcept { return order_ == 2; }
  // Set for actors built by inner().
  const std::optional<Permutation> &conjugator() const noexcept { return conjugator_; }

  Index apply(Index g) const { return table_[g]; }
  Permutation apply(const Permutation &g) const;

  // As a permutation of the group's element indices (0-based).
  Permutation as_element_permutation() const;

  Subgroup fixed_subgroup() const;

private:
  GroupPtr group_;
  std::string name_;
  std::vector<Permutation> images_;
  std::vector<Index> table_;
  std::size_t order_ = 1;
  std::optional<Permutation> conjugator_;
};

// [g, actor] = g^-1 * actor(g), evaluated inside the group. For an inner
// actor x this is g^-1 x^-1 g x.
Index commutator_with_actor(Index g, const AutomorphismMap &actor);
Permutation commutator_with_actor(const Permutation &g, const AutomorphismMap &actor);

/// E_{G,0} = G, E_{G,k+1} = {[e, actor] : e in E_{G,k}}, followed until the
/// set sequence cycles, together with the generated subgroups and the
/// descent G >= [G,a] >= [[G,a],a] >= ...
struct EngelChain {
  std::vector<ElementSet> sets;
  std::vector<Subgroup> generated;
  // The next set would equal sets[cycle_start]; always cycle_start >= 1.
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
  Subgroup stable_K;
  SeriesRecord descent_H;

  // Least k >= 1 with E_{G,k} = {1}, if any.
  std::optional<std::size_t> first_trivial() const;
  // Least k >= 1 from which <E_{G,k}> is constant.
  std::size_t stabilization_index() const;
};

EngelChain engel_chain(const AutomorphismMap &actor, std::size_t k_cap = 0);

// Only the set sequence; cheaper than engel_chain when the generated
// subgroups are not needed. Returns (sets, cycle_start).
std::pair<std::vector<ElementSet>, std::size_t> engel_sets(const AutomorphismMap &actor,
                                                           std::size_t k_cap = 0);

bool baer_membership(const GroupPtr &g, Index x, std::size_t k_cap = 0);

struct InvolutionReport {
  AutomorphismMap alpha;
  ElementSet j_set;
  std::size_t two_part = 1;
  Subgroup generated_j;
  Subgroup fixed_points;
};

InvolutionReport j_set(const AutomorphismMap &alpha);

struct CentralizerIntersection {
  Subgroup intersection; // meet of C_G(alpha)^j over j in J
  Subgroup central_fixed; // Z(G) meet C_G(alpha)
  bool holds = false;
};

// Requires alpha involutory with [G, alpha] = G (PreconditionError
// otherwise).
CentralizerIntersection centralizer_intersection_check(const AutomorphismMap &alpha);

inline constexpr std::size_t kDefaultExtensionCap = 5000;

// <right translations of G, alpha> acting on the elements of G (points are
// element indices + 1).
GroupPtr holomorph_extension(const AutomorphismMap &alpha, std::size_t cap = kDefaultExtensionCap);

} // namespace gfit

#endif
