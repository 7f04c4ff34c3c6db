#ifndef GFIT_SUBGROUP_HPP
#define GFIT_SUBGROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfit/group.hpp"

namespace gfit {

/// A subgroup of a materialized parent group, stored as an element mask over
/// the parent's indices together with a generating set. Value type; cheap to
/// copy relative to the computations that produce it.
///
/// Every algebra operation below takes its "group" arguments as Subgroups, so
/// the same routine works for a whole group (Subgroup::whole) and for any
/// subgroup of it without re-materializing.
class Subgroup {
public:
  Subgroup() = default;

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup generated(GroupPtr parent, std::vector<Index> gens);
  static Subgroup generated(GroupPtr parent, std::span<const Permutation> gens);
  // Subgroup generated by an arbitrary element subset.
  static Subgroup generated_by_set(GroupPtr parent, const ElementSet &set);
  // `mask` must already be closed; generators are chosen greedily.
  static Subgroup from_mask(GroupPtr parent, ElementSet mask);
  // Trusted: caller guarantees mask == closure(gens).
  static Subgroup from_parts(GroupPtr parent, ElementSet mask, std::vector<Index> gens);

  const GroupPtr &parent() const noexcept { return parent_; }
  const Group &ambient() const { return *parent_; }
  const ElementSet &mask() const noexcept { return mask_; }
  const std::vector<Index> &generators() const noexcept { return gens_; }
  std::vector<Index> elements() const { return set_members(mask_); }

  std::size_t order() const { return mask_.count(); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return parent_ && order() == parent_->order(); }

  bool contains(Index g) const { return mask_.test(g); }
  bool contains(const Permutation &g) const;
  bool contains(const Subgroup &other) const; // other <= *this

  Fingerprint fingerprint() const { return fingerprint_of(*parent_, mask_); }

  // Standalone copy of this subgroup as a group handle.
  GroupPtr materialize() const;

  std::vector<Permutation> generator_perms() const;
  std::string describe() const; // "<gens> order n"

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

private:
  Subgroup(GroupPtr parent, ElementSet mask, std::vector<Index> gens)
      : parent_(std::move(parent)), mask_(std::move(mask)), gens_(std::move(gens)) {}

  GroupPtr parent_;
  ElementSet mask_;
  std::vector<Index> gens_;
};

// Total order used wherever a deterministic listing of subgroups is needed:
// by order, then by mask.
bool subgroup_less(const Subgroup &a, const Subgroup &b);

struct SubgroupHash {
  std::size_t operator()(const Subgroup &s) const noexcept {
    return std::hash<ElementSet>{}(s.mask());
  }
};

// Throws ValidationError when the two subgroups live in different parents.
void require_common_parent(const Subgroup &a, const Subgroup &b);

Subgroup join(const Subgroup &a, const Subgroup &b);
Subgroup intersection(const Subgroup &a, const Subgroup &b);

// <A^G>: smallest subgroup containing A normalized by G.
Subgroup normal_closure(const Subgroup &a, const Subgroup &g);
bool is_normal(const Subgroup &n, const Subgroup &g);

// g^-1 A g, elementwise.
Subgroup conjugate(const Subgroup &a, Index g);

Subgroup centralizer(const Subgroup &g, std::span<const Index> s);
Subgroup centralizer(const Subgroup &g, const Subgroup &s);
Subgroup center(const Subgroup &g);
// Largest normal subgroup of G contained in H.
Subgroup normal_core(const Subgroup &g, const Subgroup &h);

// [H, K], normal in <H, K>.
Subgroup commutator_subgroup(const Subgroup &h, const Subgroup &k);
// [N, f] = <n^-1 f(n) : n in N> for an element-level map f on the parent.
Subgroup commutator_with_map(const Subgroup &n, std::span<const Index> map);

bool is_soluble(const Subgroup &g);
bool is_nilpotent(const Subgroup &g);
bool is_perfect(const Subgroup &g);
bool is_p_group(const Subgroup &g, std::size_t p);

struct SubnormalWitness {
  bool subnormal = false;
  // G = chain[0] >= chain[1] >= ... , each the normal closure of A in the
  // previous term; ends at the stable term.
  std::vector<Subgroup> chain;
};

SubnormalWitness is_subnormal(const Subgroup &a, const Subgroup &g);

/// Action of G on the right cosets Ng of a normal subgroup N. Cosets are
/// numbered in order of their least element index, so coset 0 is N itself
/// and each coset's representative is its least element.
class QuotientMap {
public:
  QuotientMap(Subgroup source, Subgroup kernel);

  const Subgroup &source() const noexcept { return source_; }
  const Subgroup &kernel() const noexcept { return kernel_; }
  const GroupPtr &image() const noexcept { return image_; }
  std::size_t index() const noexcept { return reps_.size(); }

  // Coset number of an element of the source.
  std::size_t coset_of(Index g) const { return coset_[g]; }
  Index representative(std::size_t coset) const { return reps_[coset]; }

  Permutation image_of(Index g) const;
  Index image_index(Index g) const;
  // Least-index element of the source mapping to image element `e`.
  Index lift(Index e) const;

  Subgroup image_of(const Subgroup &h) const;
  // Full preimage <N, lifts of S's generators> of a subgroup of the image.
  Subgroup preimage_of(const Subgroup &s) const;

private:
  Subgroup source_;
  Subgroup kernel_;
  std::vector<std::uint32_t> coset_; // indexed by parent element; sentinel for non-members
  std::vector<Index> reps_;
  GroupPtr image_;
};

// Throws PreconditionError when N is not normal in G.
QuotientMap quotient(const Subgroup &g, const Subgroup &n);

inline constexpr std::size_t kDefaultLatticeCountCap = 50000;

struct NormalLattice {
  Subgroup group;
  // All normal subgroups, ordered by subgroup_less (trivial first, group last).
  std::vector<Subgroup> members;
  // Indices into members of the minimal nontrivial ones.
  std::vector<std::size_t> minimal_members;

  bool includes(std::size_t small, std::size_t big) const {
    return members[big].contains(members[small]);
  }
};

NormalLattice normal_subgroups(const Subgroup &g, std::size_t count_cap = kDefaultLatticeCountCap);
std::vector<Subgroup> minimal_normals(const Subgroup &g);
Subgroup socle(const Subgroup &g);
bool is_simple(const Subgroup &g);
bool is_quasisimple(const Subgroup &g);

ConjugacyClassTable conjugacy_classes(const Subgroup &g);

} // namespace gfit

#endif
