#ifndef GFIT_GROUP_HPP
#define GFIT_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gfit/perm.hpp"

namespace gfit {

using Index = std::uint32_t;

// Subset of a materialized group, addressed by element index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultElementCap = 200000;
// Groups up to this order get a full multiplication table on first use.
inline constexpr std::size_t kTableCap = 6000; // table of at most 72 MB

/// Canonical identity key of a finite permutation group: a 128-bit digest of
/// the sorted element list together with degree and order.
struct Fingerprint {
  std::uint64_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
  friend auto operator<=>(const Fingerprint &, const Fingerprint &) = default;

  std::string hex() const;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint &f) const noexcept {
    return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9e3779b97f4a7c15ull) ^ f.order);
  }
};

// Incremental digest; feed permutations in sorted order.
class FingerprintBuilder {
public:
  explicit FingerprintBuilder(std::size_t degree);
  void add(std::span<const Point> images);
  Fingerprint finish() const;

private:
  std::uint64_t degree_;
  std::uint64_t count_ = 0;
  std::uint64_t a_;
  std::uint64_t b_;
};

/// Stabilizer chain over the base of all moved points in ascending order,
/// built by deterministic Schreier-Sims. Levels with a trivial basic orbit
/// are dropped after construction.
class StabilizerChain {
public:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    // transversal[k] maps base to orbit[k]
    std::vector<Permutation> transversal;
    std::vector<std::int32_t> position; // point -> index in orbit, or -1
  };

  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level> &levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  // Product of basic orbit lengths; saturates at SIZE_MAX.
  std::size_t order() const;

  bool contains(const Permutation &g) const;

private:
  std::size_t degree_;
  std::vector<Level> levels_;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite permutation group with its element set materialized in
/// lexicographic order of image arrays (so the identity has index 0).
/// Immutable after construction; lazy caches are filled under call_once.
class Group {
  struct Private {};

public:
  Group(Private, std::size_t degree, std::vector<Permutation> generators,
        std::vector<Permutation> sorted_elements);

  Group(const Group &) = delete;
  Group &operator=(const Group &) = delete;

  // Breadth-first closure. Throws ResourceError carrying the partial count
  // once more than `cap` elements have been seen.
  static GroupPtr close(std::vector<Permutation> generators, std::size_t cap = kDefaultElementCap);

  // Trusted constructor for element lists already known to form a group.
  static GroupPtr from_sorted_elements(std::vector<Permutation> generators,
                                       std::vector<Permutation> sorted_elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const std::vector<Index> &generator_indices() const noexcept { return generator_indices_; }
  const std::vector<Permutation> &elements() const noexcept { return elements_; }
  const Permutation &element(Index i) const { return elements_[i]; }
  const Fingerprint &fingerprint() const noexcept { return fingerprint_; }

  std::optional<Index> index_of(const Permutation &g) const;
  // Throws ValidationError for non-members.
  Index require_index(const Permutation &g) const;
  bool contains(const Permutation &g) const { return index_of(g).has_value(); }

  // Membership via the stabilizer chain; agrees with contains().
  bool chain_contains(const Permutation &g) const;
  const StabilizerChain &chain() const;

  static constexpr Index identity() noexcept { return 0; }
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index conj(Index g, Index h) const { return mul(mul(inverse_[h], g), h); }
  Index comm(Index g, Index h) const { return mul(inverse_[g], conj(g, h)); }
  std::size_t element_order(Index a) const;

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet full_set() const {
    ElementSet s(order());
    s.set();
    return s;
  }

  bool is_abelian() const;

private:
  void build_table() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Index> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Index, PermutationHash> index_;
  std::vector<Index> inverse_;
  Fingerprint fingerprint_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint16_t> table_;
  mutable std::once_flag chain_once_;
  mutable std::unique_ptr<StabilizerChain> chain_;
};

// Subgroup generated by `gens` as an element set of `g`.
ElementSet closure(const Group &g, std::span<const Index> gens);

// Indices in ascending order.
std::vector<Index> set_members(const ElementSet &s);

// Fingerprint of a subset known to be a subgroup.
Fingerprint fingerprint_of(const Group &g, const ElementSet &s);

struct ConjugacyClassTable {
  std::vector<Permutation> representatives;
  std::vector<Index> representative_indices;
  std::vector<std::size_t> class_sizes;
};

// Orbits of `members` under conjugation by `gens`; representatives are the
// least index (lexicographically least image array) of each orbit, listed
// in ascending order.
ConjugacyClassTable conjugation_orbits(const Group &g, const ElementSet &members,
                                       std::span<const Index> gens);

ConjugacyClassTable conjugacy_classes(const Group &g);

} // namespace gfit

#endif
