#ifndef GFIT_CHAR_SERIES_HPP
#define GFIT_CHAR_SERIES_HPP

#include <cstddef>
#include <optional>

#include "gfit/series.hpp"
#include "gfit/subgroup.hpp"

namespace gfit {

// Joins of normal-lattice members with a given property. The overloads
// taking a lattice reuse it; it must be the normal lattice of `g`.
Subgroup fitting_subgroup(const Subgroup &g);
Subgroup fitting_subgroup(const Subgroup &g, const NormalLattice &lattice);
Subgroup o_p_core(const Subgroup &g, std::size_t p);
Subgroup odd_core(const Subgroup &g);
Subgroup soluble_radical(const Subgroup &g);
Subgroup soluble_radical(const Subgroup &g, const NormalLattice &lattice);

// E(G), the subgroup generated by the components. Memoized on fingerprint.
Subgroup layer(const Subgroup &g);

// F*(G) = F(G)E(G). With `crosscheck`, also computes the socle-based
// formula and throws ConsistencyError if the two disagree.
Subgroup generalized_fitting(const Subgroup &g, bool crosscheck = false);

// Independent route: the preimage of soc(C_G(F)F / F) in G.
Subgroup generalized_fitting_via_socle(const Subgroup &g);

SeriesRecord gen_fitting_series(const Subgroup &g, bool crosscheck = false);
std::size_t gen_fitting_height(const Subgroup &g);

// Soluble groups only; PreconditionError otherwise.
SeriesRecord fitting_series(const Subgroup &g);
std::size_t fitting_height(const Subgroup &g);

std::size_t insoluble_length(const Subgroup &g);
// R_h(G): join of all normal subgroups of insoluble length <= h.
Subgroup insoluble_radical(const Subgroup &g, std::size_t h);
Subgroup insoluble_radical(const Subgroup &g, std::size_t h, const NormalLattice &lattice);
// R_0 <= R_1 <= ... <= R_{h_max}, stopping early once G is reached.
SeriesRecord upper_insoluble_series(const Subgroup &g, std::size_t h_max);

struct CharacteristicProfile {
  Subgroup fitting;
  Subgroup layer;
  Subgroup gen_fitting;
  Subgroup soluble_radical;
  Subgroup odd_core;
  std::optional<std::size_t> fitting_height;
  std::size_t gen_fitting_height = 0;
  std::size_t insoluble_length = 0;
};

CharacteristicProfile characteristic_profile(const Subgroup &g, bool crosscheck = false);

// Drops all memoized invariants (tests use this to time cold paths).
void clear_invariant_cache();

} // namespace gfit

#endif
