#ifndef GFIT_SERIES_HPP
#define GFIT_SERIES_HPP

#include <string>
#include <vector>

#include "gfit/subgroup.hpp"

namespace gfit {

enum class SeriesKind {
  fitting,
  generalized_fitting,
  insoluble_upper,
  derived,
  lower_central,
  engel_chain,
  normal_closure_descent,
};

std::string to_string(SeriesKind kind);

/// A chain of subgroups of one parent.
///
/// Ascending height series (fitting, generalized_fitting) list F_1, F_2, ...
/// ending at the group, and `length` is the height (number of terms).
/// Every other kind lists its terms from the first (G, or R_0) to the stable
/// term, and `length` counts the steps (terms - 1).
struct SeriesRecord {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  std::size_t length = 0;

  const Subgroup &stable() const { return terms.back(); }
};

SeriesRecord derived_series(const Subgroup &g);
SeriesRecord lower_central_series(const Subgroup &g);

} // namespace gfit

#endif
