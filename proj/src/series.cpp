#include "gfit/series.hpp"

namespace gfit {

std::string to_string(SeriesKind kind) {
  switch (kind) {
  case SeriesKind::fitting:
    return "fitting";
  case SeriesKind::generalized_fitting:
    return "generalized_fitting";
  case SeriesKind::insoluble_upper:
    return "insoluble_upper";
  case SeriesKind::derived:
    return "derived";
  case SeriesKind::lower_central:
    return "lower_central";
  case SeriesKind::engel_chain:
    return "engel_chain";
  case SeriesKind::normal_closure_descent:
    return "normal_closure_descent";
  }
  return "unknown";
}

SeriesRecord derived_series(const Subgroup &g) {
  SeriesRecord s{SeriesKind::derived, {g}, 0};
  for (;;) {
    Subgroup next = commutator_subgroup(s.terms.back(), s.terms.back());
    if (next == s.terms.back())
      break;
    s.terms.push_back(std::move(next));
  }
  s.length = s.terms.size() - 1;
  return s;
}

SeriesRecord lower_central_series(const Subgroup &g) {
  SeriesRecord s{SeriesKind::lower_central, {g}, 0};
  for (;;) {
    Subgroup next = commutator_subgroup(s.terms.back(), g);
    if (next == s.terms.back())
      break;
    s.terms.push_back(std::move(next));
  }
  s.length = s.terms.size() - 1;
  return s;
}

} // namespace gfit
