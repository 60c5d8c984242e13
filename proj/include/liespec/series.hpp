#pragma once

#include <vector>

#include "liespec/rational.hpp"

namespace liespec {

// One sampled row of a counting experiment: exact parameter and count,
// floating leading term and remainder.
struct SeriesRow {
  Rat param{0};        // lambda, R, t, z ... depending on the producer
  Rat count{0};        // exact count (integral for unweighted lattices)
  double leading = 0;  // predicted leading term
  double remainder = 0;
  double normalized = 0;  // |remainder| / param^theta when a producer sets it
};

struct CountSeries {
  std::vector<SeriesRow> rows;
};

}  // namespace liespec
