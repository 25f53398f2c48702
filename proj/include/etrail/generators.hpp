#pragma once

#include <cstdint>

#include "etrail/debruijn.hpp"
#include "etrail/rng.hpp"
#include "etrail/timed_graph.hpp"

namespace etrail {

// Closed integer range; generators draw each parameter uniformly.
struct IntRange {
  int lo = 1;
  int hi = 1;
};

// Random instance with a planted trail: a random walk of m edges over n
// nodes becomes the edge set (edge i is the walk's i-th step), every edge
// gets a random interval of length <= w containing position i, and cost-form
// edges get uniform costs in [costLo, costHi] with the budget set to the
// planted placement's total. The identity placement (edge i at time i) is
// therefore always valid, so generated instances are YES instances.
struct RandomProfile {
  Orientation orientation = Orientation::Directed;
  bool costForm = false;
  IntRange n{5, 5};
  IntRange m{10, 10};
  IntRange w{3, 3};
  std::int64_t costLo = -5;
  std::int64_t costHi = 5;
};
TimedGraph gen_random_planted(const RandomProfile& p, Rng& rng);

// Random de Bruijn instance with a planted trail: a random string of length
// len is spelled, and every k-mer receives one availability interval shared
// by all of its copies — a random widening (to length <= w) of the span of
// its occurrence positions. Strings whose occurrence span already exceeds w
// are redrawn; ProfileInfeasible after maxResample failures. Cost form draws
// one cost vector per k-mer and sets the budget to the planted total.
struct RandomDbgProfile {
  IntRange sigma{2, 2};
  IntRange k{3, 3};
  IntRange len{12, 12};
  IntRange w{4, 4};
  bool costForm = false;
  std::int64_t costLo = -5;
  std::int64_t costHi = 5;
  int maxResample = 100;
};
DeBruijnGraph gen_random_planted_dbg(const RandomDbgProfile& p, Rng& rng);

}  // namespace etrail
