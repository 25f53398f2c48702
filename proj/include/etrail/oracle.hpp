#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "etrail/rng.hpp"
#include "etrail/timed_graph.hpp"

namespace etrail {

// How complete trails are identified when counting / collecting:
//  - EdgeDistinct: a trail is a walk (node sequence plus edge-id sequence);
//    parallel copies are distinguished.
//  - NodeDistinct: a trail is the sequence of visited nodes only; parallel
//    copies are assigned canonically (earliest deadline first), so placements
//    differing only in which copy they use collapse to one trail.
enum class OracleMode { EdgeDistinct, NodeDistinct };

struct OracleOptions {
  OracleMode mode = OracleMode::EdgeDistinct;
  bool collect = false;       // keep the minimum-cost trails themselves
  std::size_t cap = 2000000;  // abort (CapExceeded) past this many completions
};

struct OracleReport {
  bool feasible = false;
  std::optional<std::int64_t> minCost;  // absent iff infeasible
  BigInt count = 0;                     // # minimum-cost trails under the mode
  std::vector<TrailResult> trails;      // collect only; deterministic order
  std::vector<std::vector<NodeId>> nodeSeqs;  // collect + NodeDistinct only
};

// Exhaustive search over all edge placements. Intended for small instances
// (m <= 24 or so); supports at most 63 edges.
OracleReport brute_solve(const TimedGraph& g, const OracleOptions& opts = {});

// All states (endpoint, usedEdges ∩ availableAt(t)) realizable by a feasible
// length-t prefix that has not stranded any edge (every edge whose interval
// ended before t must already be used). t=0 yields {(v, {}) : v in V}.
std::set<std::pair<NodeId, std::vector<EdgeId>>> brute_partial_states(const TimedGraph& g, int t,
                                                                      std::size_t cap = 5000000);

}  // namespace etrail
