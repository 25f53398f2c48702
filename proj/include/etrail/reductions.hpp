#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etrail/debruijn.hpp"
#include "etrail/rng.hpp"
#include "etrail/timed_graph.hpp"

namespace etrail {

// Output of one of the two hardness-instance generators, together with the
// bookkeeping needed to build and check witness trails.
struct ReductionArtifacts {
  TimedGraph source;    // copy of the input graph
  TimedGraph instance;  // the generated availability/cost instance
  // Set by the directed generator: the instance viewed as a de Bruijn graph.
  std::optional<DeBruijnGraph> dbg;
  int ell = 0;           // identifier length (directed generator)
  std::int64_t tau = 0;  // number of "early" time steps (directed generator)
  // Source node token -> identifier string (directed generator).
  std::map<std::string, std::string> idMap;
  std::optional<TrailResult> witness;
};

// Directed Hamiltonian path -> interval-constrained Eulerian trail.
//
// Builds the complete de Bruijn graph of order 4*ell+11 over {A, T}, where
// ell = ceil(log2 n).  Every node pair (v, u) of the source graph owns an
// "inner" edge of the big graph; inner edges of single nodes (v == u) are
// available only during the first tau = 2n-1+2(n-1)(2*ell+4) steps, inner
// edges of non-edges only afterwards, and everything else always.
ReductionArtifacts reduce_dhp_to_diet(const TimedGraph& source,
                                      std::size_t edgeBudget = 1u << 20);

// Turns a Hamiltonian path of the source graph into a valid trail of the
// generated instance: the first tau steps alternate inner edges with the
// unique shortest connecting paths, the rest is a deterministic Eulerian
// completion of the residual graph.
TrailResult dhp_witness(const ReductionArtifacts& art,
                        const std::vector<std::string>& hampath);

// Undirected Hamiltonian path -> cost/budget Eulerian trail.
//
// Builds the complete graph on 2n+1 nodes (two copies v:1, v:2 of every
// source node plus a hub), always available, with integer costs: an edge is
// free exactly when it is (1) a copy pair at an even step before 2n+1,
// (2) a copy of a source edge at an odd step in [3, 2n+1), (3) any
// cross-pair edge after step 2n+1, or (4) incident to the hub.  Budget 0.
ReductionArtifacts reduce_uhp_to_uicet(const TimedGraph& source);

// Zero-cost trail for the undirected instance from a Hamiltonian path:
// hub -> v1:1 -> v1:2 -> v2:1 -> ... -> vn:2 -> hub, then an Eulerian
// completion of the residual graph from the hub.
TrailResult uhp_witness(const ReductionArtifacts& art,
                        const std::vector<std::string>& hampath);

// Decides whether the generated undirected instance admits a zero-cost
// Eulerian trail, by enumerating zero-cost walk prefixes of length 2n+1 and
// testing each residual graph for an Eulerian completion (parity plus
// connectivity).  Exact for instances produced by reduce_uhp_to_uicet.
bool uhp_zero_cost_feasible(const ReductionArtifacts& art,
                            std::size_t stepCap = 50'000'000);

// Brute-force Hamiltonian path test on a small source graph (either
// orientation); used as ground truth when validating the generators.
bool has_hamiltonian_path(const TimedGraph& g);
std::optional<std::vector<std::string>> find_hamiltonian_path(const TimedGraph& g);

// Shortest-path summary between two nodes, ignoring availability: length,
// number of shortest paths, and — when the path is unique — the letters it
// spells in the de Bruijn graph.
struct ShortestPathInfo {
  int dist = -1;  // -1 when unreachable
  BigInt pathCount = 0;
  std::string spelled;  // filled only when pathCount == 1
};
ShortestPathInfo shortest_path_info(const DeBruijnGraph& dbg, NodeId from, NodeId to);

}  // namespace etrail
