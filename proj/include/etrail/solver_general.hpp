#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "etrail/rng.hpp"
#include "etrail/timed_graph.hpp"

namespace etrail {

// Bitset over the edges available at one time step. The density precheck
// guarantees at most 2w-1 concurrently available edges on any feasible
// instance, so 127 bits cover every width this engine can realistically
// explore; wider instances error (SolverBudgetExceeded) instead of silently
// switching to an unbounded representation.
struct Mask128 {
  std::uint64_t a = 0, b = 0;

  void set(int i) {
    if (i < 64)
      a |= 1ULL << i;
    else
      b |= 1ULL << (i - 64);
  }
  bool test(int i) const { return i < 64 ? (a >> i) & 1 : (b >> (i - 64)) & 1; }
  int popcount() const { return std::popcount(a) + std::popcount(b); }
  bool operator==(const Mask128&) const = default;
};

struct SolveSummary {
  bool feasible = false;
  std::optional<std::int64_t> minCost;  // absent iff infeasible
  BigInt count = 0;                     // # minimum-cost trails (walks)
  std::size_t stateCount = 0;           // states built, incl. source and sink
};

struct GeneralOptions {
  std::size_t stateBudget = 2000000;  // SolverBudgetExceeded past this
  bool keepGraph = false;             // retain layers for enumeration/listing
};

// Layered dynamic program over states (t, endpoint, usedEdges ∩ availableAt(t)).
// Layer t is exactly the set of such states realizable by feasible length-t
// prefixes that stranded no edge; a trail corresponds to a source-sink path.
// States per layer are bounded in the interval width alone, which makes the
// whole search fixed-parameter tractable in w.
class GeneralEngine {
 public:
  explicit GeneralEngine(const TimedGraph& g, const GeneralOptions& opts = {});

  const SolveSummary& summary() const { return summary_; }
  int width() const { return w_; }  // 0 when every interval is empty
  bool densityRejected() const { return densityRejected_; }

  // Minimum-cost trails in lexicographic edge-id order (walk order breaks
  // id ties). Requires keepGraph.
  std::vector<TrailResult> enumerate(std::optional<std::uint64_t> limit = std::nullopt) const;
  TrailResult bestTrail() const;  // first of enumerate(1); invalid if infeasible

  // Test hooks (require keepGraph): states of one layer as
  // (endpoint, used ∩ availableAt(t)) with global edge ids.
  std::size_t layerCount(int t) const;
  std::vector<std::pair<NodeId, std::vector<EdgeId>>> layerStates(int t) const;

 private:
  struct State {
    NodeId node;
    Mask128 mask;
    std::int64_t cost;  // cheapest prefix reaching this state
    BigInt cnt;         // # cheapest prefixes
  };

  void run(const GeneralOptions& opts);
  void ensureSuffix() const;

  TimedGraph g_;
  SolveSummary summary_;
  int w_ = 0;
  bool densityRejected_ = false;
  bool kept_ = false;

  std::vector<std::vector<EdgeId>> availAt_;  // [t] ascending ids, t in [1, m]
  std::vector<std::vector<State>> layers_;    // keepGraph: [t] states
  // keepGraph: transitions from layer-t state i, taken at time t+1, as
  // (edgeId, child index in layer t+1); id-ascending per state.
  std::vector<std::vector<std::vector<std::pair<EdgeId, std::uint32_t>>>> trans_;
  // Virtual-source fanout: (first edge id, 0 = forward / 1 = backward, child
  // index in layer 1), sorted — drives lexicographic enumeration.
  std::vector<std::tuple<EdgeId, int, std::uint32_t>> sTrans_;
  mutable std::vector<std::vector<std::int64_t>> minSuffix_;  // lazy, keepGraph
};

SolveSummary solve_general(const TimedGraph& g, const GeneralOptions& opts = {});

// Feasibility combined with the instance budget (cost form): both engines and
// the oracle share this final decision rule.
bool decide_with_budget(const SolveSummary& s, const TimedGraph& g);

}  // namespace etrail
