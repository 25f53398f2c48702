#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "etrail/errors.hpp"

namespace etrail {

using NodeId = std::int32_t;  // dense index into TimedGraph::nodes
using EdgeId = std::int32_t;  // 1-based; 0 is "no edge"

enum class Orientation { Directed, Undirected };

// Closed 1-based time interval [lo, hi]; lo > hi encodes the empty interval
// (canonically lo=1, hi=0).
struct TimeInterval {
  int lo = 1;
  int hi = 0;

  static TimeInterval empty() { return {1, 0}; }
  static TimeInterval of(int lo, int hi) { return {lo, hi}; }

  bool isEmpty() const { return lo > hi; }
  bool contains(int t) const { return lo <= t && t <= hi; }
  int length() const { return isEmpty() ? 0 : hi - lo + 1; }

  bool operator==(const TimeInterval& o) const {
    if (isEmpty() && o.isEmpty()) return true;
    return lo == o.lo && hi == o.hi;
  }
};

struct EdgeRecord {
  EdgeId id = 0;
  NodeId tail = -1;
  NodeId head = -1;
  TimeInterval interval;
  // Cost form only: costs[t - interval.lo] is the cost of placing this edge at
  // time t; size equals interval.length(). Empty in interval form.
  std::vector<std::int64_t> costs;

  std::int64_t costAt(int t) const {
    if (!interval.contains(t)) fail(Errc::TimeOutOfRange, "costAt: t outside interval");
    return costs.empty() ? 0 : costs[static_cast<std::size_t>(t - interval.lo)];
  }

  bool operator==(const EdgeRecord& o) const {
    return id == o.id && tail == o.tail && head == o.head && interval == o.interval &&
           costs == o.costs;
  }
};

// Final placement of every edge: edgeIds[t-1] is the edge used at time t.
struct TrailResult {
  std::vector<EdgeId> edgeIds;
  std::int64_t cost = 0;
  bool valid = false;
};

// A multigraph whose edges carry availability intervals (interval form) or
// per-time-step integer costs (cost form). Node identity is the opaque token;
// edge ids are assigned in insertion order starting at 1.
class TimedGraph {
 public:
  TimedGraph() = default;
  TimedGraph(Orientation o, bool cost) : orientation(o), costForm(cost) {}

  Orientation orientation = Orientation::Directed;
  bool costForm = false;
  std::optional<std::int64_t> budget;  // cost form only; absent means unbounded

  NodeId addNode(const std::string& token);
  bool hasNode(const std::string& token) const { return nodeIndex_.count(token) > 0; }
  NodeId nodeId(const std::string& token) const;

  EdgeId addEdge(const std::string& tailTok, const std::string& headTok, TimeInterval iv,
                 std::vector<std::int64_t> costs = {});
  EdgeId addEdge(NodeId tail, NodeId head, TimeInterval iv, std::vector<std::int64_t> costs = {});

  int n() const { return static_cast<int>(nodes.size()); }
  int m() const { return static_cast<int>(edges.size()); }

  const EdgeRecord& edge(EdgeId id) const {
    if (id < 1 || id > m()) fail(Errc::UnknownEdgeId, "edge id " + std::to_string(id));
    return edges[static_cast<std::size_t>(id - 1)];
  }

  bool operator==(const TimedGraph& o) const {
    return orientation == o.orientation && costForm == o.costForm && budget == o.budget &&
           nodes == o.nodes && edges == o.edges;
  }

  std::vector<std::string> nodes;  // token of node i
  std::vector<EdgeRecord> edges;   // edges[i].id == i+1

 private:
  std::unordered_map<std::string, NodeId> nodeIndex_;
};

// Maximum interval length over all edges. Errors with AllEdgesEmptyInterval
// when no edge has a nonempty interval (including m = 0).
int interval_width(const TimedGraph& g);

// Edge ids whose interval contains t, ascending. t must lie in [1, m].
std::vector<EdgeId> available_edges(const TimedGraph& g, int t);

// Necessary condition for feasibility: at most 2w-1 edges available at any
// single time step. Returns the first violating t, or nullopt when the graph
// passes. Runs in O(m).
std::optional<int> precheck_density(const TimedGraph& g, int w);

// Checks that edgeIds is a feasible placement: a permutation of all edge ids
// forming a walk without edge repetition, with every edge available at its
// assigned time. Computes the total cost (0 in interval form). Unknown ids
// error; all other defects yield valid=false.
TrailResult validate_trail(const TimedGraph& g, const std::vector<EdgeId>& edgeIds);

// Interval form -> cost form: full interval [1, m] per edge, cost 0 at the
// originally allowed times and 1 elsewhere, budget 0. A trail of cost 0 in the
// result corresponds exactly to a feasible trail of the input.
TimedGraph lift_interval_to_cost(const TimedGraph& g);

// Ignores time: does the multigraph admit an Eulerian trail at all?
// (Degree conditions + connectivity of the edge-induced subgraph.)
bool euler_feasible(const TimedGraph& g);

// Overflow-checked int64 arithmetic for cost accumulation.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace etrail
