#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "etrail/debruijn.hpp"
#include "etrail/oracle.hpp"
#include "etrail/rng.hpp"
#include "etrail/timed_graph.hpp"

using namespace etrail;

namespace {

const std::vector<std::string> kFigureCollection = {"001", "010", "011", "011",
                                                    "100", "101", "110", "110"};

// Small random instances that are not biased toward feasibility; used to
// exercise the oracle's pruning on YES and NO cases alike.
TimedGraph randomInstance(Rng& rng, bool undirected, bool costForm) {
  int n = static_cast<int>(rng.uniformInt(2, 5));
  int m = static_cast<int>(rng.uniformInt(1, 7));
  TimedGraph g(undirected ? Orientation::Undirected : Orientation::Directed, costForm);
  for (int i = 0; i < n; ++i) g.addNode("v" + std::to_string(i));
  for (int i = 0; i < m; ++i) {
    NodeId a = static_cast<NodeId>(rng.uniformInt(0, n - 1));
    NodeId b = static_cast<NodeId>(rng.uniformInt(0, n - 1));
    int lo = static_cast<int>(rng.uniformInt(1, m));
    int hi = std::min(m, lo + static_cast<int>(rng.uniformInt(0, 2)));
    std::vector<std::int64_t> costs;
    if (costForm)
      for (int t = lo; t <= hi; ++t) costs.push_back(rng.uniformInt(-3, 3));
    g.addEdge(a, b, TimeInterval::of(lo, hi), std::move(costs));
  }
  return g;
}

}  // namespace

TEST_CASE("empty graph: the empty trail is the unique solution") {
  TimedGraph g(Orientation::Directed, false);
  OracleReport rep = brute_solve(g);
  CHECK(rep.feasible);
  CHECK(rep.minCost == 0);
  CHECK(rep.count == 1);
}

TEST_CASE("directed cycle: one walk per rotation") {
  TimedGraph g(Orientation::Directed, false);
  g.addEdge("a", "b", TimeInterval::of(1, 3));
  g.addEdge("b", "c", TimeInterval::of(1, 3));
  g.addEdge("c", "a", TimeInterval::of(1, 3));
  OracleReport rep = brute_solve(g);
  CHECK(rep.feasible);
  CHECK(rep.count == 3);
}

TEST_CASE("undirected single edge: each traversal direction is a walk") {
  TimedGraph g(Orientation::Undirected, false);
  g.addEdge("a", "b", TimeInterval::of(1, 1));
  CHECK(brute_solve(g).count == 2);

  TimedGraph loop(Orientation::Undirected, false);
  loop.addEdge("a", "a", TimeInterval::of(1, 1));
  CHECK(brute_solve(loop).count == 1);  // a self-loop reads the same both ways
}

TEST_CASE("figure collection: 24 walks collapse to 6 node-distinct trails") {
  DeBruijnGraph dbg = build_dbg(kFigureCollection, 3);
  CHECK(brute_solve(dbg.base).count == 24);

  OracleOptions opts;
  opts.mode = OracleMode::NodeDistinct;
  opts.collect = true;
  OracleReport rep = brute_solve(dbg.base, opts);
  CHECK(rep.count == 6);
  REQUIRE(rep.nodeSeqs.size() == 6);
  REQUIRE(rep.trails.size() == 6);
  std::set<std::vector<NodeId>> distinctSeqs(rep.nodeSeqs.begin(), rep.nodeSeqs.end());
  CHECK(distinctSeqs.size() == 6);
  for (const TrailResult& t : rep.trails) CHECK(validate_trail(dbg.base, t.edgeIds).valid);
}

TEST_CASE("minimum cost and its multiplicity on a hand-checked instance") {
  // Two placements: [1,2] costs 1+5=6, [2,1] costs 2+3=5.
  TimedGraph g(Orientation::Directed, true);
  g.addEdge("a", "b", TimeInterval::of(1, 2), {1, 2});
  g.addEdge("b", "a", TimeInterval::of(1, 2), {3, 5});
  OracleReport rep = brute_solve(g);
  CHECK(rep.feasible);
  CHECK(rep.minCost == 5);
  CHECK(rep.count == 1);

  // Make both placements tie.
  TimedGraph tie(Orientation::Directed, true);
  tie.addEdge("a", "b", TimeInterval::of(1, 2), {1, 1});
  tie.addEdge("b", "a", TimeInterval::of(1, 2), {4, 4});
  OracleReport tieRep = brute_solve(tie);
  CHECK(tieRep.minCost == 5);
  CHECK(tieRep.count == 2);
}

TEST_CASE("infeasible instances report no cost and zero count") {
  TimedGraph g(Orientation::Directed, false);
  g.addEdge("a", "b", TimeInterval::of(2, 2));
  g.addEdge("c", "d", TimeInterval::of(1, 1));
  OracleReport rep = brute_solve(g);
  CHECK(!rep.feasible);
  CHECK(!rep.minCost.has_value());
  CHECK(rep.count == 0);
}

TEST_CASE("completion cap aborts runaway counts") {
  TimedGraph g(Orientation::Undirected, false);
  for (int i = 0; i < 4; ++i) g.addEdge("a", "b", TimeInterval::of(1, 4));
  OracleOptions opts;
  opts.cap = 3;
  CHECK_THROWS_AS(brute_solve(g, opts), Error);
}

TEST_CASE("the oracle refuses more than 63 edges") {
  TimedGraph g(Orientation::Directed, false);
  for (int i = 0; i < 64; ++i) g.addEdge("a", "a", TimeInterval::of(1, 64));
  CHECK_THROWS_AS(brute_solve(g), Error);
}

TEST_CASE("density violations imply zero valid trails") {
  Rng rng(1301);
  int violating = 0;
  for (int trial = 0; trial < 200; ++trial) {
    TimedGraph g = randomInstance(rng, trial % 2 == 1, false);
    int w = 0;
    for (const EdgeRecord& e : g.edges) w = std::max(w, e.interval.length());
    if (w == 0) continue;
    if (precheck_density(g, w)) {
      ++violating;
      CHECK(brute_solve(g).count == 0);
    }
  }
  CHECK(violating > 10);  // the sweep actually exercised the property
}

TEST_CASE("partial states: all starts at t=0, hand-checked layer at t=1") {
  TimedGraph g(Orientation::Directed, false);
  g.addEdge("a", "b", TimeInterval::of(1, 2));
  g.addEdge("b", "c", TimeInterval::of(1, 2));

  auto t0 = brute_partial_states(g, 0);
  CHECK(t0.size() == 3);  // every node with the empty used-set

  auto t1 = brute_partial_states(g, 1);
  // After one step: used edge 1 ending at b, or used edge 2 ending at c;
  // both edges are still within their windows at t=1.
  std::set<std::pair<NodeId, std::vector<EdgeId>>> want{
      {g.nodeId("b"), {1}}, {g.nodeId("c"), {2}}};
  CHECK(t1 == want);

  auto t2 = brute_partial_states(g, 2);
  std::set<std::pair<NodeId, std::vector<EdgeId>>> wantEnd{{g.nodeId("c"), {1, 2}}};
  CHECK(t2 == wantEnd);

  CHECK_THROWS_AS(brute_partial_states(g, 3), Error);
  CHECK_THROWS_AS(brute_partial_states(g, -1), Error);
}

TEST_CASE("partial states drop prefixes that strand an edge") {
  // The loop is only available at t=1; any prefix placing edge 1 first
  // strands it and dies before reaching t=2.
  TimedGraph g(Orientation::Directed, false);
  g.addEdge("a", "b", TimeInterval::of(1, 2));
  g.addEdge("a", "a", TimeInterval::of(1, 1));
  auto t1 = brute_partial_states(g, 1);
  std::set<std::pair<NodeId, std::vector<EdgeId>>> want{
      {g.nodeId("b"), {1}}, {g.nodeId("a"), {2}}};
  CHECK(t1 == want);
  auto t2 = brute_partial_states(g, 2);
  // Only the prefix that used edge 2 first survives to a full placement.
  std::set<std::pair<NodeId, std::vector<EdgeId>>> wantEnd{{g.nodeId("b"), {1}}};
  CHECK(t2 == wantEnd);
}

TEST_CASE("partial state enumeration respects its visit cap") {
  TimedGraph g(Orientation::Undirected, false);
  for (int i = 0; i < 6; ++i) g.addEdge("a", "b", TimeInterval::of(1, 6));
  CHECK_THROWS_AS(brute_partial_states(g, 3, 5), Error);
}
