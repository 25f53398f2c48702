#include "etrail/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace etrail {

namespace {

int effectiveDeadline(const EdgeRecord& e) { return e.interval.isEmpty() ? 0 : e.interval.hi; }

struct Prep {
  int m = 0;
  std::vector<std::vector<EdgeId>> availAt;      // [t] -> ids available at t, ascending
  std::vector<std::vector<EdgeId>> deadlineAt;   // [t] -> ids with effective hi == min(t, m)
  explicit Prep(const TimedGraph& g) : m(g.m()) {
    if (m > 63) fail(Errc::CapExceeded, "oracle supports at most 63 edges");
    availAt.resize(static_cast<std::size_t>(m) + 1);
    deadlineAt.resize(static_cast<std::size_t>(m) + 1);
    for (const EdgeRecord& e : g.edges) {
      for (int t = std::max(1, e.interval.lo); t <= std::min(m, e.interval.hi); ++t)
        availAt[static_cast<std::size_t>(t)].push_back(e.id);
      int d = std::min(m, std::max(0, effectiveDeadline(e)));
      deadlineAt[static_cast<std::size_t>(d)].push_back(e.id);
    }
  }
  bool allUsed(const std::vector<EdgeId>& ids, std::uint64_t used) const {
    for (EdgeId id : ids)
      if (!(used >> (id - 1) & 1)) return false;
    return true;
  }
};

// Accumulates minimum-cost completions. A trail is a walk, so in undirected
// graphs the same edge-id sequence traversed from the other end (possible
// with parallel edges) is a distinct trail and counts separately — exactly
// like path counting in the layered state graphs.
struct Best {
  const OracleOptions& opts;
  std::optional<std::int64_t> minCost;
  BigInt count = 0;
  std::vector<TrailResult> trails;
  std::vector<std::vector<NodeId>> nodeSeqs;
  std::size_t completions = 0;

  explicit Best(const OracleOptions& o) : opts(o) {}

  void offer(std::int64_t cost, const std::vector<EdgeId>& ids, const std::vector<NodeId>* seq) {
    if (++completions > opts.cap) fail(Errc::CapExceeded, "oracle completion cap exceeded");
    if (minCost && cost > *minCost) return;
    if (!minCost || cost < *minCost) {
      minCost = cost;
      count = 0;
      trails.clear();
      nodeSeqs.clear();
    }
    count += 1;
    if (opts.collect) {
      trails.push_back(TrailResult{ids, cost, true});
      if (seq) nodeSeqs.push_back(*seq);
    }
  }
};

void edgeDistinctSearch(const TimedGraph& g, const Prep& prep, Best& best) {
  const int m = prep.m;
  std::vector<EdgeId> path;
  path.reserve(static_cast<std::size_t>(m));

  std::function<void(int, NodeId, std::uint64_t, std::int64_t)> dfs =
      [&](int depth, NodeId endpoint, std::uint64_t used, std::int64_t cost) {
        if (depth == m) {
          best.offer(cost, path, nullptr);
          return;
        }
        // Any still-unused edge whose interval has closed can never be placed.
        if (!prep.allUsed(prep.deadlineAt[static_cast<std::size_t>(depth)], used)) return;
        const int t = depth + 1;
        for (EdgeId id : prep.availAt[static_cast<std::size_t>(t)]) {
          if (used >> (id - 1) & 1) continue;
          const EdgeRecord& e = g.edge(id);
          std::int64_t c2 = checked_add(cost, e.costAt(t));
          std::uint64_t u2 = used | (1ULL << (id - 1));
          auto step = [&](NodeId to) {
            path.push_back(id);
            dfs(depth + 1, to, u2, c2);
            path.pop_back();
          };
          if (g.orientation == Orientation::Directed) {
            if (depth == 0 || e.tail == endpoint) step(e.head);
          } else {
            bool fwd = depth == 0 || e.tail == endpoint;
            bool bwd = (depth == 0 || e.head == endpoint) && e.tail != e.head;
            if (fwd) step(e.head);
            if (bwd) step(e.tail);
          }
        }
      };
  dfs(0, -1, 0, 0);
}

// Adjacency by next node with each group's copies in earliest-deadline order.
struct NodeGroups {
  // groups[u] -> sorted list of (nextNode, copies in EDF order)
  std::vector<std::vector<std::pair<NodeId, std::vector<EdgeId>>>> groups;

  NodeGroups(const TimedGraph& g) {
    groups.resize(static_cast<std::size_t>(g.n()));
    std::map<std::pair<NodeId, NodeId>, std::vector<EdgeId>> byPair;
    for (const EdgeRecord& e : g.edges) {
      byPair[{e.tail, e.head}].push_back(e.id);
      if (g.orientation == Orientation::Undirected && e.tail != e.head)
        byPair[{e.head, e.tail}].push_back(e.id);
    }
    for (auto& [pair, ids] : byPair) {
      std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
        const EdgeRecord& ea = g.edge(a);
        const EdgeRecord& eb = g.edge(b);
        auto ka = std::make_tuple(effectiveDeadline(ea), ea.interval.lo, a);
        auto kb = std::make_tuple(effectiveDeadline(eb), eb.interval.lo, b);
        return ka < kb;
      });
      groups[static_cast<std::size_t>(pair.first)].emplace_back(pair.second, ids);
    }
    for (auto& adj : groups) std::sort(adj.begin(), adj.end());
  }
};

// First unused copy of the group available at t in (deadline, lo, id) order.
EdgeId edfPick(const TimedGraph& g, const std::vector<EdgeId>& copies, int t, std::uint64_t used) {
  for (EdgeId id : copies) {
    if (used >> (id - 1) & 1) continue;
    if (g.edge(id).interval.contains(t)) return id;
  }
  return 0;
}

void nodeDistinctSearch(const TimedGraph& g, const Prep& prep, Best& best) {
  const int m = prep.m;
  NodeGroups ng(g);
  std::vector<EdgeId> path;
  std::vector<NodeId> seq;
  path.reserve(static_cast<std::size_t>(m));

  std::function<void(int, NodeId, std::uint64_t, std::int64_t)> dfs =
      [&](int depth, NodeId endpoint, std::uint64_t used, std::int64_t cost) {
        if (depth == m) {
          best.offer(cost, path, &seq);
          return;
        }
        if (!prep.allUsed(prep.deadlineAt[static_cast<std::size_t>(depth)], used)) return;
        const int t = depth + 1;
        for (const auto& [next, copies] : ng.groups[static_cast<std::size_t>(endpoint)]) {
          EdgeId id = edfPick(g, copies, t, used);
          if (id == 0) continue;
          path.push_back(id);
          seq.push_back(next);
          dfs(depth + 1, next, used | (1ULL << (id - 1)), checked_add(cost, g.edge(id).costAt(t)));
          seq.pop_back();
          path.pop_back();
        }
      };

  for (NodeId v = 0; v < g.n(); ++v) {
    seq.assign(1, v);
    dfs(0, v, 0, 0);
  }
}

}  // namespace

OracleReport brute_solve(const TimedGraph& g, const OracleOptions& opts) {
  OracleReport rep;
  if (g.m() == 0) {
    rep.feasible = true;
    rep.minCost = 0;
    rep.count = 1;
    if (opts.collect) rep.trails.push_back(TrailResult{{}, 0, true});
    return rep;
  }
  Prep prep(g);
  Best best(opts);
  if (opts.mode == OracleMode::EdgeDistinct)
    edgeDistinctSearch(g, prep, best);
  else
    nodeDistinctSearch(g, prep, best);
  rep.feasible = best.minCost.has_value();
  rep.minCost = best.minCost;
  rep.count = best.count;
  rep.trails = std::move(best.trails);
  rep.nodeSeqs = std::move(best.nodeSeqs);
  return rep;
}

std::set<std::pair<NodeId, std::vector<EdgeId>>> brute_partial_states(const TimedGraph& g, int t,
                                                                      std::size_t cap) {
  if (t < 0 || t > g.m()) fail(Errc::TimeOutOfRange, "brute_partial_states: t out of range");
  std::set<std::pair<NodeId, std::vector<EdgeId>>> out;
  if (t == 0) {
    for (NodeId v = 0; v < g.n(); ++v) out.insert({v, {}});
    return out;
  }
  Prep prep(g);
  std::size_t visited = 0;

  auto project = [&](NodeId endpoint, std::uint64_t used) {
    std::vector<EdgeId> proj;
    for (EdgeId id : prep.availAt[static_cast<std::size_t>(t)])
      if (used >> (id - 1) & 1) proj.push_back(id);
    out.insert({endpoint, std::move(proj)});
  };

  std::function<void(int, NodeId, std::uint64_t)> dfs = [&](int depth, NodeId endpoint,
                                                            std::uint64_t used) {
    if (++visited > cap) fail(Errc::CapExceeded, "brute_partial_states cap exceeded");
    // A prefix only counts if no edge has been stranded: everything whose
    // interval closed *strictly* before the current depth must be used. (An
    // unused edge closing exactly at the current depth still yields a valid
    // state; it merely has no extensions.)
    if (depth > 0 && !prep.allUsed(prep.deadlineAt[static_cast<std::size_t>(depth - 1)], used))
      return;
    if (depth == t) {
      project(endpoint, used);
      return;
    }
    const int step = depth + 1;
    for (EdgeId id : prep.availAt[static_cast<std::size_t>(step)]) {
      if (used >> (id - 1) & 1) continue;
      const EdgeRecord& e = g.edge(id);
      std::uint64_t u2 = used | (1ULL << (id - 1));
      if (g.orientation == Orientation::Directed) {
        if (depth == 0 || e.tail == endpoint) dfs(depth + 1, e.head, u2);
      } else {
        if (depth == 0 || e.tail == endpoint) dfs(depth + 1, e.head, u2);
        if ((depth == 0 || e.head == endpoint) && e.tail != e.head) dfs(depth + 1, e.tail, u2);
      }
    }
  };
  dfs(0, -1, 0);
  return out;
}

}  // namespace etrail
