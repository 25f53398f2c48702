#include "etrail/timed_graph.hpp"

#include <algorithm>
#include <numeric>

namespace etrail {

NodeId TimedGraph::addNode(const std::string& token) {
  auto it = nodeIndex_.find(token);
  if (it != nodeIndex_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes.size());
  nodes.push_back(token);
  nodeIndex_.emplace(token, id);
  return id;
}

NodeId TimedGraph::nodeId(const std::string& token) const {
  auto it = nodeIndex_.find(token);
  if (it == nodeIndex_.end()) fail(Errc::InvalidArgument, "unknown node token: " + token);
  return it->second;
}

EdgeId TimedGraph::addEdge(const std::string& tailTok, const std::string& headTok, TimeInterval iv,
                           std::vector<std::int64_t> costs) {
  // Sequence the insertions so fresh nodes get ids in tail-then-head order
  // (argument evaluation order would otherwise be unspecified).
  NodeId tail = addNode(tailTok);
  NodeId head = addNode(headTok);
  return addEdge(tail, head, iv, std::move(costs));
}

EdgeId TimedGraph::addEdge(NodeId tail, NodeId head, TimeInterval iv,
                           std::vector<std::int64_t> costs) {
  if (tail < 0 || tail >= n() || head < 0 || head >= n())
    fail(Errc::InvalidArgument, "addEdge: node id out of range");
  if (iv.isEmpty()) iv = TimeInterval::empty();  // canonical empty
  if (!costs.empty() && static_cast<int>(costs.size()) != iv.length())
    fail(Errc::InvalidArgument, "addEdge: cost vector length must equal interval length");
  EdgeRecord rec;
  rec.id = static_cast<EdgeId>(edges.size() + 1);
  rec.tail = tail;
  rec.head = head;
  rec.interval = iv;
  rec.costs = std::move(costs);
  edges.push_back(std::move(rec));
  return edges.back().id;
}

int interval_width(const TimedGraph& g) {
  int w = 0;
  for (const EdgeRecord& e : g.edges) w = std::max(w, e.interval.length());
  if (w == 0) fail(Errc::AllEdgesEmptyInterval, "interval_width needs a nonempty interval");
  return w;
}

std::vector<EdgeId> available_edges(const TimedGraph& g, int t) {
  if (t < 1 || t > g.m()) fail(Errc::TimeOutOfRange, "available_edges: t=" + std::to_string(t));
  std::vector<EdgeId> out;
  for (const EdgeRecord& e : g.edges)
    if (e.interval.contains(t)) out.push_back(e.id);
  return out;
}

std::optional<int> precheck_density(const TimedGraph& g, int w) {
  const int m = g.m();
  if (m == 0) return std::nullopt;
  // Sweep: diff[t] = #intervals opening at t minus #closing at t-1.
  std::vector<int> diff(static_cast<std::size_t>(m) + 2, 0);
  for (const EdgeRecord& e : g.edges) {
    if (e.interval.isEmpty()) continue;
    int lo = std::max(1, e.interval.lo);
    int hi = std::min(m, e.interval.hi);
    if (lo > hi) continue;  // interval entirely outside [1, m]
    diff[static_cast<std::size_t>(lo)] += 1;
    diff[static_cast<std::size_t>(hi) + 1] -= 1;
  }
  int open = 0;
  for (int t = 1; t <= m; ++t) {
    open += diff[static_cast<std::size_t>(t)];
    if (open > 2 * w - 1) return t;
  }
  return std::nullopt;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(Errc::CostOverflow, "int64 cost sum overflow");
  return out;
}

TrailResult validate_trail(const TimedGraph& g, const std::vector<EdgeId>& edgeIds) {
  TrailResult res;
  res.edgeIds = edgeIds;
  const int m = g.m();
  for (EdgeId id : edgeIds) g.edge(id);  // UnknownEdgeId check up front
  if (static_cast<int>(edgeIds.size()) != m) return res;

  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  std::int64_t cost = 0;
  for (int t = 1; t <= m; ++t) {
    const EdgeRecord& e = g.edge(edgeIds[static_cast<std::size_t>(t - 1)]);
    if (seen[static_cast<std::size_t>(e.id)]) return res;
    seen[static_cast<std::size_t>(e.id)] = true;
    if (!e.interval.contains(t)) return res;
    cost = checked_add(cost, e.costAt(t));
  }

  if (g.orientation == Orientation::Directed) {
    for (int t = 1; t < m; ++t) {
      const EdgeRecord& a = g.edge(edgeIds[static_cast<std::size_t>(t - 1)]);
      const EdgeRecord& b = g.edge(edgeIds[static_cast<std::size_t>(t)]);
      if (a.head != b.tail) return res;
    }
  } else if (m > 0) {
    // Track the set of possible current endpoints (at most two) so that
    // parallel-edge ambiguity never needs backtracking.
    const EdgeRecord& first = g.edge(edgeIds[0]);
    std::vector<NodeId> cur = {first.head};
    if (first.tail != first.head) cur.push_back(first.tail);
    for (int t = 2; t <= m; ++t) {
      const EdgeRecord& e = g.edge(edgeIds[static_cast<std::size_t>(t - 1)]);
      std::vector<NodeId> next;
      for (NodeId c : cur) {
        if (e.tail == c) next.push_back(e.head);
        if (e.head == c && e.tail != e.head) next.push_back(e.tail);
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) return res;
      cur = std::move(next);
    }
  }

  res.cost = cost;
  res.valid = true;
  return res;
}

TimedGraph lift_interval_to_cost(const TimedGraph& g) {
  if (g.costForm) fail(Errc::InvalidArgument, "lift_interval_to_cost: input already cost form");
  TimedGraph out;
  out.orientation = g.orientation;
  out.costForm = true;
  out.budget = 0;
  for (const std::string& tok : g.nodes) out.addNode(tok);
  const int m = g.m();
  for (const EdgeRecord& e : g.edges) {
    std::vector<std::int64_t> costs(static_cast<std::size_t>(m), 1);
    for (int t = 1; t <= m; ++t)
      if (e.interval.contains(t)) costs[static_cast<std::size_t>(t - 1)] = 0;
    out.addEdge(e.tail, e.head, TimeInterval::of(1, m), std::move(costs));
  }
  return out;
}

bool euler_feasible(const TimedGraph& g) {
  const int m = g.m();
  if (m == 0) return true;
  const int n = g.n();

  // Connectivity of the edge-induced subgraph, ignoring isolated nodes.
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  for (const EdgeRecord& e : g.edges) {
    adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
    adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
    touched[static_cast<std::size_t>(e.tail)] = true;
    touched[static_cast<std::size_t>(e.head)] = true;
  }
  NodeId start = g.edges[0].tail;
  std::vector<bool> vis(static_cast<std::size_t>(n), false);
  std::vector<NodeId> stack = {start};
  vis[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : adj[static_cast<std::size_t>(u)])
      if (!vis[static_cast<std::size_t>(v)]) {
        vis[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
  }
  for (NodeId v = 0; v < n; ++v)
    if (touched[static_cast<std::size_t>(v)] && !vis[static_cast<std::size_t>(v)]) return false;

  if (g.orientation == Orientation::Directed) {
    std::vector<int> outDeg(static_cast<std::size_t>(n), 0), inDeg(static_cast<std::size_t>(n), 0);
    for (const EdgeRecord& e : g.edges) {
      outDeg[static_cast<std::size_t>(e.tail)]++;
      inDeg[static_cast<std::size_t>(e.head)]++;
    }
    int plus = 0, minus = 0;
    for (NodeId v = 0; v < n; ++v) {
      int d = outDeg[static_cast<std::size_t>(v)] - inDeg[static_cast<std::size_t>(v)];
      if (d == 1)
        plus++;
      else if (d == -1)
        minus++;
      else if (d != 0)
        return false;
    }
    return (plus == 0 && minus == 0) || (plus == 1 && minus == 1);
  }

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const EdgeRecord& e : g.edges) {
    deg[static_cast<std::size_t>(e.tail)]++;
    deg[static_cast<std::size_t>(e.head)]++;  // self-loop contributes 2
  }
  int odd = 0;
  for (NodeId v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] % 2 != 0) odd++;
  return odd == 0 || odd == 2;
}

}  // namespace etrail
