#include "etrail/reductions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <utility>

#include "etrail/errors.hpp"

namespace etrail {
namespace {

// Binary identifier of a node index over {A, T}, left-padded to ell letters.
std::string identifier(int index, int ell) {
  std::string s(static_cast<std::size_t>(ell), 'A');
  for (int b = 0; b < ell; ++b)
    if (index >> b & 1) s[static_cast<std::size_t>(ell - 1 - b)] = 'T';
  return s;
}

// The node label owning the inner edge of the ordered pair (v, u):
// A^{ell+3} T id(v) T A^{ell+3} T id(u) T, of length 4*ell+10.
std::string pairLabel(const std::string& idV, const std::string& idU, int ell) {
  std::string run(static_cast<std::size_t>(ell) + 3, 'A');
  std::string s;
  s.reserve(4 * static_cast<std::size_t>(ell) + 10);
  s += run;
  s += 'T';
  s += idV;
  s += 'T';
  s += run;
  s += 'T';
  s += idU;
  s += 'T';
  return s;
}

// out[v][r] = id of the edge leaving v with the r-th alphabet letter.
std::vector<std::array<EdgeId, 2>> binaryOutIndex(const DeBruijnGraph& dbg) {
  std::vector<std::array<EdgeId, 2>> out(dbg.base.nodes.size(), {0, 0});
  for (const EdgeRecord& e : dbg.base.edges) {
    int r = dbg.alphabet.indexOf(dbg.letterOf(e.id));
    out[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(r)] = e.id;
  }
  return out;
}

std::vector<NodeId> checkHamiltonianPath(const TimedGraph& src,
                                         const std::vector<std::string>& hampath) {
  if (static_cast<int>(hampath.size()) != src.n())
    fail(Errc::NotAHamiltonianPath, "path must visit every node exactly once");
  std::vector<NodeId> seq;
  std::set<NodeId> seen;
  for (const std::string& tok : hampath) {
    if (!src.hasNode(tok)) fail(Errc::NotAHamiltonianPath, "unknown node '" + tok + "'");
    NodeId v = src.nodeId(tok);
    if (!seen.insert(v).second) fail(Errc::NotAHamiltonianPath, "repeated node '" + tok + "'");
    seq.push_back(v);
  }
  std::set<std::pair<NodeId, NodeId>> arcs;
  for (const EdgeRecord& e : src.edges) {
    arcs.emplace(e.tail, e.head);
    if (src.orientation == Orientation::Undirected) arcs.emplace(e.head, e.tail);
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!arcs.count({seq[i], seq[i + 1]}))
      fail(Errc::NotAHamiltonianPath,
           "no edge " + hampath[i] + " -> " + hampath[i + 1] + " in the source graph");
  return seq;
}

}  // namespace

ReductionArtifacts reduce_dhp_to_diet(const TimedGraph& source, std::size_t edgeBudget) {
  if (source.orientation != Orientation::Directed)
    fail(Errc::InvalidArgument, "the directed generator needs a directed source graph");
  const int n = source.n();
  if (n < 2) fail(Errc::TooFewNodes, "need at least two source nodes");
  int ell = 1;
  while ((1 << ell) < n) ++ell;

  ReductionArtifacts art;
  art.source = source;
  art.ell = ell;
  art.tau = 2 * n - 1 + 2 * static_cast<std::int64_t>(n - 1) * (2 * ell + 4);

  DeBruijnGraph dbg = complete_dbg(Alphabet::of("AT"), 4 * ell + 11, edgeBudget);
  const int mPrime = dbg.base.m();

  for (NodeId v = 0; v < n; ++v) art.idMap[source.nodes[static_cast<std::size_t>(v)]] = identifier(v, ell);
  std::set<std::pair<NodeId, NodeId>> arcs;
  for (const EdgeRecord& e : source.edges) arcs.emplace(e.tail, e.head);

  auto out = binaryOutIndex(dbg);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u = 0; u < n; ++u) {
      NodeId owner = dbg.base.nodeId(pairLabel(identifier(v, ell), identifier(u, ell), ell));
      EdgeId inner = out[static_cast<std::size_t>(owner)][0];  // the edge appending 'A'
      EdgeRecord& rec = dbg.base.edges[static_cast<std::size_t>(inner - 1)];
      if (v == u)
        rec.interval = TimeInterval::of(1, static_cast<int>(art.tau));
      else if (!arcs.count({v, u}))
        rec.interval = TimeInterval::of(static_cast<int>(art.tau) + 1, mPrime);
      // inner edges of source arcs keep the full interval
    }
  }
  art.instance = dbg.base;
  art.dbg = std::move(dbg);
  return art;
}

TrailResult dhp_witness(const ReductionArtifacts& art, const std::vector<std::string>& hampath) {
  if (!art.dbg) fail(Errc::InvalidArgument, "artifacts lack the de Bruijn view");
  const std::vector<NodeId> seq = checkHamiltonianPath(art.source, hampath);
  const DeBruijnGraph& dbg = *art.dbg;
  const int n = art.source.n();
  const int ell = art.ell;
  auto out = binaryOutIndex(dbg);

  std::vector<EdgeId> trail;
  trail.reserve(static_cast<std::size_t>(dbg.base.m()));
  NodeId cur = dbg.base.nodeId(pairLabel(identifier(seq[0], ell), identifier(seq[0], ell), ell));
  auto walk = [&](const std::string& letters) {
    for (char c : letters) {
      EdgeId e = out[static_cast<std::size_t>(cur)][static_cast<std::size_t>(dbg.alphabet.indexOf(c))];
      trail.push_back(e);
      cur = dbg.base.edge(e).head;
    }
  };

  // Prefix of length tau: the inner edge of every path node, joined through
  // the inner edge of every path arc by the two unique shortest hops, each
  // spelling A^{ell+2} T id(next) T.
  for (int i = 0; i < n; ++i) {
    walk("A");
    if (i + 1 < n) {
      std::string hop = std::string(static_cast<std::size_t>(ell) + 2, 'A') + 'T' +
                        identifier(seq[static_cast<std::size_t>(i) + 1], ell) + 'T';
      walk(hop);
      walk("A");
      walk(hop);
    }
  }
  if (static_cast<std::int64_t>(trail.size()) != art.tau)
    fail(Errc::InvalidTrail, "internal: prefix length mismatch");

  // Complete with an Eulerian trail of the residual graph (every node of the
  // complete de Bruijn graph is 2-in 2-out, so the residual trail exists and
  // runs from the current node back to the prefix start).
  std::vector<char> used(static_cast<std::size_t>(dbg.base.m()) + 1, 0);
  for (EdgeId e : trail) used[static_cast<std::size_t>(e)] = 1;
  std::vector<int> ptr(dbg.base.nodes.size(), 0);
  std::vector<std::pair<NodeId, EdgeId>> stack{{cur, 0}};
  std::vector<EdgeId> completion;
  while (!stack.empty()) {
    NodeId v = stack.back().first;
    int& p = ptr[static_cast<std::size_t>(v)];
    while (p < 2 && used[static_cast<std::size_t>(out[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)])]) ++p;
    if (p < 2) {
      EdgeId e = out[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)];
      used[static_cast<std::size_t>(e)] = 1;
      stack.emplace_back(dbg.base.edge(e).head, e);
    } else {
      completion.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  completion.pop_back();  // drop the start sentinel
  std::reverse(completion.begin(), completion.end());
  trail.insert(trail.end(), completion.begin(), completion.end());

  TrailResult res = validate_trail(art.instance, trail);
  if (!res.valid) fail(Errc::InvalidTrail, "internal: witness failed validation");
  return res;
}

ReductionArtifacts reduce_uhp_to_uicet(const TimedGraph& source) {
  if (source.orientation != Orientation::Undirected)
    fail(Errc::InvalidArgument, "the undirected generator needs an undirected source graph");
  const int n = source.n();
  if (n < 3) fail(Errc::TooFewNodes, "need at least three source nodes");

  ReductionArtifacts art;
  art.source = source;

  std::string hub = "x";
  while (source.hasNode(hub)) hub += 'x';

  TimedGraph g(Orientation::Undirected, true);
  for (NodeId v = 0; v < n; ++v) {
    g.addNode(source.nodes[static_cast<std::size_t>(v)] + ":1");
    g.addNode(source.nodes[static_cast<std::size_t>(v)] + ":2");
  }
  const NodeId x = g.addNode(hub);
  if (g.n() != 2 * n + 1)
    fail(Errc::InvalidArgument, "source node tokens collide under the :1/:2 suffixes");

  const int nn = 2 * n + 1;
  const int mPrime = nn * (nn - 1) / 2;
  std::set<std::pair<NodeId, NodeId>> srcEdges;
  for (const EdgeRecord& e : source.edges)
    srcEdges.emplace(std::min(e.tail, e.head), std::max(e.tail, e.head));

  // Free exactly when: copy pair at an even step before 2n+1; source-edge copy
  // at an odd step in [3, 2n+1); any cross pair after step 2n+1; or hub edge.
  auto zeroCost = [&](NodeId a, NodeId b, int t) -> bool {
    if (a == x || b == x) return true;
    NodeId v = a / 2, w = b / 2;
    if (v == w) return t % 2 == 0 && t < nn;
    if (t > nn) return true;
    return t % 2 == 1 && t >= 3 &&
           srcEdges.count({std::min(v, w), std::max(v, w)}) > 0;
  };
  for (NodeId a = 0; a < g.n(); ++a) {
    for (NodeId b = a + 1; b < g.n(); ++b) {
      std::vector<std::int64_t> costs(static_cast<std::size_t>(mPrime));
      for (int t = 1; t <= mPrime; ++t)
        costs[static_cast<std::size_t>(t - 1)] = zeroCost(a, b, t) ? 0 : 1;
      g.addEdge(a, b, TimeInterval::of(1, mPrime), std::move(costs));
    }
  }
  g.budget = 0;
  art.instance = std::move(g);
  return art;
}

TrailResult uhp_witness(const ReductionArtifacts& art, const std::vector<std::string>& hampath) {
  const std::vector<NodeId> seq = checkHamiltonianPath(art.source, hampath);
  const TimedGraph& g = art.instance;
  const int n = art.source.n();
  const NodeId x = static_cast<NodeId>(2 * n);

  std::map<std::pair<NodeId, NodeId>, EdgeId> edgeOf;
  for (const EdgeRecord& e : g.edges) edgeOf[{e.tail, e.head}] = e.id;
  auto idBetween = [&](NodeId a, NodeId b) {
    return edgeOf.at({std::min(a, b), std::max(a, b)});
  };

  // Zero-cost closed walk: hub, v1:1, v1:2, v2:1, v2:2, ..., vn:2, hub.
  std::vector<NodeId> q1{x};
  for (NodeId v : seq) {
    q1.push_back(2 * v);
    q1.push_back(2 * v + 1);
  }
  q1.push_back(x);
  std::vector<EdgeId> trail;
  std::vector<char> used(static_cast<std::size_t>(g.m()) + 1, 0);
  for (std::size_t i = 0; i + 1 < q1.size(); ++i) {
    EdgeId e = idBetween(q1[i], q1[i + 1]);
    trail.push_back(e);
    used[static_cast<std::size_t>(e)] = 1;
  }

  // Eulerian completion of the residual graph from the hub (all residual
  // degrees are even, so a circuit exists and no step costs anything after
  // step 2n+1).
  std::vector<std::vector<std::pair<EdgeId, NodeId>>> adj(g.nodes.size());
  for (const EdgeRecord& e : g.edges) {
    adj[static_cast<std::size_t>(e.tail)].emplace_back(e.id, e.head);
    adj[static_cast<std::size_t>(e.head)].emplace_back(e.id, e.tail);
  }
  std::vector<std::size_t> ptr(g.nodes.size(), 0);
  std::vector<std::pair<NodeId, EdgeId>> stack{{x, 0}};
  std::vector<EdgeId> completion;
  while (!stack.empty()) {
    NodeId v = stack.back().first;
    std::size_t& p = ptr[static_cast<std::size_t>(v)];
    while (p < adj[static_cast<std::size_t>(v)].size() &&
           used[static_cast<std::size_t>(adj[static_cast<std::size_t>(v)][p].first)])
      ++p;
    if (p < adj[static_cast<std::size_t>(v)].size()) {
      auto [e, to] = adj[static_cast<std::size_t>(v)][p];
      used[static_cast<std::size_t>(e)] = 1;
      stack.emplace_back(to, e);
    } else {
      completion.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  completion.pop_back();
  std::reverse(completion.begin(), completion.end());
  trail.insert(trail.end(), completion.begin(), completion.end());

  TrailResult res = validate_trail(g, trail);
  if (!res.valid || res.cost != 0) fail(Errc::InvalidTrail, "internal: witness failed validation");
  return res;
}

bool uhp_zero_cost_feasible(const ReductionArtifacts& art, std::size_t stepCap) {
  const TimedGraph& g = art.instance;
  const int n = art.source.n();
  const NodeId x = static_cast<NodeId>(2 * n);
  const int prefixLen = 2 * n + 1;
  const int m = g.m();

  std::vector<std::vector<std::pair<EdgeId, NodeId>>> adj(g.nodes.size());
  std::vector<int> deg(g.nodes.size(), 0);
  for (const EdgeRecord& e : g.edges) {
    adj[static_cast<std::size_t>(e.tail)].emplace_back(e.id, e.head);
    adj[static_cast<std::size_t>(e.head)].emplace_back(e.id, e.tail);
    ++deg[static_cast<std::size_t>(e.tail)];
    ++deg[static_cast<std::size_t>(e.head)];
  }
  auto isInner = [&](const EdgeRecord& e) {
    return e.tail != x && e.head != x && e.tail / 2 == e.head / 2;
  };
  int innerLeft = 0;
  for (const EdgeRecord& e : g.edges) innerLeft += isInner(e) ? 1 : 0;

  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  std::size_t steps = 0;

  // A zero-cost Eulerian trail exists iff some zero-cost walk prefix of
  // length 2n+1 uses all copy-pair edges and leaves a residual graph with an
  // Eulerian trail from the prefix endpoint: past step 2n+1, every edge other
  // than a copy pair is free, and copy pairs never are.
  auto completionOk = [&](NodeId u) -> bool {
    if (innerLeft > 0) return false;
    int odd = 0;
    bool uOdd = false;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (deg[v] % 2 != 0) {
        ++odd;
        if (static_cast<NodeId>(v) == u) uOdd = true;
      }
    }
    if (odd != 0 && odd != 2) return false;
    if (odd == 2 && !uOdd) return false;
    if (odd == 0 && deg[static_cast<std::size_t>(u)] == 0) return false;
    std::vector<char> visited(g.nodes.size(), 0);
    std::vector<NodeId> queue{u};
    visited[static_cast<std::size_t>(u)] = 1;
    while (!queue.empty()) {
      NodeId v = queue.back();
      queue.pop_back();
      for (auto [e, to] : adj[static_cast<std::size_t>(v)]) {
        if (used[static_cast<std::size_t>(e)] || visited[static_cast<std::size_t>(to)]) continue;
        visited[static_cast<std::size_t>(to)] = 1;
        queue.push_back(to);
      }
    }
    for (const EdgeRecord& e : g.edges)
      if (!used[static_cast<std::size_t>(e.id)] && !visited[static_cast<std::size_t>(e.tail)])
        return false;
    return true;
  };

  std::function<bool(NodeId, int)> rec = [&](NodeId v, int t) -> bool {
    if (++steps > stepCap) fail(Errc::CapExceeded, "zero-cost search exceeded its step cap");
    if (t > prefixLen) return completionOk(v);
    for (auto [e, to] : adj[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(e)]) continue;
      const EdgeRecord& rec2 = g.edge(e);
      if (rec2.costAt(t) != 0) continue;
      used[static_cast<std::size_t>(e)] = 1;
      bool inner = isInner(rec2);
      innerLeft -= inner ? 1 : 0;
      --deg[static_cast<std::size_t>(v)];
      --deg[static_cast<std::size_t>(to)];
      bool ok = rec(to, t + 1);
      ++deg[static_cast<std::size_t>(v)];
      ++deg[static_cast<std::size_t>(to)];
      innerLeft += inner ? 1 : 0;
      used[static_cast<std::size_t>(e)] = 0;
      if (ok) return true;
    }
    return false;
  };

  for (NodeId s = 0; s < g.n(); ++s)
    if (rec(s, 1)) return true;
  return false;
}

std::optional<std::vector<std::string>> find_hamiltonian_path(const TimedGraph& g) {
  const int n = g.n();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const EdgeRecord& e : g.edges) {
    adj[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)] = 1;
    if (g.orientation == Orientation::Undirected)
      adj[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)] = 1;
  }
  std::vector<NodeId> path;
  std::vector<char> inPath(static_cast<std::size_t>(n), 0);
  std::function<bool(NodeId)> rec = [&](NodeId v) -> bool {
    path.push_back(v);
    inPath[static_cast<std::size_t>(v)] = 1;
    if (static_cast<int>(path.size()) == n) return true;
    for (NodeId u = 0; u < n; ++u) {
      if (!inPath[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] &&
          rec(u))
        return true;
    }
    path.pop_back();
    inPath[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  for (NodeId s = 0; s < n; ++s) {
    if (rec(s)) {
      std::vector<std::string> tokens;
      for (NodeId v : path) tokens.push_back(g.nodes[static_cast<std::size_t>(v)]);
      return tokens;
    }
  }
  return std::nullopt;
}

bool has_hamiltonian_path(const TimedGraph& g) { return find_hamiltonian_path(g).has_value(); }

ShortestPathInfo shortest_path_info(const DeBruijnGraph& dbg, NodeId from, NodeId to) {
  const TimedGraph& g = dbg.base;
  std::vector<std::vector<std::pair<EdgeId, NodeId>>> outAdj(g.nodes.size());
  std::vector<std::vector<std::pair<EdgeId, NodeId>>> inAdj(g.nodes.size());
  for (const EdgeRecord& e : g.edges) {
    outAdj[static_cast<std::size_t>(e.tail)].emplace_back(e.id, e.head);
    inAdj[static_cast<std::size_t>(e.head)].emplace_back(e.id, e.tail);
  }
  std::vector<int> dist(g.nodes.size(), -1);
  std::vector<BigInt> count(g.nodes.size(), 0);
  std::vector<NodeId> frontier{from}, next;
  dist[static_cast<std::size_t>(from)] = 0;
  count[static_cast<std::size_t>(from)] = 1;
  int d = 0;
  while (!frontier.empty() && dist[static_cast<std::size_t>(to)] == -1) {
    next.clear();
    for (NodeId v : frontier) {
      for (auto [e, u] : outAdj[static_cast<std::size_t>(v)]) {
        (void)e;
        if (dist[static_cast<std::size_t>(u)] == -1) {
          dist[static_cast<std::size_t>(u)] = d + 1;
          next.push_back(u);
        }
        if (dist[static_cast<std::size_t>(u)] == d + 1)
          count[static_cast<std::size_t>(u)] += count[static_cast<std::size_t>(v)];
      }
    }
    frontier.swap(next);
    ++d;
  }
  ShortestPathInfo info;
  info.dist = dist[static_cast<std::size_t>(to)];
  if (info.dist < 0) return info;
  info.pathCount = count[static_cast<std::size_t>(to)];
  if (info.pathCount == 1) {
    NodeId cur = to;
    while (dist[static_cast<std::size_t>(cur)] > 0) {
      for (auto [e, p] : inAdj[static_cast<std::size_t>(cur)]) {
        if (dist[static_cast<std::size_t>(p)] == dist[static_cast<std::size_t>(cur)] - 1 &&
            count[static_cast<std::size_t>(p)] == 1) {
          info.spelled += dbg.letterOf(e);
          cur = p;
          break;
        }
      }
    }
    std::reverse(info.spelled.begin(), info.spelled.end());
  }
  return info;
}

}  // namespace etrail
