#include "etrail/solver_general.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <tuple>
#include <unordered_map>

namespace etrail {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

struct Key {
  NodeId node;
  std::uint64_t a, b;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint32_t>(k.node);
    h = (h ^ k.a) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 29) ^ k.b) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

int effHi(const EdgeRecord& e) { return e.interval.isEmpty() ? 0 : e.interval.hi; }

template <class F>
void forEachSetBit(const Mask128& m, F&& f) {
  std::uint64_t x = m.a;
  while (x) {
    f(std::countr_zero(x));
    x &= x - 1;
  }
  x = m.b;
  while (x) {
    f(std::countr_zero(x) + 64);
    x &= x - 1;
  }
}

}  // namespace

GeneralEngine::GeneralEngine(const TimedGraph& g, const GeneralOptions& opts) : g_(g) {
  run(opts);
}

void GeneralEngine::run(const GeneralOptions& opts) {
  const int m = g_.m();
  kept_ = opts.keepGraph;
  summary_.stateCount = 2;  // source and sink always exist
  if (m == 0) {
    summary_.feasible = true;
    summary_.minCost = 0;
    summary_.count = 1;
    return;
  }
  for (const EdgeRecord& e : g_.edges) w_ = std::max(w_, e.interval.length());
  if (w_ == 0) return;  // every interval empty: nothing can ever be placed
  if (precheck_density(g_, w_)) {
    densityRejected_ = true;
    return;
  }

  availAt_.assign(static_cast<std::size_t>(m) + 1, {});
  for (const EdgeRecord& e : g_.edges)
    for (int t = std::max(1, e.interval.lo); t <= std::min(m, e.interval.hi); ++t)
      availAt_[static_cast<std::size_t>(t)].push_back(e.id);
  std::size_t maxAvail = 0;
  for (int t = 1; t <= m; ++t) maxAvail = std::max(maxAvail, availAt_[static_cast<std::size_t>(t)].size());
  if (maxAvail > 127)
    fail(Errc::SolverBudgetExceeded, "more than 127 concurrently available edges");

  // req[t]: edges whose effective deadline is exactly t-1. Entering layer t
  // must drop exactly these from the carried used-set; a smaller drop means
  // some edge was stranded unused.
  std::vector<int> req(static_cast<std::size_t>(m) + 1, 0);
  for (const EdgeRecord& e : g_.edges) {
    int d = effHi(e);
    if (d < m) req[static_cast<std::size_t>(d) + 1]++;
  }

  std::vector<State> prev;
  {
    std::vector<char> starts(static_cast<std::size_t>(g_.n()), 0);
    for (EdgeId id : availAt_[1]) {
      const EdgeRecord& e = g_.edge(id);
      starts[static_cast<std::size_t>(e.tail)] = 1;
      if (g_.orientation == Orientation::Undirected) starts[static_cast<std::size_t>(e.head)] = 1;
    }
    for (NodeId v = 0; v < g_.n(); ++v)
      if (starts[static_cast<std::size_t>(v)]) prev.push_back(State{v, {}, 0, 1});
  }
  std::size_t total = prev.size();
  if (total > opts.stateBudget) fail(Errc::SolverBudgetExceeded, "state budget exceeded");
  if (kept_) {
    layers_.assign(static_cast<std::size_t>(m) + 1, {});
    trans_.assign(static_cast<std::size_t>(m), {});
    layers_[0] = prev;
  }

  int built = 0;
  for (int t = 1; t <= m && !prev.empty(); ++t) {
    const auto& availPrev = availAt_[static_cast<std::size_t>(t - 1)];  // empty for t=1
    const auto& avail = availAt_[static_cast<std::size_t>(t)];
    std::vector<int> remap(availPrev.size(), -1);
    for (std::size_t i = 0, j = 0; i < availPrev.size(); ++i) {
      while (j < avail.size() && avail[j] < availPrev[i]) ++j;
      if (j < avail.size() && avail[j] == availPrev[i]) remap[i] = static_cast<int>(j);
    }

    std::vector<State> cur;
    std::unordered_map<Key, std::uint32_t, KeyHash> index;
    std::vector<std::vector<std::pair<EdgeId, std::uint32_t>>> trans;
    if (kept_) trans.resize(prev.size());

    for (std::size_t pi = 0; pi < prev.size(); ++pi) {
      const State& ps = prev[pi];
      Mask128 base;
      forEachSetBit(ps.mask, [&](int pos) {
        if (remap[static_cast<std::size_t>(pos)] >= 0) base.set(remap[static_cast<std::size_t>(pos)]);
      });
      int dropped = ps.mask.popcount() - base.popcount();
      if (dropped != req[static_cast<std::size_t>(t)]) continue;  // stranded an edge

      for (std::size_t j = 0; j < avail.size(); ++j) {
        if (base.test(static_cast<int>(j))) continue;  // already used
        EdgeId id = avail[j];
        const EdgeRecord& e = g_.edge(id);
        NodeId to;
        int rank = 0;  // tie order for the virtual source: forward, then backward
        if (g_.orientation == Orientation::Directed) {
          if (e.tail != ps.node) continue;
          to = e.head;
        } else if (e.tail == ps.node) {
          to = e.head;
        } else if (e.head == ps.node) {
          to = e.tail;
          rank = 1;
        } else {
          continue;
        }
        std::int64_t c2 = checked_add(ps.cost, e.costAt(t));
        Mask128 m2 = base;
        m2.set(static_cast<int>(j));
        auto [it, fresh] = index.try_emplace(Key{to, m2.a, m2.b},
                                             static_cast<std::uint32_t>(cur.size()));
        if (fresh) {
          cur.push_back(State{to, m2, c2, ps.cnt});
          if (++total > opts.stateBudget)
            fail(Errc::SolverBudgetExceeded, "state budget exceeded");
        } else {
          State& cs = cur[it->second];
          if (c2 < cs.cost) {
            cs.cost = c2;
            cs.cnt = ps.cnt;
          } else if (c2 == cs.cost) {
            cs.cnt += ps.cnt;
          }
        }
        if (kept_) {
          trans[pi].emplace_back(id, it->second);
          if (t == 1) sTrans_.emplace_back(id, rank, it->second);
        }
      }
    }
    if (kept_) {
      trans_[static_cast<std::size_t>(t - 1)] = std::move(trans);
      layers_[static_cast<std::size_t>(t)] = cur;
    }
    prev = std::move(cur);
    built = t;
  }
  summary_.stateCount = total + 2;
  if (built < m || prev.empty()) return;  // some layer died: infeasible

  std::int64_t best = kInf;
  for (const State& s : prev) best = std::min(best, s.cost);
  BigInt cnt = 0;
  for (const State& s : prev)
    if (s.cost == best) cnt += s.cnt;
  summary_.feasible = true;
  summary_.minCost = best;
  summary_.count = std::move(cnt);
  std::sort(sTrans_.begin(), sTrans_.end());
}

void GeneralEngine::ensureSuffix() const {
  if (!minSuffix_.empty()) return;
  const int m = g_.m();
  minSuffix_.assign(static_cast<std::size_t>(m) + 1, {});
  minSuffix_[static_cast<std::size_t>(m)].assign(layers_[static_cast<std::size_t>(m)].size(), 0);
  for (int t = m - 1; t >= 0; --t) {
    const auto& layer = layers_[static_cast<std::size_t>(t)];
    auto& vals = minSuffix_[static_cast<std::size_t>(t)];
    vals.assign(layer.size(), kInf);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (auto [id, child] : trans_[static_cast<std::size_t>(t)][i]) {
        std::int64_t s = minSuffix_[static_cast<std::size_t>(t) + 1][child];
        if (s == kInf) continue;
        std::int64_t v = checked_add(g_.edge(id).costAt(t + 1), s);
        vals[i] = std::min(vals[i], v);
      }
    }
  }
}

std::vector<TrailResult> GeneralEngine::enumerate(std::optional<std::uint64_t> limit) const {
  if (!kept_) fail(Errc::InvalidArgument, "enumerate requires keepGraph");
  std::vector<TrailResult> out;
  const std::uint64_t cap = limit.value_or(std::numeric_limits<std::uint64_t>::max());
  if (cap == 0 || !summary_.feasible) return out;
  const int m = g_.m();
  if (m == 0) {
    out.push_back(TrailResult{{}, 0, true});
    return out;
  }
  ensureSuffix();
  const std::int64_t target = *summary_.minCost;
  std::vector<EdgeId> path;
  path.reserve(static_cast<std::size_t>(m));
  std::function<bool(int, std::uint32_t, std::int64_t)> rec = [&](int t, std::uint32_t idx,
                                                                std::int64_t remaining) -> bool {
    if (t == m) {
      out.push_back(TrailResult{path, target, true});
      return out.size() < cap;
    }
    for (auto [id, child] : trans_[static_cast<std::size_t>(t)][idx]) {
      std::int64_t s = minSuffix_[static_cast<std::size_t>(t) + 1][child];
      if (s == kInf) continue;
      std::int64_t c = g_.edge(id).costAt(t + 1);
      if (checked_add(c, s) != remaining) continue;
      path.push_back(id);
      bool go = rec(t + 1, child, remaining - c);
      path.pop_back();
      if (!go) return false;
    }
    return true;
  };
  for (const auto& [id, rank, child] : sTrans_) {
    (void)rank;
    std::int64_t s = minSuffix_[1][child];
    if (s == kInf) continue;
    std::int64_t c = g_.edge(id).costAt(1);
    if (checked_add(c, s) != target) continue;
    path.push_back(id);
    bool go = rec(1, child, target - c);
    path.pop_back();
    if (!go) break;
  }
  return out;
}

TrailResult GeneralEngine::bestTrail() const {
  auto v = enumerate(1);
  return v.empty() ? TrailResult{} : std::move(v[0]);
}

std::size_t GeneralEngine::layerCount(int t) const {
  if (!kept_) fail(Errc::InvalidArgument, "layerCount requires keepGraph");
  if (t < 0 || t > g_.m()) fail(Errc::TimeOutOfRange, "layerCount");
  if (static_cast<std::size_t>(t) >= layers_.size()) return 0;
  return layers_[static_cast<std::size_t>(t)].size();
}

std::vector<std::pair<NodeId, std::vector<EdgeId>>> GeneralEngine::layerStates(int t) const {
  if (!kept_) fail(Errc::InvalidArgument, "layerStates requires keepGraph");
  if (t < 0 || t > g_.m()) fail(Errc::TimeOutOfRange, "layerStates");
  std::vector<std::pair<NodeId, std::vector<EdgeId>>> out;
  if (static_cast<std::size_t>(t) >= layers_.size()) return out;
  for (const State& s : layers_[static_cast<std::size_t>(t)]) {
    std::vector<EdgeId> ids;
    if (t >= 1) {
      const auto& avail = availAt_[static_cast<std::size_t>(t)];
      forEachSetBit(s.mask, [&](int pos) { ids.push_back(avail[static_cast<std::size_t>(pos)]); });
    }
    out.emplace_back(s.node, std::move(ids));
  }
  return out;
}

SolveSummary solve_general(const TimedGraph& g, const GeneralOptions& opts) {
  return GeneralEngine(g, opts).summary();
}

bool decide_with_budget(const SolveSummary& s, const TimedGraph& g) {
  if (!s.feasible) return false;
  if (!g.budget) return true;
  return s.minCost && *s.minCost <= *g.budget;
}

}  // namespace etrail
