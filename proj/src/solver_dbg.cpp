#include "etrail/solver_dbg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <limits>

namespace etrail {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

int effHi(const TimeInterval& iv) { return iv.isEmpty() ? 0 : iv.hi; }
}  // namespace

DbgEngine::DbgEngine(const DeBruijnGraph& dbg, const DbgOptions& opts) : dbg_(dbg) { run(opts); }

int DbgEngine::groupOf(const std::string& kmer) const {
  auto it = groupIdx_.find(kmer);
  return it == groupIdx_.end() ? -1 : it->second;
}

int DbgEngine::occCount(const std::string& window, const std::string& kmer) {
  if (window.size() < kmer.size()) return 0;
  int cnt = 0;
  for (std::size_t i = 0; i + kmer.size() <= window.size(); ++i)
    if (window.compare(i, kmer.size(), kmer) == 0) ++cnt;
  return cnt;
}

bool DbgEngine::transition(int t, const std::string& alpha, char x, int& groupIdx,
                           std::string& childAlpha) const {
  const std::size_t k = static_cast<std::size_t>(dbg_.k);
  std::string kmer = alpha.substr(alpha.size() - (k - 1));
  kmer.push_back(x);
  groupIdx = groupOf(kmer);
  if (groupIdx < 0) return false;
  const Group& G = groups_[static_cast<std::size_t>(groupIdx)];
  if (!G.iv.contains(t + 1)) return false;
  // Every prior placement of a currently-live k-mer lies inside the window
  // (its interval has length <= w), so its occurrence count in alpha is its
  // total usage.
  if (occCount(alpha, kmer) >= static_cast<int>(G.copies.size())) return false;
  if (!deadlineGroups_[static_cast<std::size_t>(t)].empty()) {
    std::string ext = alpha;
    ext.push_back(x);
    for (int dg : deadlineGroups_[static_cast<std::size_t>(t)]) {
      const Group& D = groups_[static_cast<std::size_t>(dg)];
      if (occCount(ext, D.kmer) != static_cast<int>(D.copies.size()))
        return false;  // a copy of D can no longer be placed: stranded
    }
  }
  if (t + 1 <= w_)
    childAlpha = alpha + x;
  else {
    childAlpha = alpha.substr(1);
    childAlpha.push_back(x);
  }
  return true;
}

void DbgEngine::run(const DbgOptions& opts) {
  const int m = dbg_.base.m();
  kept_ = opts.keepGraph;
  summary_.stateCount = 2;
  if (m == 0) {
    summary_.feasible = true;
    summary_.minCost = 0;
    summary_.count = 1;
    return;
  }

  // Group edges by their k-mer; availability and costs must be per-k-mer.
  for (const EdgeRecord& e : dbg_.base.edges) {
    std::string kmer = dbg_.kmerOf(e.id);
    auto [it, fresh] = groupIdx_.try_emplace(kmer, static_cast<int>(groups_.size()));
    if (fresh) groups_.push_back(Group{kmer, e.interval, e.costs, {e.id}});
    else {
      Group& G = groups_[static_cast<std::size_t>(it->second)];
      if (!(G.iv == e.interval))
        fail(Errc::UnequalParallelCosts,
             "copies of k-mer " + kmer + " must share one availability interval");
      if (G.costs != e.costs)
        fail(Errc::UnequalParallelCosts, "copies of k-mer " + kmer + " must share one cost vector");
      G.copies.push_back(e.id);
    }
  }

  for (const Group& G : groups_) w_ = std::max(w_, G.iv.length());
  if (w_ == 0) return;  // every interval empty
  if (precheck_density(dbg_.base, w_)) {
    densityRejected_ = true;
    return;
  }

  sortedLetters_ = dbg_.alphabet.letters;
  std::sort(sortedLetters_.begin(), sortedLetters_.end());

  deadlineGroups_.assign(static_cast<std::size_t>(m), {});
  for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
    int d = effHi(groups_[gi].iv);
    if (d < m) deadlineGroups_[static_cast<std::size_t>(d)].push_back(static_cast<int>(gi));
  }

  std::vector<St> prev;
  for (NodeId v = 0; v < dbg_.base.n(); ++v) prev.push_back(St{dbg_.nodeLabel(v), 0, 1});
  std::size_t total = prev.size();
  if (kept_) {
    layers_.assign(static_cast<std::size_t>(m) + 1, {});
    index_.assign(static_cast<std::size_t>(m) + 1, {});
    layers_[0] = prev;
    for (std::uint32_t i = 0; i < prev.size(); ++i) index_[0].emplace(prev[i].alpha, i);
  }

  int built = 0;
  for (int t = 0; t < m && !prev.empty(); ++t) {
    std::vector<St> cur;
    std::unordered_map<std::string, std::uint32_t> index;
    for (const St& ps : prev) {
      for (char x : sortedLetters_) {
        int gi;
        std::string child;
        if (!transition(t, ps.alpha, x, gi, child)) continue;
        std::int64_t c2 = checked_add(ps.cost, groups_[static_cast<std::size_t>(gi)].costAt(t + 1));
        auto [it, fresh] = index.try_emplace(child, static_cast<std::uint32_t>(cur.size()));
        if (fresh) {
          cur.push_back(St{std::move(child), c2, ps.cnt});
          if (++total > opts.stateBudget)
            fail(Errc::SolverBudgetExceeded, "dbg state budget exceeded");
        } else {
          St& cs = cur[it->second];
          if (c2 < cs.cost) {
            cs.cost = c2;
            cs.cnt = ps.cnt;
          } else if (c2 == cs.cost) {
            cs.cnt += ps.cnt;
          }
        }
      }
    }
    if (kept_) {
      layers_[static_cast<std::size_t>(t) + 1] = cur;
      index_[static_cast<std::size_t>(t) + 1] = index;
    }
    prev = std::move(cur);
    built = t + 1;
  }
  summary_.stateCount = total + 2;
  if (built < m || prev.empty()) return;

  std::int64_t best = kInf;
  for (const St& s : prev) best = std::min(best, s.cost);
  BigInt cnt = 0;
  for (const St& s : prev)
    if (s.cost == best) cnt += s.cnt;
  summary_.feasible = true;
  summary_.minCost = best;
  summary_.count = std::move(cnt);
}

void DbgEngine::ensureSuffix() const {
  if (!minSuffix_.empty()) return;
  const int m = dbg_.base.m();
  minSuffix_.assign(static_cast<std::size_t>(m) + 1, {});
  cntSuffix_.assign(static_cast<std::size_t>(m) + 1, {});
  minSuffix_[static_cast<std::size_t>(m)].assign(layers_[static_cast<std::size_t>(m)].size(), 0);
  cntSuffix_[static_cast<std::size_t>(m)].assign(layers_[static_cast<std::size_t>(m)].size(), 1);
  for (int t = m - 1; t >= 0; --t) {
    const auto& layer = layers_[static_cast<std::size_t>(t)];
    auto& vals = minSuffix_[static_cast<std::size_t>(t)];
    auto& cnts = cntSuffix_[static_cast<std::size_t>(t)];
    vals.assign(layer.size(), kInf);
    cnts.assign(layer.size(), 0);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (char x : sortedLetters_) {
        int gi;
        std::string child;
        if (!transition(t, layer[i].alpha, x, gi, child)) continue;
        auto it = index_[static_cast<std::size_t>(t) + 1].find(child);
        assert(it != index_[static_cast<std::size_t>(t) + 1].end());
        std::int64_t s = minSuffix_[static_cast<std::size_t>(t) + 1][it->second];
        if (s == kInf) continue;
        std::int64_t v = checked_add(groups_[static_cast<std::size_t>(gi)].costAt(t + 1), s);
        if (v < vals[i]) {
          vals[i] = v;
          cnts[i] = cntSuffix_[static_cast<std::size_t>(t) + 1][it->second];
        } else if (v == vals[i]) {
          cnts[i] += cntSuffix_[static_cast<std::size_t>(t) + 1][it->second];
        }
      }
    }
  }
}

namespace {
// Layer-0 state indices in spelled-string order.
std::vector<std::uint32_t> sortedByAlpha(const std::vector<std::string>& alphas) {
  std::vector<std::uint32_t> order(alphas.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return alphas[a] < alphas[b]; });
  return order;
}
}  // namespace

std::vector<std::pair<std::string, TrailResult>> DbgEngine::enumerate(
    std::optional<std::uint64_t> limit) const {
  if (!kept_) fail(Errc::InvalidArgument, "enumerate requires keepGraph");
  std::vector<std::pair<std::string, TrailResult>> out;
  const std::uint64_t cap = limit.value_or(std::numeric_limits<std::uint64_t>::max());
  const int m = dbg_.base.m();
  if (cap == 0 || !summary_.feasible || m == 0) return out;
  ensureSuffix();
  const std::int64_t target = *summary_.minCost;

  std::vector<int> groupSeq;
  groupSeq.reserve(static_cast<std::size_t>(m));
  std::function<bool(int, std::uint32_t, std::int64_t)> rec = [&](int t, std::uint32_t idx,
                                                                  std::int64_t remaining) -> bool {
    if (t == m) {
      std::vector<std::size_t> ptr(groups_.size(), 0);
      TrailResult tr;
      tr.cost = target;
      tr.valid = true;
      for (int gi : groupSeq)
        tr.edgeIds.push_back(
            groups_[static_cast<std::size_t>(gi)].copies[ptr[static_cast<std::size_t>(gi)]++]);
      out.emplace_back(std::string(), std::move(tr));
      return out.size() < cap;
    }
    for (char x : sortedLetters_) {
      int gi;
      std::string child;
      if (!transition(t, layers_[static_cast<std::size_t>(t)][idx].alpha, x, gi, child)) continue;
      auto it = index_[static_cast<std::size_t>(t) + 1].find(child);
      std::int64_t s = minSuffix_[static_cast<std::size_t>(t) + 1][it->second];
      if (s == kInf) continue;
      std::int64_t c = groups_[static_cast<std::size_t>(gi)].costAt(t + 1);
      if (checked_add(c, s) != remaining) continue;
      groupSeq.push_back(gi);
      bool go = rec(t + 1, it->second, remaining - c);
      groupSeq.pop_back();
      if (!go) return false;
    }
    return true;
  };

  std::vector<std::string> alphas;
  for (const St& s : layers_[0]) alphas.push_back(s.alpha);
  for (std::uint32_t i : sortedByAlpha(alphas)) {
    if (minSuffix_[0][i] != target) continue;
    std::size_t before = out.size();
    bool go = rec(0, i, target);
    for (std::size_t j = before; j < out.size(); ++j) {
      std::string sp = layers_[0][i].alpha;
      for (EdgeId id : out[j].second.edgeIds) sp.push_back(dbg_.letterOf(id));
      out[j].first = std::move(sp);
    }
    if (!go) break;
  }
  return out;
}

std::pair<std::string, TrailResult> DbgEngine::bestTrail() const {
  auto v = enumerate(1);
  if (v.empty()) return {std::string(), TrailResult{}};
  return std::move(v[0]);
}

std::pair<std::string, TrailResult> DbgEngine::unrank(const BigInt& r) const {
  if (!kept_) fail(Errc::InvalidArgument, "unrank requires keepGraph");
  if (!summary_.feasible || r < 0 || r >= summary_.count)
    fail(Errc::InvalidArgument, "unrank: rank out of range");
  const int m = dbg_.base.m();
  if (m == 0) fail(Errc::InvalidArgument, "unrank: empty graph");
  ensureSuffix();
  const std::int64_t target = *summary_.minCost;

  BigInt rem = r;
  std::vector<std::string> alphas;
  for (const St& s : layers_[0]) alphas.push_back(s.alpha);
  std::uint32_t cur = 0;
  bool found = false;
  for (std::uint32_t i : sortedByAlpha(alphas)) {
    if (minSuffix_[0][i] != target) continue;
    if (rem < cntSuffix_[0][i]) {
      cur = i;
      found = true;
      break;
    }
    rem -= cntSuffix_[0][i];
  }
  assert(found);
  (void)found;

  std::string spelled = layers_[0][cur].alpha;
  std::vector<int> groupSeq;
  std::int64_t remaining = target;
  std::string alpha = layers_[0][cur].alpha;
  for (int t = 0; t < m; ++t) {
    bool stepped = false;
    for (char x : sortedLetters_) {
      int gi;
      std::string child;
      if (!transition(t, alpha, x, gi, child)) continue;
      auto it = index_[static_cast<std::size_t>(t) + 1].find(child);
      std::int64_t s = minSuffix_[static_cast<std::size_t>(t) + 1][it->second];
      if (s == kInf) continue;
      std::int64_t c = groups_[static_cast<std::size_t>(gi)].costAt(t + 1);
      if (checked_add(c, s) != remaining) continue;
      const BigInt& sub = cntSuffix_[static_cast<std::size_t>(t) + 1][it->second];
      if (rem >= sub) {
        rem -= sub;
        continue;
      }
      groupSeq.push_back(gi);
      spelled.push_back(x);
      alpha = std::move(child);
      remaining -= c;
      cur = it->second;
      stepped = true;
      break;
    }
    assert(stepped);
    (void)stepped;
  }

  std::vector<std::size_t> ptr(groups_.size(), 0);
  TrailResult tr;
  tr.cost = target;
  tr.valid = true;
  for (int gi : groupSeq)
    tr.edgeIds.push_back(groups_[static_cast<std::size_t>(gi)].copies[ptr[static_cast<std::size_t>(gi)]++]);
  return {std::move(spelled), std::move(tr)};
}

std::pair<std::string, TrailResult> DbgEngine::sample(Rng& rng) const {
  if (!summary_.feasible) fail(Errc::InvalidArgument, "sample: infeasible instance");
  return unrank(rng.uniformBelow(summary_.count));
}

std::size_t DbgEngine::layerCount(int t) const {
  if (!kept_) fail(Errc::InvalidArgument, "layerCount requires keepGraph");
  if (t < 0 || t > dbg_.base.m()) fail(Errc::TimeOutOfRange, "layerCount");
  if (static_cast<std::size_t>(t) >= layers_.size()) return 0;
  return layers_[static_cast<std::size_t>(t)].size();
}

std::vector<std::string> DbgEngine::layerAlphas(int t) const {
  if (!kept_) fail(Errc::InvalidArgument, "layerAlphas requires keepGraph");
  if (t < 0 || t > dbg_.base.m()) fail(Errc::TimeOutOfRange, "layerAlphas");
  std::vector<std::string> out;
  if (static_cast<std::size_t>(t) >= layers_.size()) return out;
  for (const St& s : layers_[static_cast<std::size_t>(t)]) out.push_back(s.alpha);
  std::sort(out.begin(), out.end());
  return out;
}

SolveSummary solve_dbg(const DeBruijnGraph& dbg, const DbgOptions& opts) {
  return DbgEngine(dbg, opts).summary();
}

long double log2_dbg_state_bound(int sigma, int k, int w, std::size_t m) {
  long double wl = std::max(w, 1);
  long double lamLog = std::min(static_cast<long double>(k - 1) *
                                    std::log2(static_cast<long double>(sigma)),
                                std::log2(2.0L * wl - 1.0L));
  return std::log2(static_cast<long double>(std::max<std::size_t>(m, 1))) +
         (wl / static_cast<long double>(k - 1) + 1.0L) * lamLog;
}

long double log2_general_state_bound(int w, std::size_t m) {
  long double wl = std::max(w, 1);
  return std::log2(static_cast<long double>(std::max<std::size_t>(m, 1))) +
         1.5L * std::log2(wl) + 2.0L * wl;
}

}  // namespace etrail
