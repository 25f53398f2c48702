#include "etrail/generators.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "etrail/errors.hpp"

namespace etrail {
namespace {

int draw(const IntRange& r, Rng& rng) {
  if (r.lo > r.hi) fail(Errc::InvalidArgument, "empty parameter range");
  return static_cast<int>(rng.uniformInt(r.lo, r.hi));
}

std::string alphabetLetters(int sigma) {
  static const std::string dna = "ACGT";
  static const std::string wide = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (sigma < 2) fail(Errc::InvalidArgument, "sigma must be at least 2");
  if (sigma <= 4) return dna.substr(0, static_cast<std::size_t>(sigma));
  if (sigma <= 26) return wide.substr(0, static_cast<std::size_t>(sigma));
  fail(Errc::InvalidArgument, "sigma must be at most 26");
}

}  // namespace

TimedGraph gen_random_planted(const RandomProfile& p, Rng& rng) {
  const int n = draw(p.n, rng);
  const int m = draw(p.m, rng);
  const int w = draw(p.w, rng);
  if (n < 1) fail(Errc::InvalidArgument, "need at least one node");
  if (m < 0) fail(Errc::InvalidArgument, "negative edge count");
  if (w < 1) fail(Errc::InvalidArgument, "width must be at least 1");
  if (p.costForm && p.costLo > p.costHi) fail(Errc::InvalidArgument, "empty cost range");

  TimedGraph g(p.orientation, p.costForm);
  for (int i = 0; i < n; ++i) g.addNode("v" + std::to_string(i));

  NodeId cur = static_cast<NodeId>(rng.uniformInt(0, n - 1));
  std::int64_t plantedTotal = 0;
  for (int t = 1; t <= m; ++t) {
    NodeId next = static_cast<NodeId>(rng.uniformInt(0, n - 1));
    int length = static_cast<int>(rng.uniformInt(1, w));
    int offset = static_cast<int>(rng.uniformInt(0, length - 1));
    int lo = std::max(1, t - offset);
    int hi = std::min(m, lo + length - 1);
    std::vector<std::int64_t> costs;
    if (p.costForm) {
      for (int x = lo; x <= hi; ++x) costs.push_back(rng.uniformInt(p.costLo, p.costHi));
      plantedTotal = checked_add(plantedTotal, costs[static_cast<std::size_t>(t - lo)]);
    }
    g.addEdge(cur, next, TimeInterval::of(lo, hi), std::move(costs));
    cur = next;
  }
  if (p.costForm) g.budget = plantedTotal;
  return g;
}

DeBruijnGraph gen_random_planted_dbg(const RandomDbgProfile& p, Rng& rng) {
  const int sigma = draw(p.sigma, rng);
  const int k = draw(p.k, rng);
  const int len = draw(p.len, rng);
  const int w = draw(p.w, rng);
  if (k < 2) fail(Errc::InvalidArgument, "k must be at least 2");
  if (len < k) fail(Errc::InvalidArgument, "string length must be at least k");
  if (w < 1) fail(Errc::InvalidArgument, "width must be at least 1");
  if (p.costForm && p.costLo > p.costHi) fail(Errc::InvalidArgument, "empty cost range");

  const Alphabet ab = Alphabet::of(alphabetLetters(sigma));
  const int m = len - k + 1;

  for (int attempt = 0; attempt < p.maxResample; ++attempt) {
    std::string s;
    s.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
      s += ab.letters[static_cast<std::size_t>(rng.uniformInt(0, sigma - 1))];

    // Occurrence span per k-mer; the shared interval must cover the span.
    std::map<std::string, std::pair<int, int>> span;
    for (int i = 1; i <= m; ++i) {
      std::string kmer = s.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k));
      auto [it, fresh] = span.try_emplace(std::move(kmer), i, i);
      if (!fresh) it->second.second = i;
    }
    bool fits = true;
    for (const auto& [kmer, se] : span)
      if (se.second - se.first + 1 > w) {
        fits = false;
        break;
      }
    if (!fits) continue;

    DeBruijnGraph dbg = build_dbg({s}, k, ab);
    std::map<std::string, TimeInterval> ivs;
    std::map<std::string, std::vector<std::int64_t>> groupCosts;
    for (const auto& [kmer, se] : span) {
      int spanLen = se.second - se.first + 1;
      int length = static_cast<int>(rng.uniformInt(spanLen, w));
      int left = length > spanLen ? static_cast<int>(rng.uniformInt(0, length - spanLen)) : 0;
      int lo = std::max(1, se.first - left);
      int hi = std::min(m, lo + length - 1);
      ivs[kmer] = TimeInterval::of(lo, hi);
      if (p.costForm) {
        std::vector<std::int64_t>& costs = groupCosts[kmer];
        for (int x = lo; x <= hi; ++x) costs.push_back(rng.uniformInt(p.costLo, p.costHi));
      }
    }
    dbg.base.costForm = p.costForm;
    for (EdgeRecord& e : dbg.base.edges) {
      std::string kmer = dbg.kmerOf(e.id);
      e.interval = ivs.at(kmer);
      if (p.costForm) e.costs = groupCosts.at(kmer);
    }
    if (p.costForm) {
      std::int64_t plantedTotal = 0;
      for (int t = 1; t <= m; ++t)
        plantedTotal = checked_add(plantedTotal, dbg.base.edge(t).costAt(t));
      dbg.base.budget = plantedTotal;
    }
    return dbg;
  }
  fail(Errc::ProfileInfeasible,
       "no string of length " + std::to_string(len) + " kept every k-mer span within " +
           std::to_string(w) + " after " + std::to_string(p.maxResample) + " attempts");
}

}  // namespace etrail
