#include "etrail/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "etrail/debruijn.hpp"
#include "etrail/errors.hpp"
#include "etrail/oracle.hpp"
#include "etrail/solver_dbg.hpp"

namespace etrail {
namespace {

// The order-k view of {secret} with knowledge applied: keys of other orders
// or without occurrences are vacuous, intervals are clamped to [1, m].
// `dbg` is absent for unary secrets (Alphabet requires two symbols); the raw
// graph is usable either way.
struct SecretView {
  TimedGraph graph;
  std::optional<DeBruijnGraph> dbg;
  int sigma = 0;
};

SecretView makeView(const std::string& secret, int k,
                    const std::map<std::string, TimeInterval>& knowledge) {
  if (k < 2) fail(Errc::InvalidArgument, "order k must be at least 2");
  if (static_cast<int>(secret.size()) < k)
    fail(Errc::StringTooShort, "secret shorter than the order k");
  const int m = static_cast<int>(secret.size()) - k + 1;

  auto clamp = [&](TimeInterval iv) {
    if (iv.isEmpty()) return TimeInterval::empty();
    return TimeInterval::of(std::max(iv.lo, 1), std::min(iv.hi, m));
  };
  std::map<std::string, TimeInterval> applicable;
  for (const auto& [kmer, iv] : knowledge) {
    if (static_cast<int>(kmer.size()) != k) continue;
    if (secret.find(kmer) == std::string::npos) continue;
    applicable.emplace(kmer, clamp(iv));
  }

  SecretView view;
  view.sigma = static_cast<int>(std::set<char>(secret.begin(), secret.end()).size());
  if (view.sigma >= 2) {
    DeBruijnGraph dbg = build_dbg({secret}, k);
    if (!applicable.empty()) dbg = knowledge_to_intervals(dbg, applicable);
    view.graph = dbg.base;
    view.dbg = std::move(dbg);
    return view;
  }

  // Unary secret: one (k-1)-mer node, m parallel self-loops.
  TimedGraph g(Orientation::Directed, false);
  NodeId v = g.addNode(secret.substr(0, static_cast<std::size_t>(k - 1)));
  TimeInterval iv = TimeInterval::of(1, m);
  if (auto it = applicable.find(secret.substr(0, static_cast<std::size_t>(k))); it != applicable.end())
    iv = it->second;
  for (int i = 0; i < m; ++i) g.addEdge(v, v, iv);
  view.graph = std::move(g);
  return view;
}

bool windowEngineFits(const SecretView& view, int k, std::size_t stateBudget) {
  if (!view.dbg) return false;
  int w = 0;
  for (const EdgeRecord& e : view.graph.edges) w = std::max(w, e.interval.length());
  if (w == 0) return true;  // trivially infeasible; either backend is cheap
  long double bound = log2_dbg_state_bound(view.sigma, k, w,
                                           static_cast<std::size_t>(view.graph.m()));
  return bound <= std::log2(static_cast<long double>(stateBudget));
}

std::string spellNodeSeq(const TimedGraph& g, const std::vector<NodeId>& seq) {
  std::string s = g.nodes[static_cast<std::size_t>(seq[0])];
  for (std::size_t i = 1; i < seq.size(); ++i)
    s += g.nodes[static_cast<std::size_t>(seq[i])].back();
  return s;
}

}  // namespace

BigInt reconstruction_count(const std::string& secret, int k,
                            const std::map<std::string, TimeInterval>& knowledge,
                            std::size_t stateBudget, CountRoute route) {
  SecretView view = makeView(secret, k, knowledge);
  bool useEngine = route == CountRoute::WindowDp ||
                   (route == CountRoute::Auto && windowEngineFits(view, k, stateBudget));
  if (useEngine) {
    if (!view.dbg) fail(Errc::InvalidArgument, "window engine needs two distinct letters");
    DbgOptions opts;
    opts.stateBudget = stateBudget;
    return solve_dbg(*view.dbg, opts).count;
  }
  OracleOptions opts;
  opts.mode = OracleMode::NodeDistinct;
  opts.cap = stateBudget;
  return brute_solve(view.graph, opts).count;
}

AnonymityReport anonymize(const AnonymityQuery& q, std::size_t stateBudget) {
  const int len = static_cast<int>(q.secret.size());
  const int kMin = q.kMin.value_or(2);
  const int kMax = q.kMax.value_or(len - 1);
  if (q.z < 1) fail(Errc::InvalidArgument, "z must be at least 1");
  if (kMin < 2) fail(Errc::InvalidArgument, "kMin must be at least 2");
  if (kMax < kMin) fail(Errc::InvalidArgument, "empty order range");
  if (len < kMin + 1) fail(Errc::StringTooShort, "secret shorter than kMin + 1");

  Rng rng(q.seed);
  for (int k = std::min(kMax, len); k >= kMin; --k) {
    SecretView view = makeView(q.secret, k, q.knowledge);
    AnonymityReport report;
    report.kStar = k;
    if (windowEngineFits(view, k, stateBudget)) {
      DbgOptions opts;
      opts.stateBudget = stateBudget;
      opts.keepGraph = true;
      DbgEngine engine(*view.dbg, opts);
      report.count = engine.summary().count;
      if (report.count < q.z) continue;
      Rng stream = rng.split(static_cast<std::uint64_t>(k));
      report.released = engine.sample(stream).first;
      return report;
    }
    OracleOptions countOpts;
    countOpts.mode = OracleMode::NodeDistinct;
    countOpts.cap = stateBudget;
    report.count = brute_solve(view.graph, countOpts).count;
    if (report.count < q.z) continue;
    OracleOptions collectOpts = countOpts;
    collectOpts.collect = true;
    OracleReport full = brute_solve(view.graph, collectOpts);
    Rng stream = rng.split(static_cast<std::uint64_t>(k));
    BigInt idx = stream.uniformBelow(report.count);
    report.released =
        spellNodeSeq(view.graph, full.nodeSeqs[static_cast<std::size_t>(idx)]);
    return report;
  }
  fail(Errc::NoSuchK, "no order in [" + std::to_string(kMin) + ", " + std::to_string(kMax) +
                          "] admits " + std::to_string(q.z) + " reconstructions");
}

std::pair<bool, BigInt> verify_anonymity(const std::string& secret, int k, std::int64_t z,
                                         const std::map<std::string, TimeInterval>& knowledge,
                                         std::size_t stateBudget) {
  BigInt count = reconstruction_count(secret, k, knowledge, stateBudget);
  return {count >= z, count};
}

}  // namespace etrail
