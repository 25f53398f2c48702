#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "etrail/debruijn.hpp"
#include "etrail/generators.hpp"
#include "etrail/oracle.hpp"
#include "etrail/rng.hpp"
#include "etrail/solver_dbg.hpp"
#include "etrail/solver_general.hpp"

using namespace etrail;

namespace {

const std::vector<std::string> kTrigrams = {"001", "010", "011", "011",
                                            "100", "101", "110", "110"};

// The six strings with exactly that 3-mer multiset, in lexicographic order.
const std::vector<std::string> kSpellings = {"0100110110", "0101100110", "0110010110",
                                             "0110011010", "0110100110", "0110110010"};

DbgOptions kept() {
  DbgOptions o;
  o.keepGraph = true;
  return o;
}

}  // namespace

TEST_CASE("trigram collection: six reconstructions, twenty-four walks") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  SolveSummary s = solve_dbg(dbg);
  CHECK(s.feasible);
  CHECK(s.minCost == 0);
  CHECK(s.count == 6);

  // The walk-level count distinguishes the two copies of 011 and of 110.
  CHECK(solve_general(dbg.base).count == 24);
  OracleOptions opts;
  opts.mode = OracleMode::NodeDistinct;
  CHECK(brute_solve(dbg.base, opts).count == 6);
}

TEST_CASE("enumeration is sorted by spelled string and spells correctly") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  DbgEngine eng(dbg, kept());
  auto trails = eng.enumerate();
  REQUIRE(trails.size() == 6);
  for (std::size_t i = 0; i < trails.size(); ++i) {
    CHECK(trails[i].first == kSpellings[i]);
    TrailResult check = validate_trail(dbg.base, trails[i].second.edgeIds);
    CHECK(check.valid);
    CHECK(check.cost == 0);
    CHECK(spell(dbg, trails[i].second) == trails[i].first);
  }
  CHECK(eng.enumerate(2).size() == 2);
  CHECK(eng.bestTrail().first == kSpellings[0]);
}

TEST_CASE("parallel copies get ascending edge ids in emitted trails") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  DbgEngine eng(dbg, kept());
  for (const auto& [spelled, trail] : eng.enumerate()) {
    // Whenever the same k-mer is used twice, the lower copy id comes first.
    std::map<std::string, EdgeId> last;
    for (EdgeId id : trail.edgeIds) {
      auto [it, fresh] = last.try_emplace(dbg.kmerOf(id), id);
      if (!fresh) {
        CHECK(it->second < id);
        it->second = id;
      }
    }
  }
}

TEST_CASE("unrank agrees with enumeration at every rank") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  DbgEngine eng(dbg, kept());
  auto trails = eng.enumerate();
  for (std::size_t r = 0; r < trails.size(); ++r) {
    auto got = eng.unrank(BigInt(r));
    CHECK(got.first == trails[r].first);
    CHECK(got.second.edgeIds == trails[r].second.edgeIds);
  }
}

TEST_CASE("sampling is deterministic per seed and lands in the trail set") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  DbgEngine eng(dbg, kept());
  std::set<std::string> spellings(kSpellings.begin(), kSpellings.end());
  Rng a(42), b(42), c(43);
  auto sa = eng.sample(a);
  CHECK(sa.first == eng.sample(b).first);
  CHECK(spellings.count(sa.first) == 1);
  CHECK(spellings.count(eng.sample(c).first) == 1);
  // All six show up eventually.
  Rng r(7);
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) seen.insert(eng.sample(r).first);
  CHECK(seen == spellings);
}

TEST_CASE("copies of one k-mer must share interval and costs") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  // Two copies of 011 are edges with kmerOf == "011"; give them different
  // intervals.
  std::vector<EdgeId> copies;
  for (const EdgeRecord& e : dbg.base.edges)
    if (dbg.kmerOf(e.id) == "011") copies.push_back(e.id);
  REQUIRE(copies.size() == 2);
  DeBruijnGraph split = dbg;
  split.base.edges[static_cast<std::size_t>(copies[0] - 1)].interval = TimeInterval::of(1, 4);
  CHECK_THROWS_AS(solve_dbg(split), Error);

  // Same interval but different cost vectors is equally rejected.
  DeBruijnGraph costs = dbg;
  costs.base.costForm = true;
  for (EdgeRecord& e : costs.base.edges)
    e.costs.assign(static_cast<std::size_t>(e.interval.length()), 0);
  costs.base.edges[static_cast<std::size_t>(copies[0] - 1)].costs[2] = 1;
  CHECK_THROWS_AS(solve_dbg(costs), Error);
}

TEST_CASE("window layers: layer 0 is all node labels, windows have fixed length") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  DbgEngine eng(dbg, kept());
  std::vector<std::string> labels = dbg.base.nodes;
  std::sort(labels.begin(), labels.end());
  CHECK(eng.layerAlphas(0) == labels);
  int w = eng.width();
  int k = dbg.k;
  for (int t = 0; t <= dbg.base.m(); ++t) {
    std::size_t want = static_cast<std::size_t>(std::min(w, t) + k - 1);
    for (const std::string& alpha : eng.layerAlphas(t)) CHECK(alpha.size() == want);
    CHECK(eng.layerCount(t) == eng.layerAlphas(t).size());
  }
}

TEST_CASE("agrees with the general engine and the oracle on random instances") {
  Rng rng(9001);
  int done = 0;
  for (int trial = 0; done < 60 && trial < 200; ++trial) {
    RandomDbgProfile p;
    p.sigma = {2, trial % 2 == 1 ? 4 : 2};
    p.k = {3, 5};
    p.len = {8, 14};
    p.w = {2, 6};
    p.costForm = trial % 4 >= 2;
    DeBruijnGraph dbg;
    try {
      dbg = gen_random_planted_dbg(p, rng);
    } catch (const Error&) {
      continue;  // profile resampling exhausted; try another draw
    }
    ++done;
    SolveSummary fast = solve_dbg(dbg);
    SolveSummary slow = solve_general(dbg.base);
    INFO("trial ", trial, " spelled len ", dbg.base.m() + dbg.k - 1);
    CHECK(fast.feasible);
    CHECK(fast.feasible == slow.feasible);
    CHECK(fast.minCost == slow.minCost);
    OracleOptions opts;
    opts.mode = OracleMode::NodeDistinct;
    OracleReport oracle = brute_solve(dbg.base, opts);
    CHECK(fast.count == oracle.count);
    CHECK(fast.minCost == oracle.minCost);
  }
  CHECK(done == 60);
}

TEST_CASE("enumerated spellings match the oracle's node-distinct trails") {
  Rng rng(9002);
  for (int trial = 0; trial < 20; ++trial) {
    RandomDbgProfile p;
    p.k = {3, 4};
    p.len = {8, 12};
    p.w = {3, 6};
    DeBruijnGraph dbg = gen_random_planted_dbg(p, rng);
    DbgEngine eng(dbg, kept());
    auto trails = eng.enumerate();
    CHECK(BigInt(trails.size()) == eng.summary().count);
    std::set<std::string> got;
    for (const auto& [spelled, trail] : trails) {
      CHECK(validate_trail(dbg.base, trail.edgeIds).valid);
      CHECK(spell(dbg, trail) == spelled);
      got.insert(spelled);
    }
    CHECK(got.size() == trails.size());  // node-distinct = distinct strings

    OracleOptions opts;
    opts.mode = OracleMode::NodeDistinct;
    opts.collect = true;
    OracleReport oracle = brute_solve(dbg.base, opts);
    std::set<std::string> want;
    for (const TrailResult& t : oracle.trails) want.insert(spell(dbg, t));
    CHECK(got == want);
  }
}

TEST_CASE("empty graph spells nothing but is feasible") {
  DeBruijnGraph dbg;
  SolveSummary s = solve_dbg(dbg);
  CHECK(s.feasible);
  CHECK(s.count == 1);
}

TEST_CASE("state budget enforcement") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  DbgOptions opts;
  opts.stateBudget = 3;
  CHECK_THROWS_AS(solve_dbg(dbg, opts), Error);
}

TEST_CASE("state-bound estimates are the documented formulas") {
  // dbg: log2 m + (w/(k-1)+1) * log2 min(sigma^(k-1), 2w-1).
  long double got = log2_dbg_state_bound(4, 31, 60, 10000);
  long double lambda = std::min(std::pow(4.0L, 30.0L), 119.0L);
  long double want = std::log2(10000.0L) + (60.0L / 30.0L + 1.0L) * std::log2(lambda);
  CHECK(std::abs(got - want) < 1e-9L);
  // Tiny alphabets cap lambda at sigma^(k-1).
  got = log2_dbg_state_bound(2, 3, 10, 100);
  want = std::log2(100.0L) + (10.0L / 2.0L + 1.0L) * 2.0L;
  CHECK(std::abs(got - want) < 1e-9L);
  // general: log2 m + 1.5 log2 w + 2w.
  got = log2_general_state_bound(10, 1000);
  want = std::log2(1000.0L) + 1.5L * std::log2(10.0L) + 20.0L;
  CHECK(std::abs(got - want) < 1e-9L);
  // The de Bruijn bound should beat the general bound in the wide regime.
  CHECK(log2_dbg_state_bound(4, 31, 60, 10000) < log2_general_state_bound(60, 10000));
}

TEST_CASE("availability knowledge narrows the count") {
  DeBruijnGraph dbg = build_dbg(kTrigrams, 3);
  std::map<std::string, TimeInterval> knowledge;
  knowledge["011"] = TimeInterval::of(1, 4);
  DeBruijnGraph pinned = knowledge_to_intervals(dbg, knowledge);
  SolveSummary s = solve_dbg(pinned);
  CHECK(s.feasible);
  CHECK(s.count < 6);
  CHECK(s.count > 0);
  OracleOptions opts;
  opts.mode = OracleMode::NodeDistinct;
  CHECK(s.count == brute_solve(pinned.base, opts).count);
}
