#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "etrail/generators.hpp"
#include "etrail/rng.hpp"
#include "etrail/solver_general.hpp"
#include "etrail/timed_graph.hpp"

using namespace etrail;

namespace {

std::vector<EdgeId> identity(int m) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 1);
  return ids;
}

}  // namespace

TEST_CASE("planted instances keep edge i available at time i") {
  Rng rng(3301);
  for (int trial = 0; trial < 40; ++trial) {
    RandomProfile p;
    p.orientation = trial % 2 == 1 ? Orientation::Undirected : Orientation::Directed;
    p.costForm = trial % 4 >= 2;
    p.n = {1, 6};
    p.m = {1, 14};
    p.w = {1, 5};
    TimedGraph g = gen_random_planted(p, rng);
    int w = p.w.hi;
    INFO("trial ", trial);
    CHECK(g.n() >= 1);
    for (const EdgeRecord& e : g.edges) {
      CHECK(e.interval.contains(e.id));
      CHECK(e.interval.length() <= w);
      CHECK(e.interval.lo >= 1);
      CHECK(e.interval.hi <= g.m());
      for (std::int64_t c : e.costs) {
        CHECK(c >= p.costLo);
        CHECK(c <= p.costHi);
      }
    }
    for (int i = 0; i < g.n(); ++i) CHECK(g.nodes[static_cast<std::size_t>(i)] == "v" + std::to_string(i));

    TrailResult planted = validate_trail(g, identity(g.m()));
    CHECK(planted.valid);
    if (p.costForm) {
      REQUIRE(g.budget.has_value());
      CHECK(planted.cost == *g.budget);
    }
    CHECK(decide_with_budget(solve_general(g), g));
  }
}

TEST_CASE("planted de Bruijn instances are uniform per k-mer and solvable") {
  Rng rng(3302);
  for (int trial = 0; trial < 30; ++trial) {
    RandomDbgProfile p;
    p.sigma = {2, 4};
    p.k = {2, 5};
    p.len = {6, 16};
    p.w = {3, 8};
    p.costForm = trial % 2 == 1;
    DeBruijnGraph dbg;
    try {
      dbg = gen_random_planted_dbg(p, rng);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ProfileInfeasible);
      continue;
    }
    const TimedGraph& g = dbg.base;
    const int m = g.m();
    INFO("trial ", trial);
    CHECK(m + dbg.k - 1 >= p.len.lo);
    CHECK(m + dbg.k - 1 <= p.len.hi);

    // All copies of one k-mer share interval and costs, and the interval
    // covers every occurrence position.
    std::map<std::string, const EdgeRecord*> first;
    std::map<std::string, std::pair<int, int>> span;
    for (const EdgeRecord& e : g.edges) {
      std::string kmer = dbg.kmerOf(e.id);
      auto [it, fresh] = first.try_emplace(kmer, &e);
      if (!fresh) {
        CHECK(it->second->interval == e.interval);
        CHECK(it->second->costs == e.costs);
      }
      auto [sp, freshSpan] = span.try_emplace(kmer, e.id, e.id);
      if (!freshSpan) sp->second.second = e.id;
      CHECK(e.interval.length() <= p.w.hi);
    }
    for (const auto& [kmer, se] : span) {
      const TimeInterval& iv = first.at(kmer)->interval;
      CHECK(iv.contains(se.first));
      CHECK(iv.contains(se.second));
    }

    TrailResult planted = validate_trail(g, identity(m));
    CHECK(planted.valid);
    if (p.costForm) {
      REQUIRE(g.budget.has_value());
      CHECK(planted.cost == *g.budget);
    }
  }
}

TEST_CASE("infeasible profiles are reported, not looped forever") {
  RandomDbgProfile p;
  p.sigma = {2, 2};
  p.k = {2, 2};
  p.len = {100, 100};
  p.w = {1, 1};
  p.maxResample = 5;
  Rng rng(3303);
  CHECK_THROWS_AS(gen_random_planted_dbg(p, rng), Error);
}

TEST_CASE("alphabets grow from the four-letter base") {
  Rng rng(3304);
  RandomDbgProfile p;
  p.sigma = {2, 2};
  p.len = {8, 8};
  p.w = {6, 6};
  CHECK(gen_random_planted_dbg(p, rng).alphabet.letters == "AC");
  p.sigma = {5, 5};
  p.w = {8, 8};
  p.k = {2, 2};
  CHECK(gen_random_planted_dbg(p, rng).alphabet.letters == "ABCDE");
}

TEST_CASE("generation is deterministic in the seed") {
  RandomProfile p;
  p.costForm = true;
  p.n = {2, 5};
  p.m = {4, 10};
  p.w = {2, 4};
  Rng a(99), b(99), c(100);
  TimedGraph ga = gen_random_planted(p, a);
  CHECK(ga == gen_random_planted(p, b));
  // A different seed draws a different instance (overwhelmingly likely).
  CHECK(ga != gen_random_planted(p, c));

  RandomDbgProfile q;
  q.sigma = {4, 4};
  q.len = {10, 14};
  q.w = {4, 6};
  Rng d(7), e(7);
  DeBruijnGraph g1 = gen_random_planted_dbg(q, d);
  DeBruijnGraph g2 = gen_random_planted_dbg(q, e);
  CHECK(g1.base == g2.base);
  CHECK(g1.edgeLetters == g2.edgeLetters);
  CHECK(g1.k == g2.k);
}

TEST_CASE("degenerate parameter ranges are rejected") {
  Rng rng(3305);
  RandomProfile p;
  p.n = {3, 2};
  CHECK_THROWS_AS(gen_random_planted(p, rng), Error);
  RandomProfile q;
  q.costForm = true;
  q.costLo = 2;
  q.costHi = 1;
  CHECK_THROWS_AS(gen_random_planted(q, rng), Error);
  RandomDbgProfile r;
  r.k = {1, 1};
  CHECK_THROWS_AS(gen_random_planted_dbg(r, rng), Error);
  RandomDbgProfile s;
  s.len = {2, 2};
  s.k = {3, 3};
  CHECK_THROWS_AS(gen_random_planted_dbg(s, rng), Error);
}
