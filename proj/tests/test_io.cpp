#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "etrail/debruijn.hpp"
#include "etrail/generators.hpp"
#include "etrail/io.hpp"
#include "etrail/rng.hpp"

using namespace etrail;

namespace {

TimedGraph roundTrip(const TimedGraph& g) {
  std::istringstream in(serialize_instance(g));
  return parse_instance(in);
}

void expectParseError(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  try {
    parse_instance(in);
    FAIL("expected a parse error mentioning '", needle, "'");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("serialization round-trips hand-built graphs exactly") {
  TimedGraph g(Orientation::Undirected, true);
  g.addNode("lonely");  // isolated node, never an endpoint
  g.addEdge("a", "b", TimeInterval::of(1, 3), {-4, 0, 17});
  g.addEdge("b", "b", TimeInterval::of(2, 2), {9});
  g.addEdge("a", "c", TimeInterval::empty());
  g.budget = -2;
  CHECK(roundTrip(g) == g);

  DeBruijnGraph dbg = build_dbg({"001", "010", "011", "011", "100", "101", "110", "110"}, 3);
  CHECK(roundTrip(dbg.base) == dbg.base);
}

TEST_CASE("serialization round-trips generated instances exactly") {
  Rng rng(2201);
  for (int trial = 0; trial < 12; ++trial) {
    RandomProfile p;
    p.orientation = trial % 2 == 1 ? Orientation::Undirected : Orientation::Directed;
    p.costForm = trial % 4 >= 2;
    p.n = {2, 6};
    p.m = {1, 12};
    p.w = {1, 4};
    TimedGraph g = gen_random_planted(p, rng);
    CHECK(roundTrip(g) == g);
  }
}

TEST_CASE("comments, blank lines, and inline comments are ignored") {
  std::istringstream in(
      "# instance\n"
      "\n"
      "et v1 directed interval  # header\n"
      "n a\n"
      "e a b 1:2   # the only edge\n"
      "e b a -\n");
  TimedGraph g = parse_instance(in);
  CHECK(g.n() == 2);
  CHECK(g.m() == 2);
  CHECK(g.edge(1).interval == TimeInterval::of(1, 2));
  CHECK(g.edge(2).interval.isEmpty());
  CHECK(!g.budget.has_value());
}

TEST_CASE("cost-form edges carry one cost per covered step") {
  std::istringstream in(
      "et v1 undirected cost\n"
      "e a b 2:4 5,-1,0\n"
      "e a b -\n"
      "budget 4\n");
  TimedGraph g = parse_instance(in);
  CHECK(g.costForm);
  CHECK(g.edge(1).costs == std::vector<std::int64_t>{5, -1, 0});
  CHECK(g.edge(1).costAt(3) == -1);
  CHECK(g.edge(2).costs.empty());
  CHECK(g.budget == 4);
}

TEST_CASE("malformed instances report the offending line") {
  expectParseError("", "missing header");
  expectParseError("et v2 directed interval\n", "expected header");
  expectParseError("et v1 sideways interval\ne a b 1:1\n", "orientation");
  expectParseError("et v1 directed maybe\n", "form must be");
  expectParseError("et v1 directed interval\ne a b 1:1 9\n", "edge line must be");
  expectParseError("et v1 directed cost\ne a b 1:2 1,2,3\n", "cost list has 3 entries");
  expectParseError("et v1 directed interval\ne a b 3:1\n", "write '-' for an empty interval");
  expectParseError("et v1 directed interval\ne a b one:2\n", "expected an integer");
  expectParseError("et v1 directed interval\ne a b 1:2x\n", "trailing characters");
  expectParseError("et v1 directed interval\nbudget 3\n", "only valid in cost form");
  expectParseError("et v1 directed cost\nbudget 1\nbudget 2\n", "duplicate 'budget'");
  expectParseError("et v1 directed interval\nn a\nn a\n", "duplicate node");
  expectParseError("et v1 directed interval\nq a b\n", "unknown line kind");
  expectParseError("et v1 directed cost\ne a b 1:1 ,\n", "empty entry");
  expectParseError("et v1 directed interval\nn a b\n", "node line");
}

TEST_CASE("tokens that would corrupt the format are rejected on write") {
  TimedGraph g(Orientation::Directed, false);
  g.addNode("has space");
  CHECK_THROWS_AS(serialize_instance(g), Error);
  TimedGraph h(Orientation::Directed, false);
  h.addNode("has#hash");
  CHECK_THROWS_AS(serialize_instance(h), Error);
}

TEST_CASE("strings files strip comments and carriage returns") {
  std::istringstream in("# collection\n0110\r\n\n1001\n#tail\n");
  std::vector<std::string> got = parse_strings(in);
  CHECK(got == std::vector<std::string>{"0110", "1001"});
}

TEST_CASE("knowledge files map k-mers to intervals") {
  std::istringstream in("011 2:5\n110 -\n# done\n");
  auto know = parse_knowledge(in);
  CHECK(know.size() == 2);
  CHECK(know.at("011") == TimeInterval::of(2, 5));
  CHECK(know.at("110").isEmpty());

  std::istringstream dup("011 1:1\n011 2:2\n");
  CHECK_THROWS_AS(parse_knowledge(dup), Error);
  std::istringstream bad("011\n");
  CHECK_THROWS_AS(parse_knowledge(bad), Error);
}

TEST_CASE("trail files round-trip and reject truncation") {
  TrailResult t;
  t.edgeIds = {3, 1, 2};
  t.cost = -7;
  t.valid = true;
  std::istringstream in(serialize_trail(t));
  auto [ids, cost] = parse_trail(in);
  CHECK(ids == t.edgeIds);
  CHECK(cost == -7);

  std::istringstream noHeader("cost 0\n1\n");
  CHECK_THROWS_AS(parse_trail(noHeader), Error);
  std::istringstream noCost("trail v1\n");
  CHECK_THROWS_AS(parse_trail(noCost), Error);
  std::istringstream badId("trail v1\ncost 0\n0\n");
  CHECK_THROWS_AS(parse_trail(badId), Error);
  std::istringstream twoIds("trail v1\ncost 0\n1 2\n");
  CHECK_THROWS_AS(parse_trail(twoIds), Error);
}
