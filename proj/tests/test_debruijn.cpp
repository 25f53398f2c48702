#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "etrail/debruijn.hpp"

using namespace etrail;

namespace {

const std::vector<std::string> kFigureCollection = {"001", "010", "011", "011",
                                                    "100", "101", "110", "110"};

std::multiset<std::string> kmerMultiset(const std::vector<std::string>& strings, int k) {
  std::multiset<std::string> out;
  for (const std::string& s : strings)
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= s.size(); ++i)
      out.insert(s.substr(i, static_cast<std::size_t>(k)));
  return out;
}

}  // namespace

TEST_CASE("alphabet: distinct letters, at least two") {
  Alphabet ab = Alphabet::of("ACGT");
  CHECK(ab.size() == 4);
  CHECK(ab.indexOf('G') == 2);
  CHECK(ab.indexOf('X') == -1);
  CHECK_THROWS_AS(Alphabet::of("AA"), Error);
  CHECK_THROWS_AS(Alphabet::of("A"), Error);
  CHECK_THROWS_AS(Alphabet::of(""), Error);
}

TEST_CASE("alphabet inference: sorted set of occurring letters") {
  CHECK(Alphabet::infer({"baca"}).letters == "abc");
  CHECK(Alphabet::infer({"10", "01"}).letters == "01");
  CHECK_THROWS_AS(Alphabet::infer({"aaaa"}), Error);
  CHECK_THROWS_AS(Alphabet::infer({}), Error);
}

TEST_CASE("build_dbg: one node per (k-1)-mer, one edge per k-mer occurrence") {
  DeBruijnGraph dbg = build_dbg(kFigureCollection, 3);
  CHECK(dbg.k == 3);
  CHECK(dbg.alphabet.letters == "01");
  CHECK(dbg.base.n() == 4);  // 00, 01, 10, 11
  CHECK(dbg.base.m() == 8);
  for (const EdgeRecord& e : dbg.base.edges)
    CHECK(e.interval == TimeInterval::of(1, 8));

  std::multiset<std::string> got;
  for (EdgeId id = 1; id <= dbg.base.m(); ++id) got.insert(dbg.kmerOf(id));
  std::multiset<std::string> want(kFigureCollection.begin(), kFigureCollection.end());
  CHECK(got == want);
}

TEST_CASE("build_dbg on a single string: edge i is the i-th k-mer position") {
  DeBruijnGraph dbg = build_dbg({"abcab"}, 2);
  CHECK(dbg.base.m() == 4);
  CHECK(dbg.kmerOf(1) == "ab");
  CHECK(dbg.kmerOf(2) == "bc");
  CHECK(dbg.kmerOf(3) == "ca");
  CHECK(dbg.kmerOf(4) == "ab");
  CHECK(dbg.letterOf(1) == 'b');
  CHECK(dbg.nodeLabel(dbg.base.edge(1).tail) == "a");
  CHECK(dbg.nodeLabel(dbg.base.edge(1).head) == "b");
}

TEST_CASE("build_dbg input validation") {
  CHECK_THROWS_AS(build_dbg({"ab"}, 3), Error);            // too short
  CHECK_THROWS_AS(build_dbg({"abc"}, 1), Error);           // order too small
  CHECK_THROWS_AS(build_dbg({"abz"}, 2, Alphabet::of("ab")), Error);  // bad letter
}

TEST_CASE("complete_dbg: every (k-1)-mer node, every k-mer edge, sorted layout") {
  DeBruijnGraph dbg = complete_dbg(Alphabet::of("01"), 3, 1000);
  CHECK(dbg.base.n() == 4);
  CHECK(dbg.base.m() == 8);
  // Node ids follow sorted label order.
  CHECK(dbg.nodeLabel(0) == "00");
  CHECK(dbg.nodeLabel(1) == "01");
  CHECK(dbg.nodeLabel(2) == "10");
  CHECK(dbg.nodeLabel(3) == "11");
  // Edges are grouped by tail label, letters ascending; all intervals full.
  CHECK(dbg.kmerOf(1) == "000");
  CHECK(dbg.kmerOf(2) == "001");
  CHECK(dbg.kmerOf(3) == "010");
  CHECK(dbg.kmerOf(8) == "111");
  for (const EdgeRecord& e : dbg.base.edges)
    CHECK(e.interval == TimeInterval::of(1, 8));
  // Every node has out-degree and in-degree sigma.
  std::vector<int> outDeg(4, 0), inDeg(4, 0);
  for (const EdgeRecord& e : dbg.base.edges) {
    outDeg[static_cast<std::size_t>(e.tail)]++;
    inDeg[static_cast<std::size_t>(e.head)]++;
  }
  for (int d : outDeg) CHECK(d == 2);
  for (int d : inDeg) CHECK(d == 2);
}

TEST_CASE("complete_dbg refuses to exceed the edge budget") {
  CHECK_THROWS_AS(complete_dbg(Alphabet::of("01"), 3, 7), Error);
  CHECK_NOTHROW(complete_dbg(Alphabet::of("01"), 3, 8));
  CHECK_THROWS_AS(complete_dbg(Alphabet::of("ACGT"), 20, 1u << 20), Error);
}

TEST_CASE("knowledge_to_intervals pins every copy of a k-mer") {
  DeBruijnGraph dbg = build_dbg(kFigureCollection, 3);
  std::map<std::string, TimeInterval> know{{"011", TimeInterval::of(2, 5)},
                                           {"100", TimeInterval::empty()}};
  DeBruijnGraph out = knowledge_to_intervals(dbg, know);
  int pinned = 0, emptied = 0, full = 0;
  for (const EdgeRecord& e : out.base.edges) {
    if (out.kmerOf(e.id) == "011") {
      CHECK(e.interval == TimeInterval::of(2, 5));
      ++pinned;
    } else if (out.kmerOf(e.id) == "100") {
      CHECK(e.interval.isEmpty());
      ++emptied;
    } else {
      CHECK(e.interval == TimeInterval::of(1, 8));
      ++full;
    }
  }
  CHECK(pinned == 2);
  CHECK(emptied == 1);
  CHECK(full == 5);
}

TEST_CASE("knowledge_to_intervals validation") {
  DeBruijnGraph dbg = build_dbg(kFigureCollection, 3);
  CHECK_THROWS_AS(knowledge_to_intervals(dbg, {{"111", TimeInterval::of(1, 2)}}), Error);
  CHECK_THROWS_AS(knowledge_to_intervals(dbg, {{"011", TimeInterval::of(0, 3)}}), Error);
  CHECK_THROWS_AS(knowledge_to_intervals(dbg, {{"011", TimeInterval::of(1, 9)}}), Error);
}

TEST_CASE("spell returns the string a complete trail reads off") {
  DeBruijnGraph dbg = build_dbg({"banana"}, 3);
  std::vector<EdgeId> ids = {1, 2, 3, 4};  // identity placement
  CHECK(spell(dbg, TrailResult{ids, 0, true}) == "banana");
  CHECK_THROWS_AS(spell(dbg, TrailResult{{1, 2}, 0, true}), Error);
  CHECK_THROWS_AS(spell(dbg, TrailResult{{4, 3, 2, 1}, 0, true}), Error);
}

TEST_CASE("try_as_debruijn recognizes serialized de Bruijn instances") {
  DeBruijnGraph dbg = build_dbg(kFigureCollection, 3);
  auto back = try_as_debruijn(dbg.base);
  REQUIRE(back.has_value());
  CHECK(back->k == 3);
  CHECK(back->alphabet.letters == "01");
  for (EdgeId id = 1; id <= dbg.base.m(); ++id) CHECK(back->kmerOf(id) == dbg.kmerOf(id));
}

TEST_CASE("try_as_debruijn rejects non-de-Bruijn shapes") {
  TimedGraph undirected(Orientation::Undirected, false);
  undirected.addEdge("ab", "bc", TimeInterval::of(1, 1));
  CHECK(!try_as_debruijn(undirected));

  TimedGraph raggedTokens(Orientation::Directed, false);
  raggedTokens.addEdge("ab", "b", TimeInterval::of(1, 1));
  CHECK(!try_as_debruijn(raggedTokens));

  TimedGraph noOverlap(Orientation::Directed, false);
  noOverlap.addEdge("ab", "cd", TimeInterval::of(1, 1));
  CHECK(!try_as_debruijn(noOverlap));

  TimedGraph unary(Orientation::Directed, false);
  unary.addEdge("aa", "aa", TimeInterval::of(1, 1));
  CHECK(!try_as_debruijn(unary));

  TimedGraph empty(Orientation::Directed, false);
  CHECK(!try_as_debruijn(empty));
}

TEST_CASE("spelled strings carry the k-mer multiset of the input") {
  DeBruijnGraph dbg = build_dbg({"0110011010"}, 3);
  std::string back = spell(dbg, TrailResult{{1, 2, 3, 4, 5, 6, 7, 8}, 0, true});
  CHECK(back == "0110011010");
  CHECK(kmerMultiset({back}, 3) == kmerMultiset({"0110011010"}, 3));
}
