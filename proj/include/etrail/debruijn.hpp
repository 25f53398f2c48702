#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etrail/timed_graph.hpp"

namespace etrail {

struct Alphabet {
  std::string letters;  // distinct symbols, fixed order

  static Alphabet of(const std::string& letters);
  static Alphabet infer(const std::vector<std::string>& strings);

  int size() const { return static_cast<int>(letters.size()); }
  int indexOf(char c) const {
    auto pos = letters.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
  }
  bool operator==(const Alphabet& o) const { return letters == o.letters; }
};

// Order-k de Bruijn graph of a string collection: one node per distinct
// (k-1)-mer (its token is the label itself), one directed edge per k-mer
// occurrence, labelled by the appended letter. Walks spell strings.
class DeBruijnGraph {
 public:
  int k = 2;
  Alphabet alphabet;
  TimedGraph base;          // always directed; interval or cost form
  std::string edgeLetters;  // edgeLetters[id-1]

  const std::string& nodeLabel(NodeId v) const { return base.nodes[static_cast<std::size_t>(v)]; }
  char letterOf(EdgeId id) const { return edgeLetters[static_cast<std::size_t>(id - 1)]; }
  std::string kmerOf(EdgeId id) const { return nodeLabel(base.edge(id).tail) + letterOf(id); }
};

// Build from a collection; every edge gets the unconstrained interval [1, m].
// Strings shorter than k error (StringTooShort); letters outside the alphabet
// error (LetterNotInAlphabet). Without an explicit alphabet the sorted set of
// letters occurring in the collection is used (at least two are required).
DeBruijnGraph build_dbg(const std::vector<std::string>& strings, int k,
                        const std::optional<Alphabet>& alphabet = std::nullopt);

// The complete de Bruijn graph: every (k-1)-mer node, every k-mer edge, all
// intervals [1, sigma^k]. Errors SizeBudgetExceeded when sigma^k > edgeBudget.
DeBruijnGraph complete_dbg(const Alphabet& alphabet, int k, std::size_t edgeBudget);

// Replace availability: every copy of a k-mer listed in `knowledge` gets that
// interval; all other edges stay unconstrained ([1, m]). Keys absent from the
// graph error (UnknownKmer); nonempty intervals must lie within [1, m]
// (IntervalOutOfRange).
DeBruijnGraph knowledge_to_intervals(const DeBruijnGraph& dbg,
                                     const std::map<std::string, TimeInterval>& knowledge);

// The string a complete trail spells: tail label of the first edge plus one
// appended letter per edge. The trail must be valid (InvalidTrail).
std::string spell(const DeBruijnGraph& dbg, const TrailResult& trail);

// Recognize a generic instance as a de Bruijn graph: directed, all node
// tokens are equal-length strings over >= 2 symbols, and every edge's labels
// overlap by k-2. Returns nullopt when any condition fails.
std::optional<DeBruijnGraph> try_as_debruijn(const TimedGraph& g);

}  // namespace etrail
