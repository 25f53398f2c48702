#include "etrail/debruijn.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace etrail {

Alphabet Alphabet::of(const std::string& letters) {
  std::string s = letters;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(Errc::InvalidArgument, "alphabet letters must be distinct");
  if (letters.size() < 2) fail(Errc::InvalidArgument, "alphabet needs at least two letters");
  return Alphabet{letters};
}

Alphabet Alphabet::infer(const std::vector<std::string>& strings) {
  std::set<char> seen;
  for (const std::string& s : strings) seen.insert(s.begin(), s.end());
  std::string letters(seen.begin(), seen.end());
  if (letters.size() < 2)
    fail(Errc::InvalidArgument, "cannot infer an alphabet with fewer than two letters");
  return Alphabet{letters};
}

DeBruijnGraph build_dbg(const std::vector<std::string>& strings, int k,
                        const std::optional<Alphabet>& alphabet) {
  if (k < 2) fail(Errc::InvalidArgument, "build_dbg: k must be at least 2");
  DeBruijnGraph dbg;
  dbg.k = k;
  dbg.alphabet = alphabet ? *alphabet : Alphabet::infer(strings);
  dbg.base.orientation = Orientation::Directed;

  struct Occ {
    NodeId tail, head;
    char letter;
  };
  std::vector<Occ> occs;
  for (const std::string& s : strings) {
    if (static_cast<int>(s.size()) < k)
      fail(Errc::StringTooShort, "string of length " + std::to_string(s.size()) +
                                     " has no " + std::to_string(k) + "-mer");
    for (char c : s)
      if (dbg.alphabet.indexOf(c) < 0)
        fail(Errc::LetterNotInAlphabet, std::string("letter '") + c + "'");
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= s.size(); ++i) {
      NodeId tail = dbg.base.addNode(s.substr(i, static_cast<std::size_t>(k - 1)));
      NodeId head = dbg.base.addNode(s.substr(i + 1, static_cast<std::size_t>(k - 1)));
      occs.push_back({tail, head, s[i + static_cast<std::size_t>(k) - 1]});
    }
  }
  const int m = static_cast<int>(occs.size());
  for (const Occ& o : occs) {
    dbg.base.addEdge(o.tail, o.head, TimeInterval::of(1, m));
    dbg.edgeLetters.push_back(o.letter);
  }
  return dbg;
}

DeBruijnGraph complete_dbg(const Alphabet& alphabet, int k, std::size_t edgeBudget) {
  if (k < 2) fail(Errc::InvalidArgument, "complete_dbg: k must be at least 2");
  const std::size_t sigma = static_cast<std::size_t>(alphabet.size());
  std::size_t edges = 1;
  for (int i = 0; i < k; ++i) {
    if (edges > edgeBudget / sigma)
      fail(Errc::SizeBudgetExceeded,
           "complete_dbg: sigma^k exceeds edge budget " + std::to_string(edgeBudget));
    edges *= sigma;
  }

  DeBruijnGraph dbg;
  dbg.k = k;
  dbg.alphabet = alphabet;
  dbg.base.orientation = Orientation::Directed;

  // Nodes in lexicographic label order, edges in lexicographic k-mer order.
  std::size_t nodeCount = edges / sigma;
  std::string label(static_cast<std::size_t>(k - 1), alphabet.letters[0]);
  std::vector<std::string> labels;
  labels.reserve(nodeCount);
  std::function<void(std::size_t)> gen = [&](std::size_t pos) {
    if (pos == label.size()) {
      labels.push_back(label);
      return;
    }
    for (char c : alphabet.letters) {
      label[pos] = c;
      gen(pos + 1);
    }
  };
  gen(0);
  std::sort(labels.begin(), labels.end());
  for (const std::string& l : labels) dbg.base.addNode(l);

  const int m = static_cast<int>(edges);
  for (const std::string& l : labels) {
    NodeId tail = dbg.base.nodeId(l);
    std::string sorted = alphabet.letters;
    std::sort(sorted.begin(), sorted.end());
    for (char c : sorted) {
      NodeId head = dbg.base.nodeId(l.substr(1) + c);
      dbg.base.addEdge(tail, head, TimeInterval::of(1, m));
      dbg.edgeLetters.push_back(c);
    }
  }
  return dbg;
}

DeBruijnGraph knowledge_to_intervals(const DeBruijnGraph& dbg,
                                     const std::map<std::string, TimeInterval>& knowledge) {
  const int m = dbg.base.m();
  std::map<std::string, std::vector<EdgeId>> groups;
  for (const EdgeRecord& e : dbg.base.edges) groups[dbg.kmerOf(e.id)].push_back(e.id);

  std::vector<TimeInterval> ivs(static_cast<std::size_t>(m), TimeInterval::of(1, m));
  for (const auto& [kmer, iv] : knowledge) {
    auto it = groups.find(kmer);
    if (it == groups.end()) fail(Errc::UnknownKmer, kmer);
    if (!iv.isEmpty() && (iv.lo < 1 || iv.hi > m))
      fail(Errc::IntervalOutOfRange, kmer + " -> [" + std::to_string(iv.lo) + "," +
                                         std::to_string(iv.hi) + "] outside [1," +
                                         std::to_string(m) + "]");
    for (EdgeId id : it->second) ivs[static_cast<std::size_t>(id - 1)] = iv;
  }

  DeBruijnGraph out;
  out.k = dbg.k;
  out.alphabet = dbg.alphabet;
  out.edgeLetters = dbg.edgeLetters;
  out.base.orientation = Orientation::Directed;
  for (const std::string& tok : dbg.base.nodes) out.base.addNode(tok);
  for (const EdgeRecord& e : dbg.base.edges)
    out.base.addEdge(e.tail, e.head, ivs[static_cast<std::size_t>(e.id - 1)]);
  return out;
}

std::string spell(const DeBruijnGraph& dbg, const TrailResult& trail) {
  TrailResult check = validate_trail(dbg.base, trail.edgeIds);
  if (!check.valid || trail.edgeIds.empty()) fail(Errc::InvalidTrail, "spell needs a valid trail");
  std::string s = dbg.nodeLabel(dbg.base.edge(trail.edgeIds[0]).tail);
  for (EdgeId id : trail.edgeIds) s.push_back(dbg.letterOf(id));
  return s;
}

std::optional<DeBruijnGraph> try_as_debruijn(const TimedGraph& g) {
  if (g.orientation != Orientation::Directed || g.n() == 0) return std::nullopt;
  const std::size_t len = g.nodes[0].size();
  if (len == 0) return std::nullopt;
  std::set<char> chars;
  for (const std::string& tok : g.nodes) {
    if (tok.size() != len) return std::nullopt;
    chars.insert(tok.begin(), tok.end());
  }
  if (chars.size() < 2) return std::nullopt;
  for (const EdgeRecord& e : g.edges) {
    const std::string& t = g.nodes[static_cast<std::size_t>(e.tail)];
    const std::string& h = g.nodes[static_cast<std::size_t>(e.head)];
    if (len > 1 && t.compare(1, len - 1, h, 0, len - 1) != 0) return std::nullopt;
  }
  DeBruijnGraph dbg;
  dbg.k = static_cast<int>(len) + 1;
  dbg.alphabet = Alphabet{std::string(chars.begin(), chars.end())};
  dbg.base = g;
  for (const EdgeRecord& e : g.edges)
    dbg.edgeLetters.push_back(g.nodes[static_cast<std::size_t>(e.head)].back());
  return dbg;
}

}  // namespace etrail
