#include "etrail/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "etrail/errors.hpp"

namespace etrail {
namespace {

[[noreturn]] void parseFail(std::size_t lineNo, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(lineNo) + ": " + what);
}

// Strips the '#'-comment suffix and surrounding whitespace.
std::string cleanLine(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  std::size_t b = 0;
  while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
  std::size_t e = line.size();
  while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
  return line.substr(b, e - b);
}

std::vector<std::string> splitWs(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(std::move(tok));
  return out;
}

std::int64_t parseInt64(const std::string& tok, std::size_t lineNo) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    parseFail(lineNo, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parseFail(lineNo, "trailing characters in integer '" + tok + "'");
  return value;
}

int parseIntBounded(const std::string& tok, std::size_t lineNo) {
  std::int64_t v = parseInt64(tok, lineNo);
  if (v < INT32_MIN || v > INT32_MAX) parseFail(lineNo, "integer out of range: '" + tok + "'");
  return static_cast<int>(v);
}

TimeInterval parseIntervalSpec(const std::string& tok, std::size_t lineNo) {
  if (tok == "-") return TimeInterval::empty();
  auto colon = tok.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
    parseFail(lineNo, "expected '<lo>:<hi>' or '-', got '" + tok + "'");
  int lo = parseIntBounded(tok.substr(0, colon), lineNo);
  int hi = parseIntBounded(tok.substr(colon + 1), lineNo);
  if (lo > hi) parseFail(lineNo, "interval '" + tok + "' has lo > hi; write '-' for an empty interval");
  return TimeInterval::of(lo, hi);
}

std::vector<std::int64_t> parseCostList(const std::string& tok, std::size_t lineNo) {
  std::vector<std::int64_t> costs;
  std::size_t start = 0;
  while (true) {
    auto comma = tok.find(',', start);
    std::string piece = tok.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) parseFail(lineNo, "empty entry in cost list '" + tok + "'");
    costs.push_back(parseInt64(piece, lineNo));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return costs;
}

void checkToken(const std::string& tok) {
  if (tok.empty()) fail(Errc::InvalidArgument, "node token must be non-empty");
  for (char c : tok)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
      fail(Errc::InvalidArgument, "node token '" + tok + "' contains whitespace or '#'");
}

}  // namespace

TimedGraph parse_instance(std::istream& in) {
  std::string line;
  std::size_t lineNo = 0;
  bool sawHeader = false;
  bool sawBudget = false;
  Orientation orientation = Orientation::Directed;
  bool costForm = false;
  TimedGraph g(Orientation::Directed, false);

  while (std::getline(in, line)) {
    ++lineNo;
    std::string body = cleanLine(line);
    if (body.empty()) continue;
    auto toks = splitWs(body);

    if (!sawHeader) {
      if (toks.size() != 4 || toks[0] != "et" || toks[1] != "v1")
        parseFail(lineNo, "expected header 'et v1 <directed|undirected> <interval|cost>'");
      if (toks[2] == "directed") orientation = Orientation::Directed;
      else if (toks[2] == "undirected") orientation = Orientation::Undirected;
      else parseFail(lineNo, "orientation must be 'directed' or 'undirected', got '" + toks[2] + "'");
      if (toks[3] == "interval") costForm = false;
      else if (toks[3] == "cost") costForm = true;
      else parseFail(lineNo, "form must be 'interval' or 'cost', got '" + toks[3] + "'");
      g = TimedGraph(orientation, costForm);
      sawHeader = true;
      continue;
    }

    if (toks[0] == "n") {
      if (toks.size() != 2) parseFail(lineNo, "node line must be 'n <token>'");
      if (g.hasNode(toks[1])) parseFail(lineNo, "duplicate node '" + toks[1] + "'");
      g.addNode(toks[1]);
    } else if (toks[0] == "e") {
      if (toks.size() != (costForm ? 5u : 4u) && !(costForm && toks.size() == 4 && toks[3] == "-"))
        parseFail(lineNo, costForm
                   ? "cost edge line must be 'e <tail> <head> <lo>:<hi> <c,...>' or 'e <tail> <head> -'"
                   : "edge line must be 'e <tail> <head> <lo>:<hi>' or 'e <tail> <head> -'");
      TimeInterval iv = parseIntervalSpec(toks[3], lineNo);
      std::vector<std::int64_t> costs;
      if (costForm && !iv.isEmpty()) {
        costs = parseCostList(toks[4], lineNo);
        if (static_cast<int>(costs.size()) != iv.length())
          parseFail(lineNo, "cost list has " + std::to_string(costs.size()) + " entries but the interval covers " + std::to_string(iv.length()) + " time steps");
      }
      g.addEdge(toks[1], toks[2], iv, std::move(costs));
    } else if (toks[0] == "budget") {
      if (!costForm) parseFail(lineNo, "'budget' is only valid in cost form");
      if (sawBudget) parseFail(lineNo, "duplicate 'budget' line");
      if (toks.size() != 2) parseFail(lineNo, "budget line must be 'budget <int>'");
      g.budget = parseInt64(toks[1], lineNo);
      sawBudget = true;
    } else {
      parseFail(lineNo, "unknown line kind '" + toks[0] + "'");
    }
  }
  if (!sawHeader) parseFail(lineNo + 1, "missing header 'et v1 ...'");
  return g;
}

TimedGraph parse_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_instance(f);
}

std::string serialize_instance(const TimedGraph& g) {
  std::ostringstream out;
  out << "et v1 " << (g.orientation == Orientation::Directed ? "directed" : "undirected") << ' '
    << (g.costForm ? "cost" : "interval") << '\n';
  for (const auto& token : g.nodes) {
    checkToken(token);
    out << "n " << token << '\n';
  }
  for (const auto& e : g.edges) {
    out << "e " << g.nodes[e.tail] << ' ' << g.nodes[e.head] << ' ';
    if (e.interval.isEmpty()) {
      out << '-';
    } else {
      out << e.interval.lo << ':' << e.interval.hi;
      if (g.costForm) {
        out << ' ';
        for (std::size_t i = 0; i < e.costs.size(); ++i) {
          if (i) out << ',';
          out << e.costs[i];
        }
      }
    }
    out << '\n';
  }
  if (g.budget.has_value()) out << "budget " << *g.budget << '\n';
  return out.str();
}

void write_instance_file(const TimedGraph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(Errc::InvalidArgument, "cannot write '" + path + "'");
  f << serialize_instance(g);
}

std::vector<std::string> parse_strings(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> parse_strings_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_strings(f);
}

std::map<std::string, TimeInterval> parse_knowledge(std::istream& in) {
  std::map<std::string, TimeInterval> out;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string body = cleanLine(line);
    if (body.empty()) continue;
    auto toks = splitWs(body);
    if (toks.size() != 2) parseFail(lineNo, "knowledge line must be '<kmer> <lo>:<hi>'");
    if (out.count(toks[0])) parseFail(lineNo, "duplicate k-mer '" + toks[0] + "'");
    out.emplace(toks[0], parseIntervalSpec(toks[1], lineNo));
  }
  return out;
}

std::map<std::string, TimeInterval> parse_knowledge_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_knowledge(f);
}

std::string serialize_trail(const TrailResult& trail) {
  std::ostringstream out;
  out << "trail v1\n" << "cost " << trail.cost << '\n';
  for (EdgeId id : trail.edgeIds) out << id << '\n';
  return out.str();
}

void write_trail_file(const TrailResult& trail, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(Errc::InvalidArgument, "cannot write '" + path + "'");
  f << serialize_trail(trail);
}

std::pair<std::vector<EdgeId>, std::int64_t> parse_trail(std::istream& in) {
  std::string line;
  std::size_t lineNo = 0;
  bool sawHeader = false, sawCost = false;
  std::int64_t cost = 0;
  std::vector<EdgeId> ids;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string body = cleanLine(line);
    if (body.empty()) continue;
    if (!sawHeader) {
      if (body != "trail v1") parseFail(lineNo, "expected header 'trail v1'");
      sawHeader = true;
      continue;
    }
    auto toks = splitWs(body);
    if (!sawCost) {
      if (toks.size() != 2 || toks[0] != "cost") parseFail(lineNo, "expected 'cost <int>'");
      cost = parseInt64(toks[1], lineNo);
      sawCost = true;
      continue;
    }
    if (toks.size() != 1) parseFail(lineNo, "expected one edge id per line");
    int id = parseIntBounded(toks[0], lineNo);
    if (id < 1) parseFail(lineNo, "edge ids are positive");
    ids.push_back(id);
  }
  if (!sawHeader || !sawCost) parseFail(lineNo + 1, "truncated trail file");
  return {std::move(ids), cost};
}

std::pair<std::vector<EdgeId>, std::int64_t> parse_trail_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_trail(f);
}

}  // namespace etrail
