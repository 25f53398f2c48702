// Command-line surface: decide/solve/count/enumerate an instance, build de
// Bruijn instances from strings, generate hardness and random instances,
// benchmark the engines, and run the anonymity harness.
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "etrail/debruijn.hpp"
#include "etrail/errors.hpp"
#include "etrail/generators.hpp"
#include "etrail/io.hpp"
#include "etrail/oracle.hpp"
#include "etrail/privacy.hpp"
#include "etrail/reductions.hpp"
#include "etrail/rng.hpp"
#include "etrail/solver_dbg.hpp"
#include "etrail/solver_general.hpp"

namespace {

using namespace etrail;

// The one supported environment override: ETRAIL_MEM_MB caps solver state
// tables and generated graph sizes (default 512).
std::size_t memBudgetMb() {
  if (const char* env = std::getenv("ETRAIL_MEM_MB")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring malformed ETRAIL_MEM_MB\n";
  }
  return 512;
}
std::size_t stateBudget() { return memBudgetMb() * 1024 * 1024 / 256; }
std::size_t edgeBudget() { return memBudgetMb() * 1024 * 1024 / 96; }

// The window engine needs one interval and one cost vector per k-mer.
bool uniformGroups(const DeBruijnGraph& dbg) {
  std::map<std::string, EdgeId> first;
  for (const EdgeRecord& e : dbg.base.edges) {
    auto [it, fresh] = first.try_emplace(dbg.kmerOf(e.id), e.id);
    if (fresh) continue;
    const EdgeRecord& f = dbg.base.edge(it->second);
    if (!(f.interval == e.interval) || f.costs != e.costs) return false;
  }
  return true;
}

// Resolves --solver for a loaded instance. "auto" compares the two state
// bounds and picks the window engine when it applies and is not larger.
std::string resolveSolver(const TimedGraph& g, const std::string& requested,
                          std::optional<DeBruijnGraph>& dbgOut) {
  if (requested == "oracle" || requested == "general") return requested;
  std::optional<DeBruijnGraph> dbg = try_as_debruijn(g);
  if (requested == "dbg") {
    if (!dbg) fail(Errc::InvalidArgument, "instance is not a de Bruijn graph");
    dbgOut = std::move(*dbg);
    return "dbg";
  }
  if (dbg && uniformGroups(*dbg)) {
    int w = 0;
    for (const EdgeRecord& e : g.edges) w = std::max(w, e.interval.length());
    if (w > 0) {
      std::size_t m = static_cast<std::size_t>(g.m());
      if (log2_dbg_state_bound(dbg->alphabet.size(), dbg->k, w, m) <=
          log2_general_state_bound(w, m)) {
        dbgOut = std::move(*dbg);
        return "dbg";
      }
    }
  }
  return "general";
}

struct Outcome {
  bool feasible = false;
  std::optional<std::int64_t> minCost;
  BigInt count = 0;
  std::size_t states = 0;
};

Outcome runSolver(const TimedGraph& g, const std::string& solver,
                  const std::optional<DeBruijnGraph>& dbg) {
  Outcome out;
  if (solver == "oracle") {
    OracleReport rep = brute_solve(g, {});
    out.feasible = rep.feasible;
    out.minCost = rep.minCost;
    out.count = rep.count;
  } else if (solver == "dbg") {
    DbgOptions opts;
    opts.stateBudget = stateBudget();
    SolveSummary s = solve_dbg(*dbg, opts);
    out.feasible = s.feasible;
    out.minCost = s.minCost;
    out.count = s.count;
    out.states = s.stateCount;
  } else {
    GeneralOptions opts;
    opts.stateBudget = stateBudget();
    SolveSummary s = solve_general(g, opts);
    out.feasible = s.feasible;
    out.minCost = s.minCost;
    out.count = s.count;
    out.states = s.stateCount;
  }
  return out;
}

bool withinBudget(const Outcome& out, const TimedGraph& g) {
  if (!out.feasible) return false;
  return !g.budget.has_value() || *out.minCost <= *g.budget;
}

void writeOut(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) fail(Errc::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> readTokens(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::vector<std::string> toks;
  std::string tok;
  while (f >> tok) toks.push_back(tok);
  return toks;
}

IntRange parseRange(const std::string& spec) {
  auto colon = spec.find(':');
  try {
    if (colon == std::string::npos) {
      int v = std::stoi(spec);
      return {v, v};
    }
    return {std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))};
  } catch (const std::exception&) {
    fail(Errc::InvalidArgument, "expected N or LO:HI, got '" + spec + "'");
  }
}

std::string joinIds(const std::vector<EdgeId>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) os << ' ';
    os << ids[i];
  }
  return os.str();
}

double msSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------- commands

int cmdDecide(const std::string& path, const std::string& solverFlag) {
  TimedGraph g = parse_instance_file(path);
  std::optional<DeBruijnGraph> dbg;
  std::string solver = resolveSolver(g, solverFlag, dbg);
  Outcome out = runSolver(g, solver, dbg);
  bool yes = withinBudget(out, g);
  std::cout << (yes ? "YES" : "NO") << '\n';
  return yes ? 0 : 1;
}

int cmdSolve(const std::string& path, const std::string& solverFlag,
             const std::string& trailOut) {
  TimedGraph g = parse_instance_file(path);
  std::optional<DeBruijnGraph> dbg;
  std::string solver = resolveSolver(g, solverFlag, dbg);
  Outcome out = runSolver(g, solver, dbg);
  if (!out.feasible) {
    std::cout << "NO\n";
    return 1;
  }
  std::cout << *out.minCost << '\n';
  if (!trailOut.empty()) {
    TrailResult best;
    if (solver == "oracle") {
      OracleOptions opts;
      opts.collect = true;
      best = brute_solve(g, opts).trails.front();
    } else if (solver == "dbg") {
      DbgOptions opts;
      opts.stateBudget = stateBudget();
      opts.keepGraph = true;
      best = DbgEngine(*dbg, opts).bestTrail().second;
    } else {
      GeneralOptions opts;
      opts.stateBudget = stateBudget();
      opts.keepGraph = true;
      best = GeneralEngine(g, opts).bestTrail();
    }
    write_trail_file(best, trailOut);
  }
  if (g.budget.has_value() && *out.minCost > *g.budget) {
    std::cerr << "minimum cost " << *out.minCost << " exceeds budget " << *g.budget << '\n';
    return 3;
  }
  return 0;
}

int cmdCount(const std::string& path, const std::string& solverFlag) {
  TimedGraph g = parse_instance_file(path);
  std::optional<DeBruijnGraph> dbg;
  std::string solver = resolveSolver(g, solverFlag, dbg);
  Outcome out = runSolver(g, solver, dbg);
  std::cout << out.count << '\n';
  return out.feasible ? 0 : 1;
}

int cmdEnumerate(const std::string& path, const std::string& solverFlag,
                 std::uint64_t limit, bool spellFlag) {
  TimedGraph g = parse_instance_file(path);
  std::optional<DeBruijnGraph> dbg;
  std::string solver = resolveSolver(g, solverFlag, dbg);
  std::optional<std::uint64_t> cap;
  if (limit > 0) cap = limit;

  std::optional<DeBruijnGraph> spellView;
  if (spellFlag && solver != "dbg") {
    spellView = try_as_debruijn(g);
    if (!spellView) fail(Errc::InvalidArgument, "--spell needs a de Bruijn instance");
  }

  bool any = false;
  if (solver == "dbg") {
    DbgOptions opts;
    opts.stateBudget = stateBudget();
    opts.keepGraph = true;
    DbgEngine engine(*dbg, opts);
    for (const auto& [spelled, trail] : engine.enumerate(cap)) {
      any = true;
      if (spellFlag) std::cout << spelled << '\t';
      std::cout << joinIds(trail.edgeIds) << '\n';
    }
    return engine.summary().feasible ? 0 : 1;
  }
  std::vector<TrailResult> trails;
  if (solver == "oracle") {
    OracleOptions opts;
    opts.collect = true;
    OracleReport rep = brute_solve(g, opts);
    trails = std::move(rep.trails);
    if (cap && trails.size() > *cap) trails.resize(*cap);
    any = rep.feasible;
  } else {
    GeneralOptions opts;
    opts.stateBudget = stateBudget();
    opts.keepGraph = true;
    GeneralEngine engine(g, opts);
    trails = engine.enumerate(cap);
    any = engine.summary().feasible;
  }
  for (const TrailResult& t : trails) {
    if (spellFlag) std::cout << spell(*spellView, t) << '\t';
    std::cout << joinIds(t.edgeIds) << '\n';
  }
  return any ? 0 : 1;
}

int cmdBuildDbg(const std::string& stringsPath, int k, const std::string& knowledgePath,
                const std::string& alphabetFlag, const std::string& outPath) {
  std::vector<std::string> strings = parse_strings_file(stringsPath);
  std::optional<Alphabet> ab;
  if (!alphabetFlag.empty()) ab = Alphabet::of(alphabetFlag);
  DeBruijnGraph dbg = build_dbg(strings, k, ab);
  if (!knowledgePath.empty())
    dbg = knowledge_to_intervals(dbg, parse_knowledge_file(knowledgePath));
  writeOut(serialize_instance(dbg.base), outPath);
  return 0;
}

int cmdGenHard(const std::string& kind, const std::string& sourcePath,
               const std::string& outPath, const std::string& hampathPath,
               const std::string& witnessOut) {
  TimedGraph source = parse_instance_file(sourcePath);
  ReductionArtifacts art;
  if (kind == "dhp")
    art = reduce_dhp_to_diet(source, edgeBudget());
  else
    art = reduce_uhp_to_uicet(source);
  writeOut(serialize_instance(art.instance), outPath);
  if (!hampathPath.empty()) {
    std::vector<std::string> tokens = readTokens(hampathPath);
    TrailResult witness = kind == "dhp" ? dhp_witness(art, tokens) : uhp_witness(art, tokens);
    std::cerr << "witness: " << witness.edgeIds.size() << " edges, cost " << witness.cost
              << '\n';
    if (!witnessOut.empty()) write_trail_file(witness, witnessOut);
  }
  return 0;
}

int cmdGenRandom(bool undirected, bool costForm, bool dbgMode, const std::string& nSpec,
                 const std::string& mSpec, const std::string& wSpec, const std::string& sigmaSpec,
                 const std::string& kSpec, const std::string& lenSpec, std::int64_t costLo,
                 std::int64_t costHi, std::uint64_t seed, const std::string& outPath) {
  Rng rng(seed);
  if (dbgMode) {
    RandomDbgProfile p;
    p.sigma = parseRange(sigmaSpec);
    p.k = parseRange(kSpec);
    p.len = parseRange(lenSpec);
    p.w = parseRange(wSpec);
    p.costForm = costForm;
    p.costLo = costLo;
    p.costHi = costHi;
    DeBruijnGraph dbg = gen_random_planted_dbg(p, rng);
    writeOut(serialize_instance(dbg.base), outPath);
    return 0;
  }
  RandomProfile p;
  p.orientation = undirected ? Orientation::Undirected : Orientation::Directed;
  p.costForm = costForm;
  p.n = parseRange(nSpec);
  p.m = parseRange(mSpec);
  p.w = parseRange(wSpec);
  p.costLo = costLo;
  p.costHi = costHi;
  writeOut(serialize_instance(gen_random_planted(p, rng)), outPath);
  return 0;
}

int cmdBench(const std::string& suite, bool times) {
  auto header = [&] {
    std::cout << "suite\tcase\tengine\tfeasible\tminCost\tcount\tstates";
    if (times) std::cout << "\tms";
    std::cout << '\n';
  };

  auto row = [&](const std::string& name, const std::string& engine, const Outcome& out,
                 double ms) {
    std::cout << suite << '\t' << name << '\t' << engine << '\t' << (out.feasible ? "yes" : "no")
              << '\t';
    if (out.minCost)
      std::cout << *out.minCost;
    else
      std::cout << '-';
    std::cout << '\t' << out.count << '\t' << out.states;
    if (times) std::cout << '\t' << static_cast<long long>(ms + 0.5);
    std::cout << '\n';
  };

  auto runBoth = [&](const std::string& name, const TimedGraph& g, bool tryDbg) {
    std::optional<DeBruijnGraph> dbg;
    if (tryDbg) {
      dbg = try_as_debruijn(g);
      if (dbg && !uniformGroups(*dbg)) dbg.reset();
    }
    {
      auto t0 = std::chrono::steady_clock::now();
      Outcome out = runSolver(g, "general", std::nullopt);
      row(name, "general", out, msSince(t0));
    }
    if (dbg) {
      auto t0 = std::chrono::steady_clock::now();
      Outcome out = runSolver(g, "dbg", dbg);
      row(name, "dbg", out, msSince(t0));
    }
  };

  if (suite == "small") {
    header();
    int idx = 0;
    for (bool undirected : {false, true}) {
      for (bool cost : {false, true}) {
        RandomProfile p;
        p.orientation = undirected ? Orientation::Undirected : Orientation::Directed;
        p.costForm = cost;
        p.n = {6, 6};
        p.m = {11, 11};
        p.w = {3, 3};
        Rng rng(9000 + static_cast<std::uint64_t>(idx));
        TimedGraph g = gen_random_planted(p, rng);
        std::string name = std::string(undirected ? "undirected" : "directed") +
                           (cost ? "-cost" : "-interval") + "-n6-m11-w3";
        runBoth(name, g, false);
        ++idx;
      }
    }
    for (int k : {3, 4}) {
      RandomDbgProfile p;
      p.sigma = {2, 2};
      p.k = {k, k};
      p.len = {16, 16};
      p.w = {2 * (k - 1), 2 * (k - 1)};
      Rng rng(9100 + static_cast<std::uint64_t>(k));
      DeBruijnGraph dbg = gen_random_planted_dbg(p, rng);
      runBoth("dbg-sigma2-k" + std::to_string(k) + "-len16", dbg.base, true);
    }
    return 0;
  }

  if (suite == "hardness") {
    std::cout << "suite\tcase\tnodes\tedges\ttau\twitnessEdges\twitnessCost\n";
    for (int n : {2, 3, 4}) {
      TimedGraph src(Orientation::Directed, false);
      for (int i = 0; i < n; ++i) src.addNode("u" + std::to_string(i));
      std::vector<std::string> path;
      for (int i = 0; i < n; ++i) path.push_back(src.nodes[static_cast<std::size_t>(i)]);
      for (int i = 0; i + 1 < n; ++i)
        src.addEdge(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)],
                    TimeInterval::empty());
      ReductionArtifacts art = reduce_dhp_to_diet(src, edgeBudget());
      TrailResult wit = dhp_witness(art, path);
      std::cout << suite << "\tdhp-path-n" << n << '\t' << art.instance.n() << '\t'
                << art.instance.m() << '\t' << art.tau << '\t' << wit.edgeIds.size() << '\t'
                << wit.cost << '\n';
    }
    for (int n : {3, 4, 5}) {
      TimedGraph src(Orientation::Undirected, false);
      std::vector<std::string> path;
      for (int i = 0; i < n; ++i) path.push_back("u" + std::to_string(i));
      for (const std::string& tok : path) src.addNode(tok);
      for (int i = 0; i + 1 < n; ++i)
        src.addEdge(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)],
                    TimeInterval::empty());
      ReductionArtifacts art = reduce_uhp_to_uicet(src);
      TrailResult wit = uhp_witness(art, path);
      std::cout << suite << "\tuhp-path-n" << n << '\t' << art.instance.n() << '\t'
                << art.instance.m() << "\t-\t" << wit.edgeIds.size() << '\t' << wit.cost << '\n';
    }
    return 0;
  }

  if (suite == "scaling") {
    header();
    for (auto [sigma, k, len, w] : std::vector<std::array<int, 4>>{
             {4, 15, 2000, 28}, {4, 31, 10030, 60}, {2, 15, 200, 28}}) {
      RandomDbgProfile p;
      p.sigma = {sigma, sigma};
      p.k = {k, k};
      p.len = {len, len};
      p.w = {w, w};
      Rng rng(9200 + static_cast<std::uint64_t>(k));
      DeBruijnGraph dbg = gen_random_planted_dbg(p, rng);
      std::string name = "dbg-sigma" + std::to_string(sigma) + "-k" + std::to_string(k) +
                         "-len" + std::to_string(len) + "-w" + std::to_string(w);
      runBoth(name, dbg.base, true);
    }
    return 0;
  }

  fail(Errc::InvalidArgument, "unknown suite '" + suite + "' (small, hardness, scaling)");
}

int cmdAnonymize(const std::string& secretPath, std::int64_t z, const std::string& knowledgePath,
                 std::optional<int> kMin, std::optional<int> kMax, std::uint64_t seed) {
  std::vector<std::string> lines = parse_strings_file(secretPath);
  if (lines.size() != 1)
    fail(Errc::InvalidArgument, "secret file must contain exactly one string");
  AnonymityQuery q;
  q.secret = lines[0];
  q.z = z;
  if (!knowledgePath.empty()) q.knowledge = parse_knowledge_file(knowledgePath);
  q.kMin = kMin;
  q.kMax = kMax;
  q.seed = seed;
  AnonymityReport rep = anonymize(q, stateBudget());
  std::cout << "k " << rep.kStar << '\n'
            << "count " << rep.count << '\n'
            << "release " << rep.released << '\n';
  return 0;
}

int cmdVerifyAnonymity(const std::string& secretPath, int k, std::int64_t z,
                       const std::string& knowledgePath) {
  std::vector<std::string> lines = parse_strings_file(secretPath);
  if (lines.size() != 1)
    fail(Errc::InvalidArgument, "secret file must contain exactly one string");
  std::map<std::string, TimeInterval> knowledge;
  if (!knowledgePath.empty()) knowledge = parse_knowledge_file(knowledgePath);
  auto [holds, count] = verify_anonymity(lines[0], k, z, knowledge, stateBudget());
  std::cout << "count " << count << '\n' << "holds " << (holds ? "true" : "false") << '\n';
  return holds ? 0 : 1;
}

int mapError(const Error& e) {
  switch (e.code()) {
    case Errc::SizeBudgetExceeded:
    case Errc::SolverBudgetExceeded:
    case Errc::CapExceeded:
      return 3;
    case Errc::NoSuchK:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eulerian trails under interval availability and per-step costs"};
  app.require_subcommand(1);
  int rc = 0;

  std::string instancePath, solverFlag = "auto", trailOut;
  auto addSolverOpts = [&](CLI::App* cmd) {
    cmd->add_option("instance", instancePath, "instance file")->required();
    cmd->add_option("--solver", solverFlag, "general|dbg|oracle|auto")
        ->check(CLI::IsMember({"general", "dbg", "oracle", "auto"}))
        ->capture_default_str();
  };

  CLI::App* decide = app.add_subcommand("decide", "is there a valid trail within budget?");
  addSolverOpts(decide);
  decide->callback([&] { rc = cmdDecide(instancePath, solverFlag); });

  CLI::App* solve = app.add_subcommand("solve", "minimum trail cost (and optionally a trail)");
  addSolverOpts(solve);
  solve->add_option("--trail-out", trailOut, "write one minimum-cost trail to this file");
  solve->callback([&] { rc = cmdSolve(instancePath, solverFlag, trailOut); });

  CLI::App* count = app.add_subcommand("count", "number of minimum-cost trails");
  addSolverOpts(count);
  count->callback([&] { rc = cmdCount(instancePath, solverFlag); });

  std::uint64_t limit = 1000;
  bool spellFlag = false;
  CLI::App* enumerateCmd = app.add_subcommand("enumerate", "list minimum-cost trails");
  addSolverOpts(enumerateCmd);
  enumerateCmd->add_option("--limit", limit, "maximum trails to print; 0 = all")
      ->capture_default_str();
  enumerateCmd->add_flag("--spell", spellFlag, "prefix each trail with its spelled string");
  enumerateCmd->callback([&] { rc = cmdEnumerate(instancePath, solverFlag, limit, spellFlag); });

  std::string stringsPath, knowledgePath, alphabetFlag, outPath;
  int orderK = 3;
  CLI::App* buildDbg = app.add_subcommand("build-dbg", "de Bruijn instance from strings");
  buildDbg->add_option("strings", stringsPath, "strings file, one per line")->required();
  buildDbg->add_option("-k,--order", orderK, "de Bruijn order")->required();
  buildDbg->add_option("--knowledge", knowledgePath, "k-mer interval file");
  buildDbg->add_option("--alphabet", alphabetFlag, "explicit alphabet letters");
  buildDbg->add_option("-o,--out", outPath, "output file (default stdout)");
  buildDbg->callback(
      [&] { rc = cmdBuildDbg(stringsPath, orderK, knowledgePath, alphabetFlag, outPath); });

  std::string kind, sourcePath, hampathPath, witnessOut;
  CLI::App* genHard = app.add_subcommand("gen-hard", "Hamiltonian-path hardness instance");
  genHard->add_option("--kind", kind, "dhp (directed) or uhp (undirected)")
      ->required()
      ->check(CLI::IsMember({"dhp", "uhp"}));
  genHard->add_option("source", sourcePath, "source graph file")->required();
  genHard->add_option("-o,--out", outPath, "output file (default stdout)");
  genHard->add_option("--hampath", hampathPath,
                      "file of Hamiltonian path tokens; builds a witness");
  genHard->add_option("--witness-out", witnessOut, "write the witness trail to this file");
  genHard->callback(
      [&] { rc = cmdGenHard(kind, sourcePath, outPath, hampathPath, witnessOut); });

  bool undirected = false, costForm = false, dbgMode = false;
  std::string nSpec = "5", mSpec = "10", wSpec = "3", sigmaSpec = "2", kSpec = "3",
              lenSpec = "12";
  std::int64_t costLo = -5, costHi = 5;
  std::uint64_t seed = 0;
  CLI::App* genRandom = app.add_subcommand("gen-random", "random planted YES instance");
  genRandom->add_flag("--undirected", undirected, "undirected instance");
  genRandom->add_flag("--cost", costForm, "cost form with a budget");
  genRandom->add_flag("--dbg", dbgMode, "de Bruijn instance from a random string");
  genRandom->add_option("--n", nSpec, "node count or LO:HI range")->capture_default_str();
  genRandom->add_option("--m", mSpec, "edge count or LO:HI range")->capture_default_str();
  genRandom->add_option("--w", wSpec, "max interval length or LO:HI range")
      ->capture_default_str();
  genRandom->add_option("--sigma", sigmaSpec, "alphabet size (dbg mode)")->capture_default_str();
  genRandom->add_option("--k", kSpec, "de Bruijn order (dbg mode)")->capture_default_str();
  genRandom->add_option("--len", lenSpec, "string length (dbg mode)")->capture_default_str();
  genRandom->add_option("--cost-lo", costLo, "minimum per-step cost")->capture_default_str();
  genRandom->add_option("--cost-hi", costHi, "maximum per-step cost")->capture_default_str();
  genRandom->add_option("--seed", seed, "random seed")->capture_default_str();
  genRandom->add_option("-o,--out", outPath, "output file (default stdout)");
  genRandom->callback([&] {
    rc = cmdGenRandom(undirected, costForm, dbgMode, nSpec, mSpec, wSpec, sigmaSpec, kSpec,
                      lenSpec, costLo, costHi, seed, outPath);
  });

  std::string suite = "small";
  bool times = false;
  CLI::App* bench = app.add_subcommand("bench", "fixed-seed engine comparison table");
  bench->add_option("--suite", suite, "small|hardness|scaling")->capture_default_str();
  bench->add_flag("--times", times, "append a wall-time column (not byte-stable)");
  bench->callback([&] { rc = cmdBench(suite, times); });

  std::string secretPath;
  std::int64_t z = 1;
  int kOpt = 0, kMinOpt = 0, kMaxOpt = 0;
  CLI::App* anon = app.add_subcommand("anonymize", "largest k with >= z reconstructions");
  anon->add_option("secret", secretPath, "file holding the secret string")->required();
  anon->add_option("-z", z, "required number of reconstructions")->required();
  anon->add_option("--knowledge", knowledgePath, "k-mer interval file");
  anon->add_option("--kmin", kMinOpt, "smallest order to try (default 2)");
  anon->add_option("--kmax", kMaxOpt, "largest order to try (default |secret|-1)");
  anon->add_option("--seed", seed, "sampling seed")->capture_default_str();
  anon->callback([&] {
    rc = cmdAnonymize(secretPath, z, knowledgePath,
                      kMinOpt > 0 ? std::optional<int>(kMinOpt) : std::nullopt,
                      kMaxOpt > 0 ? std::optional<int>(kMaxOpt) : std::nullopt, seed);
  });

  CLI::App* verify = app.add_subcommand("verify-anonymity", "check one (k, z) pair");
  verify->add_option("secret", secretPath, "file holding the secret string")->required();
  verify->add_option("-k", kOpt, "de Bruijn order")->required();
  verify->add_option("-z", z, "required number of reconstructions")->required();
  verify->add_option("--knowledge", knowledgePath, "k-mer interval file");
  verify->callback([&] { rc = cmdVerifyAnonymity(secretPath, kOpt, z, knowledgePath); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    return mapError(e);
  }
  return rc;
}
