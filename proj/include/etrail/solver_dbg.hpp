#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "etrail/debruijn.hpp"
#include "etrail/rng.hpp"
#include "etrail/solver_general.hpp"

namespace etrail {

struct DbgOptions {
  std::size_t stateBudget = 2000000;
  bool keepGraph = false;  // retain layers for enumerate / sample
};

// State graph specialised to de Bruijn graphs: a layer-t state is just the
// last min(w,t)+k-1 spelled letters. Which copies of a k-mer are still usable
// is derivable from that window, because a copy can only ever be placed
// within w steps of its deadline. This requires every copy of a k-mer to
// share one availability interval (and one cost vector) — the natural shape
// when availability expresses knowledge about k-mer positions. Instances
// violating that error with UnequalParallelCosts.
class DbgEngine {
 public:
  explicit DbgEngine(const DeBruijnGraph& dbg, const DbgOptions& opts = {});

  // count = number of minimum-cost node-distinct trails (= distinct spelled
  // strings), which is exactly s-z path counting in this state graph.
  const SolveSummary& summary() const { return summary_; }
  int width() const { return w_; }
  bool densityRejected() const { return densityRejected_; }

  // Minimum-cost trails in lexicographic spelled-string order, with the
  // canonical (lowest-id-first) copy assignment. Requires keepGraph.
  std::vector<std::pair<std::string, TrailResult>> enumerate(
      std::optional<std::uint64_t> limit = std::nullopt) const;
  std::pair<std::string, TrailResult> bestTrail() const;  // first of enumerate(1)

  // The r-th trail (0-based) in enumeration order, computed by unranking —
  // no materialisation. Pre: 0 <= r < summary().count.
  std::pair<std::string, TrailResult> unrank(const BigInt& r) const;
  // Uniform over the minimum-cost trails: unrank(uniformBelow(count)).
  std::pair<std::string, TrailResult> sample(Rng& rng) const;

  std::size_t layerCount(int t) const;                 // keepGraph
  std::vector<std::string> layerAlphas(int t) const;   // keepGraph, sorted

 private:
  struct St {
    std::string alpha;
    std::int64_t cost;  // cheapest prefix
    BigInt cnt;         // # cheapest prefixes
  };
  struct Group {
    std::string kmer;
    TimeInterval iv;
    std::vector<std::int64_t> costs;  // shared by all copies; empty = zero
    std::vector<EdgeId> copies;       // ascending id = canonical pick order
    std::int64_t costAt(int t) const {
      return costs.empty() ? 0 : costs[static_cast<std::size_t>(t - iv.lo)];
    }
  };

  void run(const DbgOptions& opts);
  void ensureSuffix() const;
  int groupOf(const std::string& kmer) const;
  // Occurrences of `kmer` among the k-mers spelled by `window`.
  static int occCount(const std::string& window, const std::string& kmer);
  // Whether state (t, alpha) can append letter x at time t+1; fills the
  // group index and the child window string on success.
  bool transition(int t, const std::string& alpha, char x, int& groupIdx,
                  std::string& childAlpha) const;

  DeBruijnGraph dbg_;
  SolveSummary summary_;
  int w_ = 0;
  bool densityRejected_ = false;
  bool kept_ = false;
  std::string sortedLetters_;

  std::unordered_map<std::string, int> groupIdx_;
  std::vector<Group> groups_;
  std::vector<std::vector<int>> deadlineGroups_;  // [t]: groups with hi == t
  std::vector<std::vector<St>> layers_;           // keepGraph
  std::vector<std::unordered_map<std::string, std::uint32_t>> index_;  // keepGraph
  // Lazy backward pass (keepGraph): cheapest completion cost and number of
  // cheapest completions per state.
  mutable std::vector<std::vector<std::int64_t>> minSuffix_;
  mutable std::vector<std::vector<BigInt>> cntSuffix_;
};

SolveSummary solve_dbg(const DeBruijnGraph& dbg, const DbgOptions& opts = {});

// log2 of the state-count guarantees, used to route between engines and to
// budget the privacy harness: m * lambda^(w/(k-1)+1) for the dbg engine with
// lambda = min(sigma^(k-1), 2w-1), and m * w^1.5 * 4^w for the general one.
long double log2_dbg_state_bound(int sigma, int k, int w, std::size_t m);
long double log2_general_state_bound(int w, std::size_t m);

}  // namespace etrail
