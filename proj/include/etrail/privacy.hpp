#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "etrail/rng.hpp"
#include "etrail/timed_graph.hpp"

namespace etrail {

// Which counting backend reconstruction_count uses.
enum class CountRoute {
  Auto,       // window engine when its state bound fits the budget, else oracle
  WindowDp,   // force the de Bruijn window engine
  BruteForce  // force the exhaustive oracle
};

// How many strings have exactly the k-mer multiset of `secret` and respect
// the positional knowledge (node-distinct trail count of the order-k de
// Bruijn graph of {secret}). Knowledge keys whose length differs from k are
// ignored; keys that never occur in the secret constrain nothing; intervals
// are clamped to [1, m].
BigInt reconstruction_count(const std::string& secret, int k,
                            const std::map<std::string, TimeInterval>& knowledge = {},
                            std::size_t stateBudget = 2'000'000,
                            CountRoute route = CountRoute::Auto);

struct AnonymityQuery {
  std::string secret;
  std::int64_t z = 1;  // required number of indistinguishable reconstructions
  std::map<std::string, TimeInterval> knowledge;
  std::optional<int> kMin;  // default 2
  std::optional<int> kMax;  // default |secret| - 1
  std::uint64_t seed = 0;
};

struct AnonymityReport {
  int kStar = 0;      // largest k with at least z reconstructions
  BigInt count = 0;   // reconstruction count at kStar
  std::string released;  // uniform sample among the reconstructions
};

// Scans k from kMax down to kMin and stops at the first (largest) k whose
// reconstruction count reaches z; releases one uniformly sampled
// reconstruction at that k. Errors NoSuchK when no k in range qualifies.
AnonymityReport anonymize(const AnonymityQuery& q, std::size_t stateBudget = 2'000'000);

// Does the secret admit at least z reconstructions at order k?
std::pair<bool, BigInt> verify_anonymity(const std::string& secret, int k, std::int64_t z,
                                         const std::map<std::string, TimeInterval>& knowledge = {},
                                         std::size_t stateBudget = 2'000'000);

}  // namespace etrail
