#ifndef PATHHOM_RANDGRAPH_HPP
#define PATHHOM_RANDGRAPH_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <pathhom/digraph.hpp>
#include <pathhom/types.hpp>

namespace pathhom {

struct ERSpec {
  int n = 4;
  double q = 0.5;       // arc probability, in [0, 1]
  int trials = 1000;
  std::uint64_t seed = 0;
  int max_dim = 2;
};

struct BettiDistribution {
  ERSpec spec;
  // counts[p][value] = number of trials with reduced Betti value in dim p.
  std::vector<std::map<std::int64_t, std::int64_t>> counts;

  // Exact relative frequency count/trials.
  Rational frequency(int dim, std::int64_t value) const;
};

// One Erdos-Renyi digraph: each of the n(n-1) ordered pairs independently
// with probability q, drawn in lexicographic pair order.
Digraph sample_er_digraph(int n, double q, std::mt19937_64& rng);

// Empirical distribution of the reduced Betti vector over seeded trials.
// Trials are partitioned into fixed blocks of 64; block b uses a generator
// seeded with seed + b, so results do not depend on the thread count.
BettiDistribution sample_er(const ERSpec& spec, unsigned threads = 1);

} // namespace pathhom

#endif
