#include <pathhom/randgraph.hpp>

#include <mutex>
#include <stdexcept>

#include <pathhom/homology.hpp>
#include <pathhom/parallel.hpp>

namespace pathhom {

Rational BettiDistribution::frequency(int dim, std::int64_t value) const {
  const auto& byValue = counts.at(dim);
  const auto it = byValue.find(value);
  if (it == byValue.end()) return 0;
  return Rational(it->second, spec.trials);
}

Digraph sample_er_digraph(int n, double q, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < q) arcs.emplace_back(u, v);
    }
  return Digraph(n, std::move(arcs));
}

BettiDistribution sample_er(const ERSpec& spec, unsigned threads) {
  if (spec.n < 0 || spec.q < 0.0 || spec.q > 1.0 || spec.trials < 1)
    throw std::invalid_argument("sample_er: need 0 <= q <= 1 and trials >= 1");
  BettiDistribution out;
  out.spec = spec;
  out.counts.resize(spec.max_dim + 1);

  constexpr int kBlock = 64;
  const std::size_t blocks = (static_cast<std::size_t>(spec.trials) + kBlock - 1) / kBlock;
  std::mutex merge_mutex;
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::mt19937_64 rng(spec.seed + b);
    const int begin = static_cast<int>(b) * kBlock;
    const int end = std::min(spec.trials, begin + kBlock);
    std::vector<std::map<std::int64_t, std::int64_t>> local(spec.max_dim + 1);
    for (int t = begin; t < end; ++t) {
      const Digraph d = sample_er_digraph(spec.n, spec.q, rng);
      const auto betti = betti_curve(d, spec.max_dim);
      for (int p = 0; p <= spec.max_dim; ++p) ++local[p][betti[p]];
    }
    const std::lock_guard<std::mutex> lock(merge_mutex);
    for (int p = 0; p <= spec.max_dim; ++p)
      for (const auto& [value, count] : local[p]) out.counts[p][value] += count;
  });
  return out;
}

} // namespace pathhom
