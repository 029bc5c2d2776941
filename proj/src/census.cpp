#include <pathhom/census.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <pathhom/homology.hpp>
#include <pathhom/parallel.hpp>

namespace pathhom {

GraphFamily family_from_string(const std::string& name) {
  if (name == "digraph") return GraphFamily::digraph;
  if (name == "dag") return GraphFamily::dag;
  if (name == "undirected") return GraphFamily::undirected;
  throw std::invalid_argument("unknown graph family: " + name);
}

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::digraph: return "digraph";
    case GraphFamily::dag: return "dag";
    case GraphFamily::undirected: return "undirected";
  }
  throw std::invalid_argument("unknown graph family");
}

bool BettiFilter::matches(const std::vector<std::int64_t>& reduced_betti) const {
  const std::int64_t b = dimension < static_cast<int>(reduced_betti.size())
                             ? reduced_betti[dimension]
                             : 0;
  switch (cmp) {
    case Cmp::lt: return b < value;
    case Cmp::le: return b <= value;
    case Cmp::eq: return b == value;
    case Cmp::ne: return b != value;
    case Cmp::ge: return b >= value;
    case Cmp::gt: return b > value;
  }
  return false;
}

BettiFilter BettiFilter::parse(const std::string& text) {
  if (text.size() < 3 || text[0] != 'b')
    throw std::invalid_argument("filter must look like b2>0, b1>=1, b0=3");
  std::size_t i = 1;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == 1) throw std::invalid_argument("filter: missing dimension after 'b'");
  BettiFilter out;
  out.dimension = std::stoi(text.substr(1, i - 1));
  std::string op;
  while (i < text.size() && (text[i] == '<' || text[i] == '>' || text[i] == '=' || text[i] == '!'))
    op.push_back(text[i++]);
  if (op == "<") out.cmp = Cmp::lt;
  else if (op == "<=") out.cmp = Cmp::le;
  else if (op == "=" || op == "==") out.cmp = Cmp::eq;
  else if (op == "!=") out.cmp = Cmp::ne;
  else if (op == ">=") out.cmp = Cmp::ge;
  else if (op == ">") out.cmp = Cmp::gt;
  else throw std::invalid_argument("filter: unknown comparison '" + op + "'");
  if (i >= text.size()) throw std::invalid_argument("filter: missing value");
  out.value = std::stoll(text.substr(i));
  return out;
}

namespace {

constexpr int kMaxCanonicalVertices = 7;

std::uint64_t arc_mask(const Digraph& d) {
  const int n = d.vertex_count();
  std::uint64_t mask = 0;
  for (const Arc& a : d.arcs())
    mask |= std::uint64_t(1) << (a.first * n + a.second);
  return mask;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t permuted_mask(std::uint64_t mask, const std::vector<int>& perm, int n) {
  std::uint64_t out = 0;
  while (mask) {
    const int bit = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t(1) << (perm[bit / n] * n + perm[bit % n]);
  }
  return out;
}

std::uint64_t canonical_key_masked(std::uint64_t mask, const std::vector<std::vector<int>>& perms,
                                   int n) {
  std::uint64_t best = permuted_mask(mask, perms.front(), n);
  for (std::size_t i = 1; i < perms.size(); ++i)
    best = std::min(best, permuted_mask(mask, perms[i], n));
  return best;
}

}  // namespace

std::uint64_t canonical_key(const Digraph& d) {
  const int n = d.vertex_count();
  if (n > kMaxCanonicalVertices)
    throw std::invalid_argument("canonical_key: at most 7 vertices supported");
  if (n == 0) return 0;
  return canonical_key_masked(arc_mask(d), all_permutations(n), n);
}

Digraph digraph_from_key(int n, std::uint64_t key) {
  std::vector<Arc> arcs;
  while (key) {
    const int bit = std::countr_zero(key);
    key &= key - 1;
    arcs.emplace_back(bit / n, bit % n);
  }
  return Digraph(n, std::move(arcs));
}

Digraph canonical_form(const Digraph& d) {
  return digraph_from_key(d.vertex_count(), canonical_key(d));
}

std::vector<Digraph> enumerate_classes(GraphFamily family, int vertices) {
  if (vertices < 1) throw std::invalid_argument("enumerate_classes: vertices must be >= 1");
  const int limit = family == GraphFamily::digraph ? 5 : 6;
  if (vertices > limit)
    throw std::invalid_argument("enumerate_classes: " + to_string(family) +
                                " family supports at most " + std::to_string(limit) +
                                " vertices");
  const int n = vertices;
  const auto perms = all_permutations(n);

  // Positions of the candidate arc slots inside the n*n adjacency mask.
  std::vector<std::uint64_t> slots;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (family == GraphFamily::digraph)
        slots.push_back(std::uint64_t(1) << (u * n + v));
      else if (u < v) {
        if (family == GraphFamily::dag)
          slots.push_back(std::uint64_t(1) << (u * n + v));
        else  // undirected: an edge is a reciprocal arc pair
          slots.push_back((std::uint64_t(1) << (u * n + v)) |
                          (std::uint64_t(1) << (v * n + u)));
      }
    }

  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t choice = 0; choice < (std::uint64_t(1) << slots.size()); ++choice) {
    std::uint64_t mask = 0;
    std::uint64_t bits = choice;
    while (bits) {
      mask |= slots[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    seen.insert(canonical_key_masked(mask, perms, n));
  }
  std::vector<std::uint64_t> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  std::vector<Digraph> out;
  out.reserve(keys.size());
  for (const std::uint64_t key : keys) out.push_back(digraph_from_key(n, key));
  return out;
}

CensusResult run_census(const CensusQuery& query, unsigned threads) {
  if (query.max_dim < 0 || query.max_dim > 4)
    throw std::invalid_argument("run_census: max_dim must be in 0..4 at census scale");
  std::vector<Digraph> classes = enumerate_classes(query.family, query.vertices);
  CensusResult out;
  out.total_classes = classes.size();
  std::vector<std::vector<std::int64_t>> betti(classes.size());
  parallel_for(classes.size(), threads,
               [&](std::size_t i) { betti[i] = betti_curve(classes[i], query.max_dim); });
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ++out.histogram[betti[i]];
    if (!query.filter || query.filter->matches(betti[i])) {
      CensusEntry entry;
      entry.canonical_key = canonical_key(classes[i]);
      entry.graph = std::move(classes[i]);
      entry.reduced_betti = std::move(betti[i]);
      out.matches.push_back(std::move(entry));
    }
  }
  return out;
}

} // namespace pathhom
