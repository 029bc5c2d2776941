#ifndef PATHHOM_CENSUS_HPP
#define PATHHOM_CENSUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <pathhom/digraph.hpp>

namespace pathhom {

enum class GraphFamily { digraph, dag, undirected };

GraphFamily family_from_string(const std::string& name);
std::string to_string(GraphFamily family);

// Single comparison on one reduced Betti number, e.g. "b2>0" or "b1=1".
struct BettiFilter {
  int dimension = 0;
  enum class Cmp { lt, le, eq, ne, ge, gt } cmp = Cmp::gt;
  std::int64_t value = 0;

  bool matches(const std::vector<std::int64_t>& reduced_betti) const;
  static BettiFilter parse(const std::string& text);  // throws std::invalid_argument
};

struct CensusQuery {
  GraphFamily family = GraphFamily::digraph;
  int vertices = 4;
  int max_dim = 2;
  std::optional<BettiFilter> filter;
};

struct CensusEntry {
  std::uint64_t canonical_key = 0;
  Digraph graph;
  std::vector<std::int64_t> reduced_betti;
};

struct CensusResult {
  std::size_t total_classes = 0;
  std::vector<CensusEntry> matches;  // ordered by canonical key
  std::map<std::vector<std::int64_t>, std::size_t> histogram;
};

// Adjacency bitmask minimized over all vertex permutations: bit u*n+v set
// iff the arc u->v is present.  Requires vertex_count <= 7.
std::uint64_t canonical_key(const Digraph& d);
Digraph canonical_form(const Digraph& d);
Digraph digraph_from_key(int n, std::uint64_t key);

// One representative per isomorphism class, ordered by canonical key.
// Exhaustive labeled enumeration + canonicalization: digraphs up to 5
// vertices, DAGs and undirected graphs up to 6 (each undirected edge is a
// reciprocal arc pair).
std::vector<Digraph> enumerate_classes(GraphFamily family, int vertices);

CensusResult run_census(const CensusQuery& query, unsigned threads = 1);

} // namespace pathhom

#endif
