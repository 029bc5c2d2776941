#ifndef PATHHOM_HOMOLOGY_HPP
#define PATHHOM_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <pathhom/pathcomplex.hpp>

namespace pathhom {

struct ChainTerm {
  Path path;
  Integer coefficient;
};
using Chain = std::vector<ChainTerm>;

struct HomologySummary {
  int max_dim = 0;
  std::vector<std::int64_t> betti;          // beta_0 .. beta_max_dim
  std::vector<std::int64_t> reduced_betti;  // Betti numbers of the augmented complex
  // Invariant factors > 1 of the reduced integral homology, keyed by
  // dimension; factors from different weak components are concatenated in
  // component order.  Only populated for Ring::integer.
  std::map<int, std::vector<Integer>> torsion;
  // Cycle representatives keyed by dimension (>= 1), reduced_betti[p] chains
  // per dimension; paths use the input digraph's vertex indices.
  std::map<int, std::vector<Chain>> representatives;
};

struct HomologyOptions {
  int max_dim = 2;
  Ring ring = Ring::rational;
  bool representatives = false;
  // Homology-preserving preprocessing; disabled only by tests that verify
  // the preprocessing itself.
  bool prune = true;
  bool split_components = true;
};

HomologySummary homology(const Digraph& d, const HomologyOptions& options = {});
HomologySummary homology(const Digraph& d, int max_dim, Ring ring = Ring::rational,
                         bool want_representatives = false);

std::vector<std::int64_t> betti_curve(const Digraph& d, int max_dim);

// reduced_betti[p] exact cycles, jointly independent modulo im(d[p+1]):
// a basis of im(d[p+1]) inside ker(d[p]) is extended to a full kernel basis
// and the extension vectors are returned.  Coefficients are integers with
// gcd 1; the lexicographically smallest supported path has positive
// coefficient.  Requires p >= 1 and a complex built through dimension p+1.
std::vector<Chain> representatives(const PathComplex& complex, int p);
std::vector<Chain> representatives(const PathComplexZ& complex, int p);

} // namespace pathhom

#endif
