#ifndef PATHHOM_MOTIFS_HPP
#define PATHHOM_MOTIFS_HPP

#include <cstdint>
#include <string>

#include <pathhom/digraph.hpp>

namespace pathhom {

enum class MotifName { dyad_up, dyad_down, torsion_cycle, square_trivial, square_hole, er };

struct MotifSpec {
  MotifName name = MotifName::dyad_up;
  int parameter = 1;
};

MotifName motif_name_from_string(const std::string& name);  // throws std::invalid_argument
std::string to_string(MotifName name);

// Builds the named digraph family member.  The er preset draws an
// Erdos-Renyi digraph on `parameter` vertices at arc probability 1/2 with
// the given seed (ignored by the deterministic families).
Digraph build(const MotifSpec& spec, std::uint64_t seed = 0);

// Mutual dyad with vertices {a, b} (indices 0, 1) pointing at n common
// targets (indices 2..n+1) and at each other: 2+n vertices, 2+2n arcs.
Digraph dyad_up(int n);
Digraph dyad_down(int n);  // transpose of dyad_up

// How the central cycle attaches to the two external vertices.
enum class TorsionLinks { reciprocal, cycle_to_external, external_to_cycle };

// Torsion family: a directed central cycle c_0 -> ... -> c_{2n-1} -> c_0
// plus two external vertices x (index 2n) and y (index 2n+1); even cycle
// vertices attach to x, odd ones to y.  With the default reciprocal links
// (arcs in both directions) the reduced integral 1-homology has torsion
// subgroup Z/nZ; the single-direction variants are torsion-free.
Digraph torsion_cycle(int n, TorsionLinks links = TorsionLinks::reciprocal);

// The two 4-vertex squares: all arcs from one corner into the opposite one
// (trivial reduced homology) and the version with both 2-paths broken
// (reduced Betti 1 in dimension 1).
Digraph square_trivial();
Digraph square_hole();

} // namespace pathhom

#endif
