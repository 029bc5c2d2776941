#ifndef PATHHOM_PATHCOMPLEX_HPP
#define PATHHOM_PATHCOMPLEX_HPP

#include <cstdint>
#include <vector>

#include <pathhom/digraph.hpp>
#include <pathhom/exactla.hpp>
#include <pathhom/types.hpp>

namespace pathhom {

using Path = std::vector<int>;

// Allowed p-paths per dimension: (p+1)-tuples of vertices in which every
// consecutive pair is an arc, in strict lexicographic order.  Alongside each
// path its radix-n index into V^(p+1) is kept when it fits in 64 bits.
struct AllowedPaths {
  int p_max = -1;
  std::vector<std::vector<Path>> dims;
  std::vector<std::vector<std::uint64_t>> radix;
  std::vector<bool> radix_valid;

  Index count(int p) const {
    return (p >= 0 && p <= p_max) ? static_cast<Index>(dims[p].size()) : 0;
  }
  // Index of a tuple in the dimension-p list, or -1 if not allowed.
  Index index_of(int p, const Path& tuple) const;
};

AllowedPaths enumerate_allowed(const Digraph& d, int p_max);

// The boundary operator restricted to allowed p-paths and split by target:
// delta keeps the rows on allowed (p-1)-paths, nabla the rows on non-allowed
// tuples that receive a nonzero coefficient (zero rows dropped, sorted lex).
struct BoundaryBlocks {
  int p = 0;
  MatZ delta;
  MatZ nabla;
  std::vector<Path> nabla_rows;
};

BoundaryBlocks boundary_blocks(const AllowedPaths& paths, int p);

// Basis of the invariant space Omega_p = ker nabla, canonical reduced-echelon
// form.  For p <= 1 nabla is empty and the basis is the identity.
MatQ invariant_basis(const BoundaryBlocks& blocks);

// Coordinates of delta * omega in the omega_prev basis (exact solve).
// Throws std::logic_error if delta * omega leaves the span of omega_prev,
// which would indicate an implementation bug.
MatQ chain_boundary(const MatQ& omega_prev, const MatZ& delta, const MatQ& omega);

template <typename Scalar>
struct BasicPathComplex {
  AllowedPaths paths;
  std::vector<Mat<Scalar>> omega;  // omega[p]: |A_p| x dim Omega_p
  std::vector<Mat<Scalar>> d;      // d[p]: dim Omega_{p-1} x dim Omega_p, p >= 1

  int p_max() const { return paths.p_max; }
  Index omega_dim(int p) const {
    return (p >= 0 && p <= p_max()) ? omega[p].cols() : 0;
  }
};

using PathComplex = BasicPathComplex<Rational>;
using PathComplexZ = BasicPathComplex<Integer>;

// Assembles allowed paths, invariant-space bases and chain boundary matrices
// through dimension p_max.  The rational variant uses the canonical
// reduced-echelon kernel bases; the integer variant uses bases of the
// saturated kernel lattices, so Smith normal forms of its boundary matrices
// give integral homology.
PathComplex build_path_complex(const Digraph& d, int p_max);
PathComplexZ build_path_complex_z(const Digraph& d, int p_max);

// Number of length-p walks, i.e. the sum of all entries of the p-th power of
// the adjacency matrix; counting oracle for |A_p|.
Integer walk_count(const Digraph& d, int p);

} // namespace pathhom

#endif
