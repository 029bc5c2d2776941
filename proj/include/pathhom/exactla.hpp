#ifndef PATHHOM_EXACTLA_HPP
#define PATHHOM_EXACTLA_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <pathhom/types.hpp>

namespace pathhom {

// Thrown by the solve routines when a right-hand-side column does not lie in
// the column span of the left-hand matrix.
class InconsistentSystem : public std::runtime_error {
 public:
  explicit InconsistentSystem(Index column)
      : std::runtime_error("inconsistent linear system at right-hand-side column " +
                           std::to_string(column)),
        column_(column) {}
  Index column() const { return column_; }

 private:
  Index column_;
};

// Exact rank over the rationals (fraction-free Bareiss elimination).
Index rank(const MatZ& m);
Index rank(const MatQ& m);

// Canonical basis of the rational null space: the reduced-echelon kernel
// basis with one free column set to 1 at a time, ordered by ascending free
// column index.  kernel_basis(m).cols() == m.cols() - rank(m).
MatQ kernel_basis(const MatZ& m);
MatQ kernel_basis(const MatQ& m);

// Exact solve of a * x = b.  Every column of b must lie in the column span
// of a; otherwise InconsistentSystem is thrown with the offending column.
// When a has full column rank the solution is unique; otherwise free
// variables are set to zero.
MatQ solve(const MatQ& a, const MatQ& b);
MatQ solve(const MatZ& a, const MatZ& b);

// Integral variant: throws std::logic_error if the exact solution is not
// integral (callers use it only where integrality is guaranteed).
MatZ solve_integer(const MatZ& a, const MatZ& b);

struct SmithForm {
  // Positive invariant factors d_1 | d_2 | ... | d_r.
  std::vector<Integer> invariant_factors;
  Index rank = 0;
  bool has_transforms = false;
  MatZ left;   // unimodular, rows x rows
  MatZ right;  // unimodular, cols x cols; left * m * right is diagonal
};

SmithForm smith_normal_form(const MatZ& m, bool want_transforms = false);

// Pivot columns of left-to-right Gaussian elimination: the lexicographically
// first maximal independent column set.
std::vector<Index> column_rank_profile(const MatZ& m);
std::vector<Index> column_rank_profile(const MatQ& m);

// Basis of the integer kernel lattice {x in Z^n : m x = 0} as matrix
// columns (the trailing columns of the right Smith transform).  The lattice
// is saturated, so the basis has m.cols() - rank(m) columns.
MatZ kernel_lattice(const MatZ& m);

} // namespace pathhom

#endif
