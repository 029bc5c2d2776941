#include <pathhom/exactla.hpp>

#include <algorithm>
#include <utility>

namespace pathhom {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::msb;
using boost::multiprecision::numerator;

MatQ to_rational(const MatZ& m) {
  MatQ out(m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) out(r, c) = Rational(m(r, c));
  return out;
}

MatZ to_integer(const MatQ& m) {
  MatZ out(m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) {
      if (denominator(m(r, c)) != 1)
        throw std::invalid_argument("to_integer: entry has nontrivial denominator");
      out(r, c) = numerator(m(r, c));
    }
  return out;
}

namespace {

// Scale each row to integers by the lcm of its denominators; preserves row
// space, rank, kernel, and solution sets.
MatZ clear_denominators(const MatQ& m) {
  MatZ out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    Integer mult = 1;
    for (Index c = 0; c < m.cols(); ++c) mult = lcm(mult, denominator(m(r, c)));
    for (Index c = 0; c < m.cols(); ++c)
      out(r, c) = numerator(m(r, c)) * (mult / denominator(m(r, c)));
  }
  return out;
}

std::size_t bit_size(const Integer& v) { return msb(abs(v)); }

// Row echelon form by fraction-free (Bareiss) elimination.  Pivot columns are
// scanned left to right over the first pivot_cols columns; among candidate
// rows the entry of minimal bit size is chosen to limit coefficient growth
// (any choice yields the same rank profile and solution set).  Pivot i sits
// at row i, column pivot_col[i].
struct Echelon {
  MatZ m;
  std::vector<Index> pivot_col;
};

Echelon echelon_form(MatZ w, Index pivot_cols) {
  Echelon e;
  const Index rows = w.rows();
  const Index cols = w.cols();
  Integer prev = 1;
  Index r = 0;
  for (Index c = 0; c < pivot_cols && r < rows; ++c) {
    Index pivot = -1;
    std::size_t best = 0;
    for (Index i = r; i < rows; ++i) {
      if (w(i, c) == 0) continue;
      const std::size_t bits = bit_size(w(i, c));
      if (pivot < 0 || bits < best) {
        pivot = i;
        best = bits;
        if (bits == 0) break;  // a unit pivot cannot be beaten
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) w.row(pivot).swap(w.row(r));
    if (w(r, c) < 0) w.row(r) = -w.row(r);  // keeps unit pivots a common no-op below
    const Integer p = w(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const Integer f = w(i, c);
      if (f == 0) {
        if (p != prev)
          for (Index j = c + 1; j < cols; ++j) w(i, j) = w(i, j) * p / prev;
        continue;
      }
      for (Index j = c + 1; j < cols; ++j) w(i, j) = (w(i, j) * p - f * w(r, j)) / prev;
      w(i, c) = 0;
    }
    prev = p;
    e.pivot_col.push_back(c);
    ++r;
  }
  e.m = std::move(w);
  return e;
}

Index rank_integer(const MatZ& m) {
  return static_cast<Index>(echelon_form(m, m.cols()).pivot_col.size());
}

// Canonical reduced row echelon form of the pivot rows of an echelon matrix.
MatQ reduced_rows(const Echelon& e) {
  const Index r = static_cast<Index>(e.pivot_col.size());
  const Index cols = e.m.cols();
  MatQ red(r, cols);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < cols; ++j) red(i, j) = Rational(e.m(i, j));
  for (Index i = r - 1; i >= 0; --i) {
    const Index pc = e.pivot_col[i];
    const Rational p = red(i, pc);
    for (Index j = pc; j < cols; ++j) red(i, j) /= p;
    for (Index k = 0; k < i; ++k) {
      const Rational f = red(k, pc);
      if (f == 0) continue;
      for (Index j = pc; j < cols; ++j) red(k, j) -= f * red(i, j);
    }
  }
  return red;
}

MatQ kernel_from_integer(const MatZ& m) {
  const Index cols = m.cols();
  const Echelon e = echelon_form(m, cols);
  const Index r = static_cast<Index>(e.pivot_col.size());
  const MatQ red = reduced_rows(e);
  std::vector<bool> is_pivot(cols, false);
  for (Index pc : e.pivot_col) is_pivot[pc] = true;
  MatQ basis = MatQ::Zero(cols, cols - r);
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis(f, out) = 1;
    for (Index i = 0; i < r; ++i) basis(e.pivot_col[i], out) = -red(i, f);
    ++out;
  }
  return basis;
}

MatQ solve_integer_system(const MatZ& a, const MatZ& b) {
  const Index unknowns = a.cols();
  const Index rhs = b.cols();
  MatZ aug(a.rows(), unknowns + rhs);
  aug.leftCols(unknowns) = a;
  aug.rightCols(rhs) = b;
  const Echelon e = echelon_form(std::move(aug), unknowns);
  const Index r = static_cast<Index>(e.pivot_col.size());
  for (Index q = 0; q < rhs; ++q)
    for (Index i = r; i < e.m.rows(); ++i)
      if (e.m(i, unknowns + q) != 0) throw InconsistentSystem(q);
  MatQ x = MatQ::Zero(unknowns, rhs);
  for (Index q = 0; q < rhs; ++q) {
    for (Index i = r - 1; i >= 0; --i) {
      const Index pc = e.pivot_col[i];
      Rational acc = Rational(e.m(i, unknowns + q));
      for (Index j = i + 1; j < r; ++j) {
        const Index jc = e.pivot_col[j];
        if (e.m(i, jc) != 0 && x(jc, q) != 0) acc -= Rational(e.m(i, jc)) * x(jc, q);
      }
      x(pc, q) = acc / Rational(e.m(i, pc));
    }
  }
  return x;
}

}  // namespace

Index rank(const MatZ& m) { return rank_integer(m); }
Index rank(const MatQ& m) { return rank_integer(clear_denominators(m)); }

MatQ kernel_basis(const MatZ& m) { return kernel_from_integer(m); }
MatQ kernel_basis(const MatQ& m) { return kernel_from_integer(clear_denominators(m)); }

MatQ solve(const MatZ& a, const MatZ& b) { return solve_integer_system(a, b); }

MatQ solve(const MatQ& a, const MatQ& b) {
  // Joint row scaling of [a b] keeps the systems equivalent.
  const Index unknowns = a.cols();
  MatQ aug(a.rows(), unknowns + b.cols());
  aug.leftCols(unknowns) = a;
  aug.rightCols(b.cols()) = b;
  const MatZ cleared = clear_denominators(aug);
  return solve_integer_system(cleared.leftCols(unknowns), cleared.rightCols(b.cols()));
}

MatZ solve_integer(const MatZ& a, const MatZ& b) {
  const MatQ x = solve(a, b);
  try {
    return to_integer(x);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("solve_integer: exact solution is not integral");
  }
}

SmithForm smith_normal_form(const MatZ& input, bool want_transforms) {
  MatZ a = input;
  const Index rows = a.rows();
  const Index cols = a.cols();
  SmithForm out;
  out.has_transforms = want_transforms;
  MatZ u, v;
  if (want_transforms) {
    u = MatZ::Identity(rows, rows);
    v = MatZ::Identity(cols, cols);
  }

  const auto row_swap = [&](Index i, Index j) {
    a.row(i).swap(a.row(j));
    if (want_transforms) u.row(i).swap(u.row(j));
  };
  const auto col_swap = [&](Index i, Index j) {
    a.col(i).swap(a.col(j));
    if (want_transforms) v.col(i).swap(v.col(j));
  };
  const auto row_sub = [&](Index dst, Index src, const Integer& f) {
    a.row(dst) -= f * a.row(src);
    if (want_transforms) u.row(dst) -= f * u.row(src);
  };
  const auto col_sub = [&](Index dst, Index src, const Integer& f) {
    a.col(dst) -= f * a.col(src);
    if (want_transforms) v.col(dst) -= f * v.col(src);
  };
  const auto row_add = [&](Index dst, Index src) {
    a.row(dst) += a.row(src);
    if (want_transforms) u.row(dst) += u.row(src);
  };

  Index t = 0;
  const Index tmax = std::min(rows, cols);
  while (t < tmax) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    Index pi = -1, pj = -1;
    std::size_t best = 0;
    for (Index j = t; j < cols; ++j)
      for (Index i = t; i < rows; ++i) {
        if (a(i, j) == 0) continue;
        const std::size_t bits = bit_size(a(i, j));
        if (pi < 0 || bits < best) {
          pi = i;
          pj = j;
          best = bits;
        }
      }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    for (;;) {
      bool dirty = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        if (q != 0) row_sub(i, t, q);
        if (a(i, t) != 0) {
          row_swap(i, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        if (q != 0) col_sub(j, t, q);
        if (a(t, j) != 0) {
          col_swap(j, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (Index i = t + 1; i < rows && divides; ++i)
        for (Index j = t + 1; j < cols && divides; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_add(t, i);
            divides = false;
          }
      if (divides) break;
    }
    ++t;
  }

  for (Index i = 0; i < t; ++i) {
    if (a(i, i) < 0) {
      a.row(i) = -a.row(i);
      if (want_transforms) u.row(i) = -u.row(i);
    }
    out.invariant_factors.push_back(a(i, i));
  }
  out.rank = t;
  if (want_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

std::vector<Index> column_rank_profile(const MatZ& m) {
  return echelon_form(m, m.cols()).pivot_col;
}

std::vector<Index> column_rank_profile(const MatQ& m) {
  return column_rank_profile(clear_denominators(m));
}

MatZ kernel_lattice(const MatZ& m) {
  const SmithForm s = smith_normal_form(m, true);
  return s.right.rightCols(m.cols() - s.rank);
}

} // namespace pathhom
