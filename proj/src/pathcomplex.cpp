#include <pathhom/pathcomplex.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace pathhom {

Index AllowedPaths::index_of(int p, const Path& tuple) const {
  if (p < 0 || p > p_max) return -1;
  const auto& list = dims[p];
  const auto it = std::lower_bound(list.begin(), list.end(), tuple);
  if (it == list.end() || *it != tuple) return -1;
  return static_cast<Index>(it - list.begin());
}

AllowedPaths enumerate_allowed(const Digraph& d, int p_max) {
  if (p_max < 0) throw std::invalid_argument("enumerate_allowed: p_max must be >= 0");
  AllowedPaths out;
  out.p_max = p_max;
  out.dims.resize(p_max + 1);
  const int n = d.vertex_count();
  out.dims[0].reserve(n);
  for (int v = 0; v < n; ++v) out.dims[0].push_back({v});
  for (int p = 1; p <= p_max; ++p) {
    const auto& prev = out.dims[p - 1];
    auto& cur = out.dims[p];
    // Extending lex-ordered paths by sorted out-neighbors keeps lex order.
    for (const Path& path : prev) {
      for (int w : d.out_neighbors(path.back())) {
        Path next;
        next.reserve(path.size() + 1);
        next = path;
        next.push_back(w);
        cur.push_back(std::move(next));
      }
    }
  }

  out.radix.resize(p_max + 1);
  out.radix_valid.assign(p_max + 1, false);
  for (int p = 0; p <= p_max; ++p) {
    bool fits = n > 0;
    std::uint64_t power = 1;
    for (int i = 0; i <= p && fits; ++i) {
      if (power > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
        fits = false;
      else
        power *= static_cast<std::uint64_t>(n);
    }
    if (!fits) continue;
    out.radix_valid[p] = true;
    out.radix[p].reserve(out.dims[p].size());
    for (const Path& path : out.dims[p]) {
      std::uint64_t idx = 0;
      for (int v : path) idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
      out.radix[p].push_back(idx);
    }
  }
  return out;
}

BoundaryBlocks boundary_blocks(const AllowedPaths& paths, int p) {
  if (p < 1 || p > paths.p_max)
    throw std::invalid_argument("boundary_blocks: dimension out of range");
  const auto& columns = paths.dims[p];
  const Index ncols = static_cast<Index>(columns.size());
  BoundaryBlocks out;
  out.p = p;
  out.delta = MatZ::Zero(paths.count(p - 1), ncols);
  std::map<Path, std::vector<std::pair<Index, int>>> dropped;  // lex-ordered rows
  Path face(static_cast<std::size_t>(p));
  for (Index c = 0; c < ncols; ++c) {
    const Path& path = columns[c];
    for (int j = 0; j <= p; ++j) {
      face.clear();
      for (int k = 0; k <= p; ++k)
        if (k != j) face.push_back(path[k]);
      const int sign = (j % 2 == 0) ? 1 : -1;
      const Index row = paths.index_of(p - 1, face);
      if (row >= 0)
        out.delta(row, c) += sign;
      else
        dropped[face].emplace_back(c, sign);
    }
  }
  out.nabla = MatZ::Zero(static_cast<Index>(dropped.size()), ncols);
  Index r = 0;
  for (auto& [tuple, entries] : dropped) {
    out.nabla_rows.push_back(tuple);
    for (const auto& [c, sign] : entries) out.nabla(r, c) += sign;
    ++r;
  }
  return out;
}

MatQ invariant_basis(const BoundaryBlocks& blocks) { return kernel_basis(blocks.nabla); }

namespace {

// delta has entries in {-1, 0, +1} and at most p+1 per column; iterating its
// nonzeros beats the dense product on the large census matrices.
template <typename Scalar>
Mat<Scalar> boundary_times(const MatZ& delta, const Mat<Scalar>& m) {
  Mat<Scalar> out = Mat<Scalar>::Zero(delta.rows(), m.cols());
  for (Index c = 0; c < delta.cols(); ++c)
    for (Index r = 0; r < delta.rows(); ++r) {
      const Integer& v = delta(r, c);
      if (v == 0) continue;
      if (v == 1)
        out.row(r) += m.row(c);
      else if (v == -1)
        out.row(r) -= m.row(c);
      else
        out.row(r) += Scalar(v) * m.row(c);
    }
  return out;
}

struct RationalOps {
  using Scalar = Rational;
  static MatQ kernel(const MatZ& m) { return kernel_basis(m); }
  static MatQ coords(const MatQ& basis, const MatQ& vectors) {
    try {
      return solve(basis, vectors);
    } catch (const InconsistentSystem& e) {
      throw std::logic_error(
          "path complex: boundary image left the invariant space at column " +
          std::to_string(e.column()));
    }
  }
};

struct IntegerOps {
  using Scalar = Integer;
  static MatZ kernel(const MatZ& m) { return kernel_lattice(m); }
  static MatZ coords(const MatZ& basis, const MatZ& vectors) {
    try {
      return solve_integer(basis, vectors);
    } catch (const InconsistentSystem& e) {
      throw std::logic_error(
          "path complex: boundary image left the invariant lattice at column " +
          std::to_string(e.column()));
    }
  }
};

template <typename Ops>
BasicPathComplex<typename Ops::Scalar> build_complex(const Digraph& d, int p_max) {
  using Scalar = typename Ops::Scalar;
  BasicPathComplex<Scalar> out;
  out.paths = enumerate_allowed(d, p_max);
  out.omega.resize(p_max + 1);
  out.d.resize(p_max + 1);
  const Index n0 = out.paths.count(0);
  out.omega[0] = Mat<Scalar>::Identity(n0, n0);
  for (int p = 1; p <= p_max; ++p) {
    const BoundaryBlocks blocks = boundary_blocks(out.paths, p);
    out.omega[p] = Ops::kernel(blocks.nabla);
    const Mat<Scalar> image = boundary_times<Scalar>(blocks.delta, out.omega[p]);
    // omega[0] and omega[1] are identities, so their coordinates are free.
    out.d[p] = (p <= 2) ? image : Ops::coords(out.omega[p - 1], image);
  }
  return out;
}

}  // namespace

MatQ chain_boundary(const MatQ& omega_prev, const MatZ& delta, const MatQ& omega) {
  const MatQ image = boundary_times<Rational>(delta, omega);
  return RationalOps::coords(omega_prev, image);
}

PathComplex build_path_complex(const Digraph& d, int p_max) {
  return build_complex<RationalOps>(d, p_max);
}

PathComplexZ build_path_complex_z(const Digraph& d, int p_max) {
  return build_complex<IntegerOps>(d, p_max);
}

Integer walk_count(const Digraph& d, int p) {
  const int n = d.vertex_count();
  if (n == 0) return 0;
  MatZ adjacency = MatZ::Zero(n, n);
  for (const Arc& a : d.arcs()) adjacency(a.first, a.second) = 1;
  MatZ acc = MatZ::Identity(n, n);
  for (int i = 0; i < p; ++i) acc = (acc * adjacency).eval();
  Integer total = 0;
  for (Index c = 0; c < acc.cols(); ++c)
    for (Index r = 0; r < acc.rows(); ++r) total += acc(r, c);
  return total;
}

} // namespace pathhom
