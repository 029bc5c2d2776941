#include <pathhom/homology.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pathhom {

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

namespace {

Chain normalize_chain(const std::vector<std::pair<Index, Rational>>& terms,
                      const std::vector<Path>& basis_paths) {
  Integer mult = 1;
  for (const auto& [idx, coef] : terms) mult = lcm(mult, denominator(coef));
  std::vector<std::pair<Index, Integer>> scaled;
  for (const auto& [idx, coef] : terms)
    scaled.emplace_back(idx, numerator(coef) * (mult / denominator(coef)));
  Integer g = 0;
  for (const auto& [idx, coef] : scaled) g = gcd(g, coef);
  if (g == 0) return {};
  // Terms come in ascending path index, i.e. lexicographic path order.
  const bool flip = scaled.front().second < 0;
  Chain chain;
  chain.reserve(scaled.size());
  for (const auto& [idx, coef] : scaled)
    chain.push_back({basis_paths[idx], flip ? Integer(-coef / g) : Integer(coef / g)});
  return chain;
}

template <typename Scalar>
Chain column_to_chain(const Mat<Scalar>& omega, const Vec<Scalar>& coords,
                      const std::vector<Path>& basis_paths) {
  std::vector<std::pair<Index, Rational>> terms;
  for (Index r = 0; r < omega.rows(); ++r) {
    Rational value = 0;
    for (Index c = 0; c < omega.cols(); ++c)
      if (omega(r, c) != 0 && coords(c) != 0) value += Rational(omega(r, c)) * Rational(coords(c));
    if (value != 0) terms.emplace_back(r, value);
  }
  return normalize_chain(terms, basis_paths);
}

template <typename Complex, typename KernelFn, typename CoordsFn>
std::vector<Chain> representatives_impl(const Complex& complex, int p, KernelFn kernel_fn,
                                        CoordsFn coords_fn) {
  if (p < 1) throw std::invalid_argument("representatives: dimension must be >= 1");
  if (p + 1 > complex.p_max())
    throw std::invalid_argument("representatives: complex not built through dimension p+1");
  const auto kernel = kernel_fn(complex.d[p]);
  if (kernel.cols() == 0) return {};
  const auto image_coords = coords_fn(kernel, complex.d[p + 1]);

  // Pivot columns of [image | identity]: the identity columns that make the
  // cut extend a basis of im(d_{p+1}) to one of ker(d_p).
  using Scalar = std::decay_t<decltype(kernel(0, 0))>;
  const Index k = kernel.cols();
  Mat<Scalar> probe(k, image_coords.cols() + k);
  probe.leftCols(image_coords.cols()) = image_coords;
  probe.rightCols(k) = Mat<Scalar>::Identity(k, k);
  std::vector<Chain> chains;
  for (const Index col : column_rank_profile(probe)) {
    if (col < image_coords.cols()) continue;
    const Index g = col - image_coords.cols();
    const Vec<Scalar> coords = kernel.col(g);
    chains.push_back(column_to_chain<Scalar>(complex.omega[p], coords, complex.paths.dims[p]));
  }
  return chains;
}

}  // namespace

std::vector<Chain> representatives(const PathComplex& complex, int p) {
  return representatives_impl(
      complex, p, [](const MatQ& m) { return kernel_basis(m); },
      [](const MatQ& basis, const MatQ& vectors) { return solve(basis, vectors); });
}

std::vector<Chain> representatives(const PathComplexZ& complex, int p) {
  return representatives_impl(
      complex, p, [](const MatZ& m) { return kernel_lattice(m); },
      [](const MatZ& basis, const MatZ& vectors) { return solve_integer(basis, vectors); });
}

namespace {

struct ComponentSummary {
  std::vector<std::int64_t> betti;
  std::map<int, std::vector<Integer>> torsion;
  std::map<int, std::vector<Chain>> representatives;
};

template <typename Scalar>
std::vector<Index> boundary_ranks(const BasicPathComplex<Scalar>& complex, int max_dim) {
  std::vector<Index> ranks(max_dim + 2, 0);
  for (int p = 1; p <= max_dim + 1; ++p) ranks[p] = rank(complex.d[p]);
  return ranks;
}

template <typename Scalar>
std::vector<std::int64_t> betti_from_ranks(const BasicPathComplex<Scalar>& complex,
                                           const std::vector<Index>& ranks, int max_dim,
                                           int vertex_count) {
  std::vector<std::int64_t> betti(max_dim + 1, 0);
  betti[0] = vertex_count - ranks[1];
  for (int p = 1; p <= max_dim; ++p)
    betti[p] = complex.omega_dim(p) - ranks[p] - ranks[p + 1];
  return betti;
}

ComponentSummary component_homology(const Digraph& comp, const HomologyOptions& opt) {
  ComponentSummary out;
  const int p_max = opt.max_dim + 1;
  if (opt.ring == Ring::rational) {
    const PathComplex complex = build_path_complex(comp, p_max);
    const auto ranks = boundary_ranks(complex, opt.max_dim);
    out.betti = betti_from_ranks(complex, ranks, opt.max_dim, comp.vertex_count());
    if (opt.representatives)
      for (int p = 1; p <= opt.max_dim; ++p) {
        auto chains = representatives(complex, p);
        if (!chains.empty()) out.representatives[p] = std::move(chains);
      }
    return out;
  }

  const PathComplexZ complex = build_path_complex_z(comp, p_max);
  const auto ranks = boundary_ranks(complex, opt.max_dim);
  out.betti = betti_from_ranks(complex, ranks, opt.max_dim, comp.vertex_count());
  for (int p = 0; p <= opt.max_dim; ++p) {
    MatZ cycles;
    if (p == 0) {
      // Reduced dimension 0: kernel of the augmentation sending each vertex to 1.
      MatZ augmentation = MatZ::Zero(1, comp.vertex_count());
      for (Index c = 0; c < augmentation.cols(); ++c) augmentation(0, c) = 1;
      cycles = kernel_lattice(augmentation);
    } else {
      cycles = kernel_lattice(complex.d[p]);
    }
    const MatZ image = solve_integer(cycles, complex.d[p + 1]);
    std::vector<Integer> factors;
    for (const Integer& f : smith_normal_form(image).invariant_factors)
      if (f > 1) factors.push_back(f);
    if (!factors.empty()) out.torsion[p] = std::move(factors);
  }
  if (opt.representatives)
    for (int p = 1; p <= opt.max_dim; ++p) {
      auto chains = representatives(complex, p);
      if (!chains.empty()) out.representatives[p] = std::move(chains);
    }
  return out;
}

void remap_chain(Chain& chain, const std::vector<int>& component_to_parent,
                 const std::vector<int>& pruned_to_original) {
  for (ChainTerm& term : chain)
    for (int& v : term.path) v = pruned_to_original[component_to_parent[v]];
}

}  // namespace

HomologySummary homology(const Digraph& d, const HomologyOptions& opt) {
  if (opt.max_dim < 0) throw std::invalid_argument("homology: max_dim must be >= 0");
  HomologySummary out;
  out.max_dim = opt.max_dim;
  out.betti.assign(opt.max_dim + 1, 0);
  out.reduced_betti.assign(opt.max_dim + 1, 0);
  if (d.empty()) return out;  // convention: all Betti numbers zero

  PruneResult pruned;
  if (opt.prune) {
    pruned = prune_limbs_mapped(d);
  } else {
    pruned.graph = d;
    pruned.to_parent.resize(d.vertex_count());
    std::iota(pruned.to_parent.begin(), pruned.to_parent.end(), 0);
  }

  std::vector<Component> components;
  if (opt.split_components) {
    components = weak_components(pruned.graph);
  } else {
    Component whole;
    whole.graph = pruned.graph;
    whole.to_parent.resize(pruned.graph.vertex_count());
    std::iota(whole.to_parent.begin(), whole.to_parent.end(), 0);
    components.push_back(std::move(whole));
  }

  for (const Component& component : components) {
    ComponentSummary cs = component_homology(component.graph, opt);
    for (int p = 0; p <= opt.max_dim; ++p) out.betti[p] += cs.betti[p];
    for (auto& [dim, factors] : cs.torsion) {
      auto& merged = out.torsion[dim];
      merged.insert(merged.end(), factors.begin(), factors.end());
    }
    for (auto& [dim, chains] : cs.representatives) {
      for (Chain& chain : chains) remap_chain(chain, component.to_parent, pruned.to_parent);
      auto& merged = out.representatives[dim];
      merged.insert(merged.end(), std::make_move_iterator(chains.begin()),
                    std::make_move_iterator(chains.end()));
    }
  }

  out.reduced_betti = out.betti;
  out.reduced_betti[0] = out.betti[0] - 1;
  return out;
}

HomologySummary homology(const Digraph& d, int max_dim, Ring ring, bool want_representatives) {
  HomologyOptions opt;
  opt.max_dim = max_dim;
  opt.ring = ring;
  opt.representatives = want_representatives;
  return homology(d, opt);
}

std::vector<std::int64_t> betti_curve(const Digraph& d, int max_dim) {
  return homology(d, max_dim).reduced_betti;
}

} // namespace pathhom
