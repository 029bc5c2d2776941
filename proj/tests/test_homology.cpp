#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <pathhom/homology.hpp>
#include <pathhom/motifs.hpp>
#include <pathhom/randgraph.hpp>

#include "support/naive_homology.hpp"

using namespace pathhom;

namespace {

std::vector<std::int64_t> betti_of(const Digraph& d, int max_dim) {
  return homology(d, max_dim).reduced_betti;
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) arcs.emplace_back(perm[a.first], perm[a.second]);
  return Digraph(d.vertex_count(), std::move(arcs));
}

MatQ chain_matrix(const std::vector<Chain>& chains, const AllowedPaths& paths, int p) {
  MatQ m = MatQ::Zero(paths.count(p), static_cast<Index>(chains.size()));
  for (std::size_t j = 0; j < chains.size(); ++j)
    for (const ChainTerm& term : chains[j])
      m(paths.index_of(p, term.path), static_cast<Index>(j)) = Rational(term.coefficient);
  return m;
}

}  // namespace

TEST_CASE("the two squares") {
  CHECK(betti_of(square_hole(), 2) == std::vector<std::int64_t>{0, 1, 0});
  CHECK(betti_of(square_trivial(), 2) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("mutual dyads concentrate homology in dimension 2") {
  CHECK(betti_of(dyad_up(5), 3) == std::vector<std::int64_t>{0, 0, 4, 0});
  CHECK(betti_of(dyad_down(5), 3) == std::vector<std::int64_t>{0, 0, 4, 0});
  CHECK(betti_of(dyad_up(1), 3) == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("a directed 2-cycle is a hole") {
  CHECK(betti_of(Digraph(2, {{0, 1}, {1, 0}}), 2) == std::vector<std::int64_t>{0, 1, 0});
}

TEST_CASE("betti curve conveniences") {
  CHECK(betti_curve(Digraph(1, {}), 2) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(betti_curve(Digraph(2, {}), 2) == std::vector<std::int64_t>{1, 0, 0});
  CHECK(betti_curve(dyad_up(3), 3) == std::vector<std::int64_t>{0, 0, 2, 0});
}

TEST_CASE("empty digraph summary is all zero by convention") {
  const HomologySummary s = homology(Digraph(), 3);
  CHECK(s.betti == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(s.reduced_betti == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(s.torsion.empty());
}

TEST_CASE("integral homology of the torsion family") {
  const HomologySummary s = homology(torsion_cycle(3), 2, Ring::integer);
  REQUIRE(s.torsion.count(1) == 1);
  REQUIRE(s.torsion.at(1).size() == 1);
  CHECK(s.torsion.at(1)[0] == 3);
  CHECK(s.torsion.count(0) == 0);
  CHECK(s.torsion.count(2) == 0);
}

TEST_CASE("single-direction torsion links are torsion-free") {
  for (const TorsionLinks links :
       {TorsionLinks::cycle_to_external, TorsionLinks::external_to_cycle}) {
    const HomologySummary s = homology(torsion_cycle(2, links), 2, Ring::integer);
    CHECK(s.torsion.empty());
  }
}

TEST_CASE("representatives of the dyad") {
  const PathComplex complex = build_path_complex(dyad_up(2), 3);
  const auto chains = representatives(complex, 2);
  REQUIRE(chains.size() == 1);
  const Chain& c = chains[0];
  REQUIRE(c.size() == 4);
  CHECK(c[0].path == Path{0, 1, 2});
  CHECK(c[0].coefficient == 1);
  CHECK(c[1].path == Path{0, 1, 3});
  CHECK(c[1].coefficient == -1);
  CHECK(c[2].path == Path{1, 0, 2});
  CHECK(c[2].coefficient == 1);
  CHECK(c[3].path == Path{1, 0, 3});
  CHECK(c[3].coefficient == -1);
}

TEST_CASE("representative of the square hole uses all four arcs") {
  const PathComplex complex = build_path_complex(square_hole(), 2);
  const auto chains = representatives(complex, 1);
  REQUIRE(chains.size() == 1);
  REQUIRE(chains[0].size() == 4);
  CHECK(chains[0][0].path == Path{0, 1});
  CHECK(chains[0][0].coefficient == 1);
  CHECK(chains[0][1].path == Path{0, 2});
  CHECK(chains[0][1].coefficient == -1);
  CHECK(chains[0][2].path == Path{3, 1});
  CHECK(chains[0][2].coefficient == -1);
  CHECK(chains[0][3].path == Path{3, 2});
  CHECK(chains[0][3].coefficient == 1);
}

TEST_CASE("no representatives where reduced homology vanishes") {
  const PathComplex complex = build_path_complex(square_trivial(), 2);
  CHECK(representatives(complex, 1).empty());
}

TEST_CASE("representatives are cycles independent modulo boundaries") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph d = sample_er_digraph(5, 0.4, rng);
    const HomologySummary s = homology(d, 2, Ring::rational, true);
    const PruneResult pruned = prune_limbs_mapped(d);
    // Work on the pruned graph: representatives are reported in original
    // vertex ids, and pruning only removes homology-irrelevant vertices.
    const PathComplex complex = build_path_complex(pruned.graph, 3);
    std::vector<int> original_to_pruned(d.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(pruned.to_parent.size()); ++i)
      original_to_pruned[pruned.to_parent[i]] = i;
    for (int p = 1; p <= 2; ++p) {
      std::vector<Chain> chains;
      if (s.representatives.count(p)) chains = s.representatives.at(p);
      CHECK(static_cast<std::int64_t>(chains.size()) == s.reduced_betti[p]);
      if (chains.empty()) continue;
      for (Chain& chain : chains)
        for (ChainTerm& term : chain)
          for (int& v : term.path) v = original_to_pruned[v];
      const MatQ reps = chain_matrix(chains, complex.paths, p);
      // Cycle condition: the coordinates of each chain in Omega_p lie in
      // ker d_p (equivalently d_p * coords = 0).
      const MatQ coords = solve(complex.omega[p], reps);
      CHECK((complex.d[p] * coords).isZero(0));
      // Joint independence modulo boundaries.
      const MatQ image = complex.omega[p] * complex.d[p + 1];
      MatQ stacked(reps.rows(), reps.cols() + image.cols());
      stacked.leftCols(reps.cols()) = reps;
      stacked.rightCols(image.cols()) = image;
      CHECK(rank(stacked) == reps.cols() + rank(image));
    }
  }
}

TEST_CASE("beta_0 counts weak components") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph d = sample_er_digraph(1 + static_cast<int>(rng() % 7), 0.3, rng);
    const HomologySummary s = homology(d, 1);
    CHECK(s.betti[0] == static_cast<std::int64_t>(weak_components(d).size()));
    CHECK(s.reduced_betti[0] == s.betti[0] - 1);
  }
}

TEST_CASE("disjoint unions add") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const Digraph a = sample_er_digraph(1 + static_cast<int>(rng() % 5), 0.35, rng);
    const Digraph b = sample_er_digraph(1 + static_cast<int>(rng() % 5), 0.35, rng);
    const auto ba = betti_of(a, 2);
    const auto bb = betti_of(b, 2);
    const auto bu = betti_of(disjoint_union(a, b), 2);
    CHECK(bu[0] == ba[0] + bb[0] + 1);  // reduced: components add, minus one
    for (int p = 1; p <= 2; ++p) CHECK(bu[p] == ba[p] + bb[p]);
  }
}

TEST_CASE("rational Betti numbers equal the free rank over the integers") {
  std::mt19937_64 rng(73);
  std::vector<Digraph> corpus = {square_hole(), square_trivial(), dyad_up(3),
                                 torsion_cycle(2), torsion_cycle(3)};
  for (int trial = 0; trial < 25; ++trial)
    corpus.push_back(sample_er_digraph(5, 0.35, rng));
  for (const Digraph& d : corpus) {
    const auto q = homology(d, 2, Ring::rational);
    const auto z = homology(d, 2, Ring::integer);
    CHECK(q.betti == z.betti);
    CHECK(q.reduced_betti == z.reduced_betti);
  }
}

TEST_CASE("relabeling the vertices never changes homology") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Digraph d = sample_er_digraph(n, 0.4, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(betti_of(d, 2) == betti_of(relabel(d, perm), 2));
  }
}

TEST_CASE("pipeline agrees with the naive full-space oracle") {
  // Edge cases plus a seeded sample of labeled 4-vertex digraphs; the
  // exhaustive 4096-graph comparison runs in the acceptance suite.
  std::vector<Digraph> corpus = {Digraph(1, {}), Digraph(4, {}), square_hole(),
                                 square_trivial(), complete_digraph(4),
                                 Digraph(2, {{0, 1}, {1, 0}})};
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint64_t mask = rng() % 4096;
    std::vector<Arc> arcs;
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) {
        if (u == v) continue;
        if (mask >> bit & 1) arcs.emplace_back(u, v);
        ++bit;
      }
    corpus.emplace_back(4, std::move(arcs));
  }
  for (const Digraph& d : corpus) {
    const auto expected = naive::reduced_betti(d, 3);
    const HomologySummary got = homology(d, 3);
    CHECK(got.betti == expected.betti);
    CHECK(got.reduced_betti == expected.reduced_betti);
  }
}

TEST_CASE("limb pruning preserves the full homology summary") {
  std::mt19937_64 rng(89);
  HomologyOptions raw;
  raw.max_dim = 2;
  raw.prune = false;
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph d = sample_er_digraph(1 + static_cast<int>(rng() % 6), 0.25, rng);
    const Digraph pruned = prune_limbs(d);
    const HomologySummary a = homology(d, raw);
    const HomologySummary b = homology(pruned, raw);
    CHECK(a.betti == b.betti);
    CHECK(a.reduced_betti == b.reduced_betti);
  }
  // Torsion survives pruning too: hang a limb off the torsion cycle.
  raw.ring = Ring::integer;
  Digraph decorated;
  {
    const Digraph base = torsion_cycle(2);
    std::vector<Arc> arcs = base.arcs();
    arcs.emplace_back(0, base.vertex_count());
    arcs.emplace_back(base.vertex_count(), base.vertex_count() + 1);
    decorated = Digraph(base.vertex_count() + 2, std::move(arcs));
  }
  const HomologySummary with_limb = homology(decorated, raw);
  const HomologySummary without = homology(prune_limbs(decorated), raw);
  CHECK(with_limb.betti == without.betti);
  CHECK(with_limb.torsion == without.torsion);
  CHECK(with_limb.torsion == std::map<int, std::vector<Integer>>{{1, {Integer(2)}}});
}
