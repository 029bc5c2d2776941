#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <pathhom/exactla.hpp>

using namespace pathhom;

namespace {

MatZ zeros(Index r, Index c) {
  return MatZ::Zero(r, c);
}

MatZ eye(Index n) { return MatZ::Identity(n, n); }

MatZ from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  MatZ m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

MatZ random_matrix(std::mt19937_64& rng, Index rows, Index cols, int span = 3) {
  std::uniform_int_distribution<int> entry(-span, span);
  MatZ m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = entry(rng);
  return m;
}

bool spans_contain(const MatQ& a, const MatQ& b) {
  // every column of b solvable in a
  try {
    solve(a, b);
    return true;
  } catch (const InconsistentSystem&) {
    return false;
  }
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  CHECK(rank(zeros(3, 3)) == 0);
  CHECK(rank(eye(4)) == 4);
  CHECK(rank(zeros(0, 5)) == 0);
  CHECK(rank(zeros(5, 0)) == 0);

  // Vertex-by-arc boundary matrix of the square with arcs
  // 0->1, 0->2, 3->1, 3->2; connected on 4 vertices, so rank 3.
  const MatZ d1 = from_rows({{-1, -1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, -1, -1}});
  CHECK(rank(d1) == 3);
}

TEST_CASE("kernel basis is the canonical reduced-echelon one") {
  CHECK(kernel_basis(eye(3)).cols() == 0);

  const MatQ zero_kernel = kernel_basis(zeros(2, 4));
  REQUIRE(zero_kernel.rows() == 4);
  REQUIRE(zero_kernel.cols() == 4);
  CHECK(zero_kernel == MatQ::Identity(4, 4));

  const MatQ k = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == Rational(-1));
  CHECK(k(1, 0) == Rational(1));
}

TEST_CASE("solve identity and scaled identity") {
  const MatZ b = from_rows({{3, 1}, {-2, 5}});
  const MatQ x = solve(eye(2), b);
  CHECK(x == to_rational(b));

  MatZ two = eye(3);
  two *= 2;
  const MatQ half = solve(two, eye(3));
  for (Index i = 0; i < 3; ++i) CHECK(half(i, i) == Rational(1, 2));
}

TEST_CASE("solve reports the offending inconsistent column") {
  const MatZ a = from_rows({{1}, {1}});
  const MatZ b = from_rows({{1, 2}, {1, 3}});
  try {
    solve(a, b);
    FAIL("expected InconsistentSystem");
  } catch (const InconsistentSystem& e) {
    CHECK(e.column() == 1);
  }
}

TEST_CASE("smith normal form of small matrices") {
  SECTION("diagonal stays put") {
    const SmithForm s = smith_normal_form(from_rows({{2, 0}, {0, 6}}));
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 2);
    CHECK(s.invariant_factors[1] == 6);
  }
  SECTION("dense 2x2") {
    // determinant -12, entry gcd 2, so factors (2, 6)
    const SmithForm s = smith_normal_form(from_rows({{2, 4}, {4, 2}}));
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 2);
    CHECK(s.invariant_factors[1] == 6);
  }
  SECTION("zero matrix") {
    const SmithForm s = smith_normal_form(zeros(3, 2));
    CHECK(s.invariant_factors.empty());
    CHECK(s.rank == 0);
  }
}

TEST_CASE("smith transforms reproduce the diagonal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<Index> dim(1, 6);
    const MatZ m = random_matrix(rng, dim(rng), dim(rng));
    const SmithForm s = smith_normal_form(m, true);
    const MatZ d = s.left * m * s.right;
    for (Index r = 0; r < d.rows(); ++r)
      for (Index c = 0; c < d.cols(); ++c) {
        if (r == c && r < s.rank)
          CHECK(d(r, c) == s.invariant_factors[r]);
        else
          CHECK(d(r, c) == 0);
      }
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
      CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
  }
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Index> dim(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const MatZ m = random_matrix(rng, dim(rng), dim(rng));
    const Index r = rank(m);
    const MatQ k = kernel_basis(m);
    CHECK(r + k.cols() == m.cols());
    CHECK((to_rational(m) * k).isZero(0));
    const SmithForm s = smith_normal_form(m);
    CHECK(s.rank == r);
  }
}

TEST_CASE("kernel lattice is integral, exact, and right-sized") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<Index> dim(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const MatZ m = random_matrix(rng, dim(rng), dim(rng));
    const MatZ k = kernel_lattice(m);
    CHECK(k.cols() == m.cols() - rank(m));
    CHECK((m * k).isZero(0));
    if (k.cols() > 0) {
      // saturated: the rational kernel basis lies in the lattice span
      CHECK(spans_contain(to_rational(k), kernel_basis(m)));
    }
  }
}

TEST_CASE("row and column permutations change neither rank nor kernel span") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Index> dim(2, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const Index rows = dim(rng), cols = dim(rng);
    const MatZ m = random_matrix(rng, rows, cols);
    std::vector<Index> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    MatZ shuffled(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) shuffled(rp[r], cp[c]) = m(r, c);
    CHECK(rank(shuffled) == rank(m));
    // kernels agree after undoing the column permutation
    const MatQ k = kernel_basis(m);
    MatQ k2 = kernel_basis(shuffled);
    MatQ k2_unpermuted(k2.rows(), k2.cols());
    for (Index r = 0; r < cols; ++r) k2_unpermuted.row(r) = k2.row(cp[r]);
    CHECK(k.cols() == k2_unpermuted.cols());
    if (k.cols() > 0) {
      CHECK(spans_contain(k, k2_unpermuted));
      CHECK(spans_contain(k2_unpermuted, k));
    }
  }
}

TEST_CASE("solve on rational inputs") {
  MatQ a(2, 2);
  a << Rational(1, 2), Rational(0), Rational(0), Rational(1, 3);
  MatQ b(2, 1);
  b << Rational(1), Rational(1);
  const MatQ x = solve(a, b);
  CHECK(x(0, 0) == Rational(2));
  CHECK(x(1, 0) == Rational(3));
}
