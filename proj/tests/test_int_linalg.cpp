#include <doctest.h>

#include "ed2/normal_forms.hpp"
#include "oracle.hpp"

using namespace ed2;
using ed2::testing::minor_gcd_invariant_factors;
using ed2::testing::random_matrix;
using ed2::testing::random_permutation_matrix;
using ed2::testing::random_unimodular;

namespace {

std::vector<Int> vec(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("hnf: identity is already canonical") {
  IntMatrix id = IntMatrix::identity(3);
  HnfResult r = hnf(id);
  CHECK(r.H == id);
  CHECK(r.U == id);
}

TEST_CASE("hnf: even-coordinate-sum columns of Z^2") {
  // Columns (1,1) and (0,2); hand reduction gives [[1,0],[1,2]].
  IntMatrix m = IntMatrix::from_rows({{1, 0}, {1, 2}});
  HnfResult r = hnf(m);
  CHECK(r.H == IntMatrix::from_rows({{1, 0}, {1, 2}}));
  CHECK((m * r.U) == r.H);
  Int d = r.U.det();
  CHECK((d == 1 || d == -1));
}

TEST_CASE("hnf: span invariance under column permutation and unimodular mixing") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m = random_matrix(rng, 1 + t % 6, 1 + (t * 7) % 6, -5, 5);
    IntMatrix p = random_permutation_matrix(rng, m.cols());
    CHECK(hnf(m).H == hnf(m * p).H);
    IntMatrix u = random_unimodular(rng, m.cols());
    CHECK(hnf(m).H == hnf(m * u).H);
  }
}

TEST_CASE("hnf: H and the input span the same lattice (mutual membership)") {
  std::mt19937 rng(2468);
  for (int t = 0; t < 25; ++t) {
    IntMatrix m = random_matrix(rng, 1 + t % 6, 1 + (t * 5) % 6, -6, 6);
    IntMatrix h = hnf(m).H;
    LatticeSolver in_m(m), in_h(h);
    for (std::size_t j = 0; j < m.cols(); ++j) CHECK(in_h.contains(m.col(j)));
    for (std::size_t j = 0; j < h.cols(); ++j) CHECK(in_m.contains(h.col(j)));
  }
}

TEST_CASE("hnf: staircase shape and reduced pivot rows") {
  std::mt19937 rng(99);
  for (int t = 0; t < 30; ++t) {
    IntMatrix m = random_matrix(rng, 2 + t % 5, 2 + (t * 3) % 5, -7, 7);
    IntMatrix h = hnf(m).H;
    std::size_t prev_pivot_row = 0;
    bool prev_set = false;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      std::size_t p = h.rows();
      for (std::size_t i = 0; i < h.rows(); ++i)
        if (h(i, j) != 0) {
          p = i;
          break;
        }
      if (p == h.rows()) {
        // zero column: everything to the right must be zero too
        for (std::size_t jj = j; jj < h.cols(); ++jj)
          for (std::size_t i = 0; i < h.rows(); ++i) CHECK(h(i, jj) == 0);
        break;
      }
      if (prev_set) CHECK(p > prev_pivot_row);
      prev_pivot_row = p;
      prev_set = true;
      CHECK(h(p, j) > 0);
      for (std::size_t jj = j + 1; jj < h.cols(); ++jj) CHECK(h(p, jj) == 0);
      for (std::size_t jj = 0; jj < j; ++jj) {
        CHECK(h(p, jj) >= 0);
        CHECK(h(p, jj) < h(p, j));
      }
    }
  }
}

TEST_CASE("snf: diag(2,3) has factors (1,6)") {
  SnfResult r = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0] == 1);
  CHECK(r.factors[1] == 6);
}

TEST_CASE("snf: [[2,4],[6,8]] against the minor-gcd oracle") {
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  SnfResult r = snf(m);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0] == 2);
  CHECK(r.factors[1] == 4);
  CHECK(r.factors == minor_gcd_invariant_factors(m));
  CHECK((r.U * m * r.V) == r.S);
}

TEST_CASE("snf: zero matrix has no invariant factors") {
  SnfResult r = snf(IntMatrix(2, 2));
  CHECK(r.factors.empty());
  CHECK(r.S == IntMatrix(2, 2));
}

TEST_CASE("snf: certificates and divisibility chain on random matrices") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 60; ++t) {
    IntMatrix m = random_matrix(rng, 1 + t % 7, 1 + (t * 5) % 7, -5, 5);
    SnfResult r = snf(m);
    CHECK((r.U * m * r.V) == r.S);
    Int du = r.U.det(), dv = r.V.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i + 1 < r.factors.size(); ++i)
      CHECK(r.factors[i + 1] % r.factors[i] == 0);
    if (m.rows() <= 5 && m.cols() <= 5) CHECK(r.factors == minor_gcd_invariant_factors(m));
  }
}

TEST_CASE("kernel: augmentation row (1,1,1)") {
  IntMatrix m = IntMatrix::from_rows({{1, 1, 1}});
  IntMatrix k = kernel_basis(m);
  CHECK(k.cols() == 2);
  LatticeSolver in_k(k);
  CHECK(in_k.contains(vec({1, -1, 0})));
  CHECK(in_k.contains(vec({0, 1, -1})));
  CHECK_FALSE(in_k.contains(vec({1, 0, 0})));
}

TEST_CASE("kernel: invertible matrix has empty kernel") {
  IntMatrix k = kernel_basis(IntMatrix::from_rows({{2, 1}, {1, 1}}));
  CHECK(k.cols() == 0);
  CHECK(k.rows() == 2);
}

TEST_CASE("kernel: pair/singleton map at n=3 has rank-3 kernel") {
  // Columns f12 f13 f23 g1 g2 g3 mapped to e_i+e_j and -2e_k.
  IntMatrix m = IntMatrix::from_rows(
      {{1, 1, 0, -2, 0, 0}, {1, 0, 1, 0, -2, 0}, {0, 1, 1, 0, 0, -2}});
  CHECK(minor_gcd_invariant_factors(m).size() == 3);  // oracle rank
  CHECK(rank(m) == 3);
  CHECK(kernel_basis(m).cols() == 3);  // rank-nullity: 6 - 3
}

TEST_CASE("kernel: rank-nullity on 200 random matrices") {
  std::mt19937 rng(777);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_matrix(rng, 1 + t % 12, 1 + (t * 11) % 12, -5, 5);
    IntMatrix k = kernel_basis(m);
    CHECK(k.cols() + rank(m) == m.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) {
      std::vector<Int> img = m.apply(k.col(j));
      for (const Int& x : img) CHECK(x == 0);
    }
  }
}

TEST_CASE("solve: identity basis returns the vector") {
  auto c = solve_in_lattice(IntMatrix::identity(3), vec({4, -1, 7}));
  REQUIRE(c.has_value());
  CHECK(*c == vec({4, -1, 7}));
}

TEST_CASE("solve: coefficients in the [[1,0],[1,2]] basis") {
  auto c = solve_in_lattice(IntMatrix::from_rows({{1, 0}, {1, 2}}), vec({1, 3}));
  REQUIRE(c.has_value());
  CHECK(*c == vec({1, 1}));
}

TEST_CASE("solve: odd vector is outside 2Z^2") {
  CHECK_FALSE(solve_in_lattice(IntMatrix::from_rows({{2, 0}, {0, 2}}), vec({1, 0})).has_value());
}

TEST_CASE("solve: dimension mismatch is an error") {
  CHECK_THROWS_AS(solve_in_lattice(IntMatrix::identity(2), vec({1, 2, 3})), RangeError);
}

TEST_CASE("solve: round-trips on random lattices") {
  std::mt19937 rng(31337);
  for (int t = 0; t < 50; ++t) {
    IntMatrix b = random_matrix(rng, 2 + t % 5, 1 + t % 4, -4, 4);
    IntMatrix coeff = random_matrix(rng, b.cols(), 1, -6, 6);
    std::vector<Int> v = b.apply(coeff.col(0));
    auto c = solve_in_lattice(b, v);
    REQUIRE(c.has_value());
    CHECK(b.apply(*c) == v);
  }
}

TEST_CASE("lattice_index: even-sum sublattice has index 2") {
  IntMatrix even = IntMatrix::from_rows({{1, 0, 0}, {-1, 1, 0}, {0, -1, 2}});
  auto idx = lattice_index(IntMatrix::identity(3), even);
  REQUIRE(idx.has_value());
  CHECK(*idx == 2);
}

TEST_CASE("lattice_index: a lattice inside itself has index 1") {
  IntMatrix b = IntMatrix::from_rows({{3, 1}, {0, 2}});
  auto idx = lattice_index(b, b);
  REQUIRE(idx.has_value());
  CHECK(*idx == 1);
}

TEST_CASE("lattice_index: rank drop means infinite index") {
  IntMatrix sub(2, 1);
  sub(0, 0) = 1;
  sub(1, 0) = 1;
  CHECK_FALSE(lattice_index(IntMatrix::identity(2), sub).has_value());
}

TEST_CASE("lattice_index: membership violation names the offending column") {
  IntMatrix sup = IntMatrix::from_rows({{2, 0}, {0, 2}});
  IntMatrix sub = IntMatrix::from_rows({{2, 1}, {0, 0}});
  try {
    lattice_index(sup, sub);
    FAIL("expected MembershipError");
  } catch (const MembershipError& e) {
    CHECK(e.column == 1);
  }
}

TEST_CASE("arbitrary precision: a 25-digit determinant and its normal forms") {
  IntMatrix m = IntMatrix::from_rows({
      {-50, -29, -26, -74, -69, 47, -21, 56, -20, 31, -52, -56},
      {46, 58, 89, -91, -47, 29, 31, 52, -60, -52, -18, -99},
      {30, -65, 72, -33, -14, -23, 22, -15, 79, 41, -12, -47},
      {-77, -68, -27, -32, 43, 30, 41, 58, -39, 89, -36, -22},
      {-93, 47, -68, 75, 70, 69, -73, -26, -22, 76, -39, 47},
      {-58, -71, -63, 89, -91, 88, 28, -56, 40, 10, -90, -36},
      {-1, -21, -94, 87, -69, 49, 5, -75, 32, 59, -64, -11},
      {42, 9, -53, 50, -18, 84, -73, -30, 99, -27, 37, -36},
      {62, -70, -91, -91, -17, 6, 80, -9, -97, -3, -67, 42},
      {-42, -86, 25, 80, 79, 89, 67, 3, 99, 81, -89, 75},
      {52, 99, -68, -60, -80, -25, -50, -60, -99, -32, -97, -8},
      {75, 55, -32, 21, 81, 64, -70, -3, 28, -48, -52, -76},
  });
  CHECK(m.det() == Int("3760070883397148209914222"));
  SnfResult s = snf(m);
  CHECK((s.U * m * s.V) == s.S);
  Int prod = 1;
  for (const Int& d : s.factors) prod *= d;
  CHECK(prod == Int("3760070883397148209914222"));  // |det| = product of factors
  CHECK(kernel_basis(m).cols() == 0);
}

TEST_CASE("determinism: identical inputs, bit-identical outputs") {
  std::mt19937 rng(5);
  IntMatrix m = random_matrix(rng, 9, 7, -9, 9);
  CHECK(hnf(m).H == hnf(m).H);
  CHECK(hnf(m).U == hnf(m).U);
  CHECK(snf(m).S == snf(m).S);
  CHECK(kernel_basis(m) == kernel_basis(m));
}

TEST_CASE("empty and degenerate shapes are legal") {
  IntMatrix empty;
  CHECK(hnf(empty).H == empty);
  CHECK(snf(empty).factors.empty());
  IntMatrix wide(0, 3);
  CHECK(kernel_basis(wide).cols() == 3);  // everything is in the kernel
  IntMatrix tall(3, 0);
  CHECK(rank(tall) == 0);
}
