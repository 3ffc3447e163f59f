#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "lqk/combinatorics.hpp"

using namespace lqk;

namespace {

// Brute-force oracle: number of partitions of {0..n-1} into exactly k
// nonempty blocks, by enumerating block assignments in restricted-growth
// form.
long partitions_into_blocks(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<int> assign(n, 0);
  long count = 0;
  // assign[i] <= max(assign[0..i-1]) + 1 enumerates set partitions uniquely
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      assign[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return count;
}

// Brute-force oracle: permutations of {1..n} with exactly r rises
// (positions i with p[i] < p[i+1]).
long permutations_with_rises(int n, int r) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    int rises = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[i] < perm[i + 1]) ++rises;
    if (rises == r) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Triangle recurrence A(n,m) = (n-m+1) A(n-1,m-1) + m A(n-1,m), an
// independent route to the Eulerian numbers.
Int eulerian_by_triangle(unsigned n, unsigned m) {
  std::vector<std::vector<Int>> tri(n + 1);
  tri[1] = {Int(0), Int(1)};  // A(1,1) = 1
  for (unsigned i = 2; i <= n; ++i) {
    tri[i].assign(i + 1, Int(0));
    for (unsigned j = 1; j <= i; ++j) {
      const Int left = j >= 2 ? tri[i - 1][j - 1] : Int(0);
      const Int right = j <= i - 1 ? tri[i - 1][j] : Int(0);
      tri[i][j] = Int(i - j + 1) * left + Int(j) * right;
    }
  }
  return tri[n][m];
}

}  // namespace

TEST_CASE("stirling2 golden values") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(1, 1) == 1);
  CHECK(stirling2(4, 2) == partitions_into_blocks(4, 2));
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 6) == 0);
  CHECK(stirling2(3, 0) == 0);
}

TEST_CASE("stirling2 against brute-force partition enumeration") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n + 1; ++k)
      CHECK(stirling2(n, k) == partitions_into_blocks(n, k));
}

TEST_CASE("stirling2 boundary rows") {
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(n, 1) == 1);
  }
}

TEST_CASE("eulerian numbers match the displayed polynomials") {
  CHECK(eulerian_number(3, 2) == 4);
  CHECK(eulerian_number(4, 2) == 11);
  CHECK(eulerian_number(4, 3) == 11);
  for (unsigned n = 1; n <= 10; ++n) CHECK(eulerian_number(n, 1) == 1);
}

TEST_CASE("eulerian numbers against permutation enumeration") {
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; m <= n; ++m)
      CHECK(eulerian_number(n, m) == permutations_with_rises(n, m - 1));
}

TEST_CASE("eulerian numbers against the triangle recurrence") {
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned m = 1; m <= n; ++m)
      CHECK(eulerian_number(n, m) == eulerian_by_triangle(n, m));
}

TEST_CASE("eulerian row sums are factorials") {
  for (unsigned n = 1; n <= 12; ++n) {
    Int sum(0);
    for (unsigned m = 1; m <= n; ++m) sum += eulerian_number(n, m);
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("eulerian symmetry") {
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned m = 1; m <= n; ++m)
      CHECK(eulerian_number(n, m) == eulerian_number(n, n + 1 - m));
}

TEST_CASE("eulerian number domain errors") {
  CHECK_THROWS_AS((void)eulerian_number(3, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)eulerian_number(3, 4), std::invalid_argument);
}

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian_polynomial(1) == IntPoly{1});
  CHECK(eulerian_polynomial(2) == IntPoly{1, 1});
  CHECK(eulerian_polynomial(3) == IntPoly{1, 4, 1});
  CHECK(eulerian_polynomial(4) == IntPoly{1, 11, 11, 1});
  for (unsigned n = 1; n <= 8; ++n) {
    const IntPoly a = eulerian_polynomial(n);
    CHECK(a.degree() == static_cast<int>(n) - 1);
    CHECK(a.eval(Rat(1)) == Rat(factorial(n)));  // coefficient sum = n!
    for (const Int& c : a.coeffs()) CHECK(c > 0);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rat(3), 0u) == Rat(1));
  CHECK(pochhammer(Rat(2), 3u) == Rat(24));
  CHECK(pochhammer(Int(2), 3u) == Int(24));  // (m+1)_n at m=1, n=3
  CHECK(pochhammer(Rat(1, 2), 2u) == Rat(3, 4));
  CHECK(pochhammer(Rat(-2), 4u) == Rat(0));
}

TEST_CASE("binomial and factorial helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 6) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}
