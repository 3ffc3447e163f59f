#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lqk/combinatorics.hpp"
#include "lqk/luqikeng.hpp"
#include "lqk/suites.hpp"

using namespace lqk;

TEST_CASE("D_{1,1} is Lu Qi-Keng with the root exactly at -1") {
  const auto v = is_lu_qi_keng({1, 1});
  CHECK(v.is_lu_qi_keng);
  CHECK(v.roots_in_unit_interval == 0);
  CHECK(v.root_at_minus_one);
  CHECK(v.largest_root.is_exact());
  CHECK(v.largest_root.lo == Rat(-1));
}

TEST_CASE("D_{2,1} is not Lu Qi-Keng: a root near -0.2679 sits inside (-1,0)") {
  const auto v = is_lu_qi_keng({2, 1});
  CHECK_FALSE(v.is_lu_qi_keng);
  CHECK(v.roots_in_unit_interval == 1);
  CHECK_FALSE(v.root_at_minus_one);
  CHECK(v.largest_root.width() <= Rat(1, 1000000));
  CHECK(v.largest_root.lo <= Rat(-26794919, 100000000));
  CHECK(v.largest_root.hi >= Rat(-26794920, 100000000));
  CHECK(v.largest_root.hi < 0);
}

TEST_CASE("D_{2,3} is Lu Qi-Keng") {
  const auto v = is_lu_qi_keng({2, 3});
  CHECK(v.is_lu_qi_keng);
  CHECK(v.roots_in_unit_interval == 0);
}

TEST_CASE("verdict booleans track the count") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned m = 1; m <= 10; ++m) {
      const auto v = is_lu_qi_keng({n, m});
      CHECK(v.is_lu_qi_keng == (v.roots_in_unit_interval == 0));
      CHECK(v.largest_root.hi < 0);
    }
  }
}

TEST_CASE("largest roots of the first column") {
  // A_{1,1} = 1+t and A_{1,2} = 4+2t have roots -1 and -2
  const auto r11 = largest_root({1, 1});
  CHECK(r11.lo <= Rat(-1));
  CHECK(r11.hi >= Rat(-1));
  const auto r12 = largest_root({1, 2}, Rat(1, 1000));
  CHECK(r12.lo <= Rat(-2));
  CHECK(r12.hi >= Rat(-2));
}

TEST_CASE("m0 certificates for the small table") {
  const auto c1 = compute_m0(1);
  CHECK(c1.m0 == 1);
  CHECK(c1.below.empty());
  CHECK(c1.at.is_lu_qi_keng);

  const auto c2 = compute_m0(2);
  CHECK(c2.m0 == 3);
  REQUIRE(c2.below.size() == 2);
  for (const auto& v : c2.below) CHECK_FALSE(v.is_lu_qi_keng);
  CHECK(c2.at.is_lu_qi_keng);

  const auto c3 = compute_m0(3);
  CHECK(c3.m0 == 6);
}

TEST_CASE("m0 values match the fast scan") {
  for (unsigned n = 1; n <= 8; ++n) CHECK(compute_m0(n).m0 == m0_value(n));
}

TEST_CASE("verdicts flip exactly at m0 and stay true after") {
  for (unsigned n = 1; n <= 8; ++n) {
    const unsigned m0 = m0_value(n);
    for (unsigned m = 1; m < m0; ++m) CHECK_FALSE(is_lu_qi_keng({n, m}).is_lu_qi_keng);
    for (unsigned m = m0; m <= m0 + 5; ++m) CHECK(is_lu_qi_keng({n, m}).is_lu_qi_keng);
  }
}

TEST_CASE("cap exceeded is loud") {
  CHECK_THROWS_AS((void)compute_m0(3, 2), CapExceededError);
  CHECK_THROWS_AS((void)m0_value(5, 4), CapExceededError);
  try {
    (void)m0_value(5, 4);
  } catch (const CapExceededError& e) {
    CHECK(e.n == 5);
    CHECK(e.m_cap == 4);
  }
}

TEST_CASE("default cap sits far above the observed thresholds") {
  for (unsigned n : {1u, 5u, 15u, 40u}) CHECK(default_m_cap(n) > 4 * n);
  CHECK(default_m_cap(1) >= 1);
}

TEST_CASE("eulerian bridge: roots of A_n inside the unit interval") {
  // The Eulerian polynomial A_n has a root in (-1,0) iff n >= 3.
  CHECK(unit_interval_root_count(eulerian_polynomial(1)).first == 0);
  CHECK(unit_interval_root_count(eulerian_polynomial(2)).first == 0);
  for (unsigned n = 3; n <= 12; ++n)
    CHECK(unit_interval_root_count(eulerian_polynomial(n)).first >= 1);
}

TEST_CASE("theorem suite passes on a small grid") {
  const auto rep = theorem_suite(4, 4);
  for (const auto* f : rep.failures())
    MESSAGE(f->name, " n=", f->n, " m=", f->m, " ", f->witness);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() > 50);
}

TEST_CASE("corrupted coefficient is caught and named") {
  const auto mutate = [](const AnmIndex& idx, IntPoly a) {
    if (idx.n == 2 && idx.m == 1) {
      auto c = a.coeffs();
      c[1] += 1;
      return IntPoly(c);
    }
    return a;
  };
  const auto rep = theorem_suite(2, 2, mutate);
  CHECK_FALSE(rep.all_pass());
  bool named = false;
  for (const auto* f : rep.failures())
    named = named || f->name.find("construction_equality") != std::string::npos;
  CHECK(named);
}

TEST_CASE("certified nearest integer of (n+1) ln(n+1)") {
  const long expect[] = {1, 3, 6, 8, 11, 14, 17, 20, 23, 26, 30, 33, 37, 41, 44};
  for (unsigned n = 1; n <= 15; ++n) {
    const auto f = certified_nearest_int_xlnx(n + 1);
    CHECK_FALSE(f.tie);
    CHECK(f.value == expect[n - 1]);
  }
}

TEST_CASE("conjecture probe on a short range") {
  const auto rep = conjecture_probe(6);
  REQUIRE(rep.rows.size() == 6);
  CHECK(rep.m0_le_f);
  CHECK(rep.equality_iff_n_le_10);
  for (const auto& row : rep.rows) {
    CHECK(row.m0 == m0_value(row.n));
    CHECK(row.diff == 0);  // equality holds through n = 10
    CHECK(row.strict_increase);
    CHECK(row.r_n1.hi < 0);
  }
  // r_{n,1} drifts toward zero as n grows
  CHECK(rep.rows.back().r_n1.lo > rep.rows.front().r_n1.hi);
}

TEST_CASE("residual-driven refinement gets small enough for doubles") {
  const IntPoly a = anm_recurrence({2, 1});
  auto roots = isolate_real_roots(a);
  REQUIRE(roots.size() == 2);
  const auto iv = refine_to_relative_residual(a, roots[1], 1e-12);
  const double value = std::abs(a.eval(iv.midpoint()).get_d());
  CHECK(value <= 1e-11);  // loose double-eval check
}
