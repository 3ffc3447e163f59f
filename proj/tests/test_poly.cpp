#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lqk/poly.hpp"

using namespace lqk;

TEST_CASE("normalization strips trailing zeros") {
  IntPoly p(std::vector<Int>{Int(1), Int(2), Int(0), Int(0)});
  CHECK(p.degree() == 1);
  CHECK(IntPoly{}.is_zero());
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{0, 0, 0}.degree() == -1);
}

TEST_CASE("arithmetic basics") {
  const IntPoly p{1, 4, 1};  // 1 + 4t + t^2
  const IntPoly q{1, 1};     // 1 + t

  CHECK(p + q == IntPoly{2, 5, 1});
  CHECK(p - q == IntPoly{0, 3, 1});
  CHECK(q * q == IntPoly{1, 2, 1});
  CHECK(Int(3) * q == IntPoly{3, 3});
  CHECK((p - p).is_zero());
  CHECK(-q == IntPoly{-1, -1});
}

TEST_CASE("derivative") {
  CHECK(IntPoly{1, 4, 1}.derivative() == IntPoly{4, 2});
  CHECK(IntPoly{5}.derivative().is_zero());
  CHECK(IntPoly{}.derivative().is_zero());
  // degree drops by exactly one
  CHECK(IntPoly{0, 0, 0, 7}.derivative().degree() == 2);
}

TEST_CASE("evaluation is exact") {
  const IntPoly p{1, 4, 1};
  CHECK(p.eval(Rat(-1)) == Rat(-2));
  CHECK(p.eval(Rat(0)) == Rat(1));
  CHECK(p.eval(Rat(1, 2)) == Rat(13, 4));
  CHECK(p.eval(Int(-3)) == Int(-2));
  CHECK(p.sign_at(Rat(-1, 2)) == sgn(Rat(1) - Rat(2) + Rat(1, 4)));
  CHECK(p.sign_at(Rat(-1)) == -1);
  CHECK(IntPoly{1, 1}.sign_at(Rat(-1)) == 0);
}

TEST_CASE("affine composition") {
  const IntPoly q{1, 1};
  CHECK(q.compose_affine(Int(1), Int(1)) == IntPoly{2, 1});  // t -> t + 1
  const IntPoly p{1, 4, 1};
  // p(2t - 1) = 1 + 4(2t-1) + (2t-1)^2 = -2 + 4t + 4t^2
  CHECK(p.compose_affine(Int(2), Int(-1)) == IntPoly{-2, 4, 4});
  // composing with t -> t is the identity
  CHECK(p.compose_affine(Int(1), Int(0)) == p);
}

TEST_CASE("content and primitive part") {
  CHECK(IntPoly{2, 4, 6}.content() == 2);
  CHECK(IntPoly{2, 4, 6}.primitive_part() == IntPoly{1, 2, 3});
  CHECK(IntPoly{-2, -4}.primitive_part() == IntPoly{-1, -2});
  CHECK(IntPoly{}.content() == 0);
}

TEST_CASE("pseudo remainder is a positive multiple of the true remainder") {
  // (t^2 + 4t + 1) mod (t + 1) = p(-1) = -2
  const IntPoly p{1, 4, 1};
  const IntPoly d{1, 1};
  const IntPoly r = pos_pseudo_rem(p, d);
  CHECK(r.degree() == 0);
  CHECK(sgn(r.leading()) == -1);

  // negative leading divisor must not flip the sign
  const IntPoly dneg{-1, -1};
  const IntPoly r2 = pos_pseudo_rem(p, dneg);
  CHECK(r2.degree() == 0);
  CHECK(sgn(r2.leading()) == -1);
}

TEST_CASE("exact division") {
  IntPoly q;
  CHECK(try_divide(IntPoly{1, 2, 1}, IntPoly{1, 1}, q));
  CHECK(q == IntPoly{1, 1});
  CHECK(try_divide(IntPoly{-2, -1, 1}, IntPoly{-2, 1}, q));  // (t-2)(t+1) / (t-2)
  CHECK(q == IntPoly{1, 1});
  CHECK_FALSE(try_divide(IntPoly{1, 4, 1}, IntPoly{1, 1}, q));
  CHECK_FALSE(try_divide(IntPoly{1, 1}, IntPoly{1, 2}, q));  // 1/2 not integral
}

TEST_CASE("gcd") {
  const IntPoly a = IntPoly{1, 1} * IntPoly{-2, 1};  // (t+1)(t-2)
  const IntPoly b = IntPoly{1, 1} * IntPoly{3, 1};   // (t+1)(t+3)
  CHECK(gcd(a, b) == IntPoly{1, 1});
  CHECK(gcd(a, IntPoly{}) == a.primitive_part());
  CHECK(gcd(IntPoly{4}, IntPoly{6}).degree() == 0);
  // gcd is primitive with positive leading coefficient
  CHECK(gcd(Int(-6) * a, Int(4) * b) == IntPoly{1, 1});
}

TEST_CASE("square-free detection") {
  CHECK(is_square_free(IntPoly{1, 4, 1}));
  CHECK_FALSE(is_square_free(IntPoly{1, 2, 1}));  // (1+t)^2
  CHECK(is_square_free(IntPoly{1, 1}));
  CHECK(is_square_free(IntPoly{5}));
  CHECK_THROWS_AS((void)is_square_free(IntPoly{}), std::invalid_argument);
}

TEST_CASE("random product of distinct linear factors stays square-free") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> roots;
    IntPoly p{1};
    while (roots.size() < 5) {
      Rat r(num(rng), den(rng));
      r.canonicalize();
      bool fresh = true;
      for (const Rat& s : roots) fresh = fresh && s != r;
      if (!fresh) continue;
      roots.push_back(r);
      // q t - p has root p/q
      p *= IntPoly(std::vector<Int>{-r.get_num(), r.get_den()});
    }
    CHECK(is_square_free(p));
    for (const Rat& r : roots) CHECK(p.sign_at(r) == 0);
  }
}

TEST_CASE("to_string") {
  CHECK(IntPoly{1, 4, 1}.to_string() == "1 + 4*t + t^2");
  CHECK(IntPoly{0, -1}.to_string() == "-t");
  CHECK(IntPoly{}.to_string() == "0");
}
