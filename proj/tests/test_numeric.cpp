#include <doctest.h>

#include "sidon/numeric.hpp"

using namespace sidon;

TEST_CASE("isqrt basics") {
  CHECK(isqrt(Nat(0)) == 0);
  CHECK(isqrt(Nat(196)) == 14);
  CHECK(isqrt(Nat(197)) == 14);
  CHECK(isqrt(Nat(224)) == 14);
  CHECK(isqrt(Nat(225)) == 15);
  CHECK_THROWS_AS(isqrt(Nat(-1)), std::invalid_argument);
}

TEST_CASE("iroot basics") {
  CHECK(iroot(Nat(27), 3) == 3);
  CHECK(iroot(Nat(28), 3) == 3);
  CHECK(iroot(ipow(Nat(2), 13), 13) == 2);
  CHECK(iroot(Nat(0), 5) == 0);
  CHECK_THROWS_AS(iroot(Nat(10), 0), std::invalid_argument);
}

TEST_CASE("root defining inequalities on random input") {
  Rng rng(101);
  for (int i = 0; i < 2000; ++i) {
    Nat n = rng.uniform_nat(Nat(0), ipow(Nat(10), 1 + i % 25));
    Nat r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    unsigned k = 1 + static_cast<unsigned>(rng.uniform_u64(0, 12));
    Nat rk = iroot(n, k);
    CHECK(ipow(rk, k) <= n);
    CHECK(ipow(Nat(rk + 1), k) > n);
  }
}

TEST_CASE("monus clamps at zero") {
  CHECK(monus(Nat(5), Nat(3)) == 2);
  CHECK(monus(Nat(3), Nat(5)) == 0);
  CHECK(monus(Nat(3), Nat(3)) == 0);
}

TEST_CASE("parsing") {
  CHECK(parse_int("-42") == -42);
  CHECK(parse_nat("12345678901234567890123") ==
        Nat("12345678901234567890123"));
  CHECK_THROWS_AS(parse_nat("-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("12x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-2/4") == Rat(-1, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
}

TEST_CASE("u64 power limits") {
  for (int k : {2, 3, 4}) {
    Nat lim(static_cast<unsigned long>(u64_power_limit(k)));
    CHECK(2 * ipow(lim, k) <= Nat("18446744073709551615"));
    CHECK(2 * ipow(Nat(lim + 1), k) > Nat("18446744073709551615"));
  }
}

TEST_CASE("fixed point root rendering") {
  CHECK(fixed_point_root(Nat(4), Nat(1), 2, 4) == "2.0000");
  CHECK(fixed_point_root(Nat(2), Nat(1), 2, 4) == "1.4142");
  CHECK(fixed_point_root(Nat(8), Nat(1), 3, 3) == "2.000");
  CHECK(fixed_point_root(Nat(0), Nat(7), 2, 2) == "0.00");
}

TEST_CASE("rng determinism and bounds") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(8);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t v = c.uniform_u64(10, 20);
    CHECK(v >= 10);
    CHECK(v <= 20);
  }
  Rng d(9);
  Nat lo = ipow(Nat(10), 30);
  Nat hi = lo + 1000;
  for (int i = 0; i < 50; ++i) {
    Nat v = d.uniform_nat(lo, hi);
    CHECK(v >= lo);
    CHECK(v <= hi);
  }
  Rng e1(11), e2(11);
  CHECK(e1.uniform_nat(Nat(0), ipow(Nat(10), 40)) ==
        e2.uniform_nat(Nat(0), ipow(Nat(10), 40)));
}
