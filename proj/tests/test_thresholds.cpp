#include <doctest.h>

#include "interval_oracle.hpp"
#include "sidon/thresholds.hpp"

using namespace sidon;

namespace {

IntervalSpec spec_of(int k, unsigned long N, ThresholdKind kind) {
  return IntervalSpec{k, Nat(N), std::move(kind)};
}

}  // namespace

TEST_CASE("squares strict threshold") {
  auto sp = spec_of(2, 1, ThresholdKind::squares_open());
  CHECK(threshold_allows(sp, Nat(4)));
  CHECK(threshold_allows(sp, Nat(6)));
  CHECK_FALSE(threshold_allows(sp, Nat(7)));
  CHECK(max_admissible(sp) == 6);
  CHECK_THROWS_AS(threshold_allows(sp, Nat(0)), std::invalid_argument);
}

TEST_CASE("cubes strict threshold at the sharp base point") {
  auto sp = spec_of(3, 42, ThresholdKind::cubes_open());
  // (6*27 - 19)^2 = 143^2 = 20449 = 456*42 + 1297: equality, so 69 is out.
  CHECK_FALSE(threshold_allows(sp, Nat(69)));
  CHECK(threshold_allows(sp, Nat(68)));
  CHECK(max_admissible(sp) == 68);
}

TEST_CASE("custom length") {
  auto sp = spec_of(3, 1, ThresholdKind::custom(Nat(7)));
  CHECK(max_admissible(sp) == 8);
  CHECK(threshold_allows(sp, Nat(8)));
  CHECK_FALSE(threshold_allows(sp, Nat(9)));
}

TEST_CASE("kind constructors reject bad constants") {
  CHECK_THROWS_AS(ThresholdKind::squares_eps(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(ThresholdKind::cubes_pow(Rat(-1)), std::invalid_argument);
  CHECK_THROWS_AS(ThresholdKind::quartic_sidon(Rat(0)),
                  std::invalid_argument);
}

TEST_CASE("tag names round-trip") {
  for (auto tag : {ThresholdTag::squares_open, ThresholdTag::squares_cor_open,
                   ThresholdTag::squares_eps, ThresholdTag::cubes_open,
                   ThresholdTag::cubes_cor_closed, ThresholdTag::cubes_pow,
                   ThresholdTag::quartic_sidon, ThresholdTag::quartic_pow,
                   ThresholdTag::custom})
    CHECK(threshold_tag_from_name(threshold_tag_name(tag)) == tag);
  CHECK_THROWS_AS(threshold_tag_from_name("nope"), std::invalid_argument);
}

TEST_CASE("quartic sidon length is the integer power floor") {
  for (unsigned long N : {1ul, 10ul, 100ul, 10000ul, 123456ul}) {
    auto sp = spec_of(4, N, ThresholdKind::quartic_sidon(Rat(1)));
    // floor(N^(3/5)) = iroot(N^3, 5)
    CHECK(max_admissible(sp) - Nat(N) == iroot(ipow(Nat(N), 3), 5));
  }
}

TEST_CASE("epsilon kind matches its defining inequality") {
  Rng rng(55);
  for (int i = 0; i < 300; ++i) {
    Rat eps = make_rat(Int(1 + rng.uniform_u64(0, 40)),
                       Int(1 + rng.uniform_u64(0, 10)));
    Nat N = rng.uniform_nat(Nat(1), Nat(1000000));
    auto sp = IntervalSpec{2, N, ThresholdKind::squares_eps(eps)};
    Nat top = max_admissible(sp);
    Nat d = top - N;
    // d <= sqrt((8+eps) N)  <=>  d^2 <= (8+eps) N, rationally
    Rat bound = (8 + eps) * Rat(N);
    CHECK(Rat(d * d) <= bound);
    CHECK(Rat((d + 1) * (d + 1)) > bound);
  }
}

TEST_CASE("max_admissible is the exact boundary for every kind") {
  Rng rng(56);
  std::vector<ThresholdKind> kinds = {
      ThresholdKind::squares_open(),
      ThresholdKind::squares_cor_open(),
      ThresholdKind::squares_eps(Rat(1, 3)),
      ThresholdKind::cubes_open(),
      ThresholdKind::cubes_cor_closed(),
      ThresholdKind::cubes_pow(default_c_cubes()),
      ThresholdKind::quartic_sidon(default_c_quartic_sidon()),
      ThresholdKind::quartic_pow(default_c_quartic_pow()),
      ThresholdKind::custom(Nat(1234)),
  };
  for (const auto& kind : kinds) {
    for (int i = 0; i < 120; ++i) {
      Nat N = rng.uniform_nat(Nat(1), ipow(Nat(10), 1 + i % 14));
      IntervalSpec sp{implied_power(kind.tag) ? implied_power(kind.tag) : 3,
                      N, kind};
      Nat top = max_admissible(sp);
      CHECK(top >= N);
      CHECK(threshold_allows(sp, top));
      CHECK_FALSE(threshold_allows(sp, Nat(top + 1)));
    }
  }
}

TEST_CASE("downward closure on random points") {
  Rng rng(57);
  auto kinds = {ThresholdKind::squares_open(), ThresholdKind::cubes_open(),
                ThresholdKind::quartic_pow(Rat(40))};
  for (const auto& kind : kinds) {
    for (int i = 0; i < 200; ++i) {
      Nat N = rng.uniform_nat(Nat(1), Nat(100000));
      IntervalSpec sp{2, N, kind};
      Nat top = max_admissible(sp);
      Nat n = rng.uniform_nat(N, Nat(top + 3));
      bool allowed = threshold_allows(sp, n);
      CHECK(allowed == (n <= top));
    }
  }
}

TEST_CASE("strict predicates agree with directed-rounding evaluation") {
  Rng rng(58);
  for (int i = 0; i < 10000; ++i) {
    Nat N = rng.uniform_nat(Nat(1), ipow(Nat(10), 1 + i % 8));
    IntervalSpec sq{2, N, ThresholdKind::squares_open()};
    IntervalSpec cu{3, N, ThresholdKind::cubes_open()};
    // Concentrate n around the boundary, where the decision is delicate.
    Nat top = max_admissible(sq);
    Nat n = rng.uniform_nat(N, Nat(top + 2));
    CHECK(threshold_allows(sq, n) == oracle::squares_open_allows(N, n));
    top = max_admissible(cu);
    n = rng.uniform_nat(N, Nat(top + 2));
    CHECK(threshold_allows(cu, n) == oracle::cubes_open_allows(N, n));
  }
}
