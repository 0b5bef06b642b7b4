#include <doctest.h>

#include "sidon/campaigns.hpp"

using namespace sidon;

namespace {

bool has_check(const CampaignResult& res, const std::string& needle,
               bool pass) {
  for (const auto& c : res.checks)
    if (c.name.find(needle) != std::string::npos && c.pass == pass)
      return true;
  return false;
}

}  // namespace

TEST_CASE("t1 at desk scale") {
  CampaignResult res = run_t1(Nat(400), Nat(2500), 2);
  CHECK(res.pass);
  CHECK(has_check(res, "collision-free", true));
  CHECK(has_check(res, "closed endpoint violations exist", true));
  CHECK(has_check(res, "sits on the boundary", true));
  CHECK_FALSE(res.seed.has_value());
}

TEST_CASE("t3 sampled fit") {
  CampaignResult res = run_t3(Rat(1), 12, 777);
  CHECK(res.pass);
  CHECK(res.seed == 777);
  CHECK(has_check(res, "fit inside the widened interval", true));
  CHECK_THROWS_AS(run_t3(Rat(0), 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_t3(Rat(1), 0, 1), std::invalid_argument);
}

TEST_CASE("t4 at desk scale") {
  CampaignResult res = run_t4(Nat(400), 3, 2);
  CHECK(res.pass);
  CHECK(has_check(res, "collision-free", true));
  CHECK(has_check(res, "certificates", true));
}

TEST_CASE("t5 and t8 sampled containment") {
  CampaignResult t5 = run_t5(12, default_c_cubes(), 12345);
  CHECK(t5.pass);
  CHECK(t5.seed == 12345);
  CampaignResult t8 = run_t8(6, default_c_quartic_pow(), 12345);
  CHECK(t8.pass);
}

TEST_CASE("t7 at desk scale") {
  CampaignResult res = run_t7(Nat(400), default_c_quartic_sidon(), 2);
  CHECK(res.pass);
}

TEST_CASE("campaigns are reproducible") {
  CampaignResult a = run_t5(8, default_c_cubes(), 99);
  CampaignResult b = run_t5(8, default_c_cubes(), 99);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
  CampaignResult c = run_t3(Rat(2), 6, 4242);
  CampaignResult d = run_t3(Rat(2), 6, 4242);
  REQUIRE(c.checks.size() == d.checks.size());
  for (std::size_t i = 0; i < c.checks.size(); ++i)
    CHECK(c.checks[i].detail == d.checks[i].detail);
}
