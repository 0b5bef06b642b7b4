#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sidon/verifier.hpp"

namespace sidon {

struct CampaignCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CampaignResult {
  std::string campaign;  // "t1", "t3", "t4", "t5", "t7", "t8"
  bool pass = false;
  std::optional<std::uint64_t> seed;  // present when the run samples
  std::vector<CampaignCheck> checks;
  std::chrono::milliseconds elapsed{0};
};

// t1 -- squares: (i) every strict-threshold interval over [1, n_max_open]
// is collision-free; (ii) whenever the closed endpoint is an integer point
// (8N+8 a perfect square, N <= n_max_closed), including it breaks the
// interval, and every recorded witness has its maximum exactly there.
CampaignResult run_t1(const Nat& n_max_open, const Nat& n_max_closed,
                      unsigned jobs = 1, const VerifyOptions& opts = {});

// t3 -- squares: sampled large N admit a constructed quadruple inside
// [N, N + sqrt((8+eps) N)]; small fixed probes are reported, not asserted.
CampaignResult run_t3(const Rat& eps, unsigned samples, std::uint64_t seed);

// t4 -- cubes: (i) every strict-threshold interval over [1, n_max] is
// collision-free; (ii) the chain quadruples at indices 0..m_max certify the
// closed endpoint exactly, by pure arithmetic identities (no scanning).
CampaignResult run_t4(const Nat& n_max, unsigned m_max, unsigned jobs = 1,
                      const VerifyOptions& opts = {});

// t5 / t8 -- sampled N yield constructed quadruples inside [N, N + c N^e]
// (e = 2/3 for cubes, 12/13 for quartics); the measured max spread / N^e is
// reported alongside.
CampaignResult run_t5(unsigned samples, const Rat& c, std::uint64_t seed);
CampaignResult run_t8(unsigned samples, const Rat& c, std::uint64_t seed);

// t7 -- quartics: every interval [N, N + c N^(3/5)] over [1, n_max] is
// collision-free.
CampaignResult run_t7(const Nat& n_max, const Rat& c, unsigned jobs = 1,
                      const VerifyOptions& opts = {});

}  // namespace sidon
