#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "sidon/quadruples.hpp"
#include "sidon/thresholds.hpp"

namespace sidon {

struct VerifyOptions {
  std::size_t witness_cap = 8;          // most witnesses kept per interval
  std::uint64_t pair_budget = 1000000;  // refuse intervals above this many pairs
};

enum class Verdict { sidon, not_sidon };

struct SidonReport {
  int k = 0;
  Nat N;
  Nat H;
  Verdict verdict = Verdict::sidon;
  // Sorted by (power sum, then lexicographically); capped at witness_cap.
  std::vector<PowerQuadruple> witnesses;
  std::uint64_t pairs_examined = 0;
  std::chrono::milliseconds elapsed{0};
};

// Decides whether {n^k : N <= n <= N+H} has all pairwise sums distinct, by
// exhaustive collision search over all (H+1)(H+2)/2 unordered pairs. Sums
// are exact: machine words while 2*(N+H)^k fits in 64 bits, big integers
// beyond. Requires k in {2,3,4}, N >= 1, H >= 1.
//
// Witness convention: for every colliding sum the representation with the
// smallest low element is canonical and is paired with each later one, so
// reports are reproducible bit for bit.
SidonReport verify_interval(int k, const Nat& N, const Nat& H,
                            const VerifyOptions& opts = {});

// verify_interval with H = max_admissible(spec) - N.
SidonReport verify_theorem_interval(const IntervalSpec& spec,
                                    const VerifyOptions& opts = {});

// Smallest H <= H_max whose interval is not Sidon, or nullopt. Incremental:
// step H only examines pairs involving the new endpoint N+H.
std::optional<Nat> min_violation(int k, const Nat& N, const Nat& H_max,
                                 const VerifyOptions& opts = {});

struct ScanFailure {
  Nat N;
  Nat H;
  PowerQuadruple witness;  // first witness of the failing interval
};

struct ScanReport {
  int k = 0;
  ThresholdKind kind;
  Nat from, to;
  std::vector<ScanFailure> failures;  // sorted by N
  std::uint64_t intervals = 0;
  std::uint64_t pairs_examined = 0;
  std::chrono::milliseconds elapsed{0};
};

// Runs verify_theorem_interval for every N in [from, to]. Work is
// distributed across `jobs` workers by whole intervals; the merged report
// does not depend on the worker count.
ScanReport scan(int k, const ThresholdKind& kind, const Nat& from,
                const Nat& to, unsigned jobs = 1,
                const VerifyOptions& opts = {});

struct DensityScanReport {
  Nat M;
  Nat T;
  Nat subintervals;   // floor(0.5 sqrt(M/T))
  Nat sublength;      // floor(sqrt(M T))
  std::uint64_t non_sidon = 0;
  std::vector<ScanFailure> failures;
  std::uint64_t pairs_examined = 0;
  std::chrono::milliseconds elapsed{0};
};

// Exploratory: partitions [M, 2M] into floor(0.5 sqrt(M/T)) disjoint
// subintervals of length floor(sqrt(M T)) and counts how many are not
// Sidon (cubes, k = 3). Requires T >= 1 and T^3 < M.
DensityScanReport density_scan(const Nat& M, const Nat& T,
                               const VerifyOptions& opts = {});

}  // namespace sidon
