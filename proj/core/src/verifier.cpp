#include "sidon/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace sidon {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

void check_power(int k) {
  if (k != 2 && k != 3 && k != 4)
    throw std::invalid_argument("power k must be 2, 3 or 4");
}

// Pair count (H+1)(H+2)/2, checked against the budget. Offsets must also
// stay below 2^32 for the table entries.
std::uint64_t guarded_pair_count(const Nat& H,
                                 const VerifyOptions& opts) {
  Nat pairs = (H + 1) * (H + 2) / 2;
  if (pairs > Nat(static_cast<unsigned long>(opts.pair_budget)) ||
      H >= Nat("4294967295"))
    throw ResourceLimitError(
        "interval of length " + H.get_str() + " needs " + pairs.get_str() +
        " pair slots, budget is " + std::to_string(opts.pair_budget) +
        "; raise the memory budget to scan it");
  return to_u64(pairs);
}

// One collision event: the canonical (first-seen, lowest low element)
// representation of a sum plus a later representation. Offsets are relative
// to N and fit in 32 bits because the pair budget bounds H far below 2^32.
struct CollisionEvent {
  std::uint32_t lo1, hi1, lo2, hi2;
};

// Open-addressing table keyed by 64-bit pair sum. Sum 0 marks an empty slot
// (unreachable for N >= 1). Stores the canonical representation per sum.
class SumTableU64 {
 public:
  void reset(std::uint64_t expected_pairs) {
    std::size_t want = 16;
    while (want < expected_pairs + expected_pairs / 2) want <<= 1;
    slots_.assign(want, Entry{});
    mask_ = want - 1;
  }

  struct Entry {
    std::uint64_t sum = 0;
    std::uint32_t lo = 0, hi = 0;
  };

  // Inserts (sum, lo, hi); returns the resident entry when the sum was
  // already present, nullptr otherwise.
  const Entry* insert(std::uint64_t sum, std::uint32_t lo, std::uint32_t hi) {
    std::size_t idx = hash(sum) & mask_;
    for (;;) {
      Entry& e = slots_[idx];
      if (e.sum == 0) {
        e.sum = sum;
        e.lo = lo;
        e.hi = hi;
        return nullptr;
      }
      if (e.sum == sum) return &e;
      idx = (idx + 1) & mask_;
    }
  }

 private:
  static std::uint64_t hash(std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ull;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebull;
    v ^= v >> 31;
    return v;
  }

  std::vector<Entry> slots_;
  std::size_t mask_ = 0;
};

// Collision collection in the machine-word regime.
std::vector<CollisionEvent> collide_u64(int k, std::uint64_t n0,
                                        std::uint32_t h,
                                        std::uint64_t expected_pairs) {
  std::vector<std::uint64_t> pw(h + 1);
  for (std::uint32_t i = 0; i <= h; ++i) {
    std::uint64_t v = n0 + i;
    std::uint64_t p = v * v;
    if (k >= 3) p *= v;
    if (k == 4) p *= v;
    pw[i] = p;
  }
  SumTableU64 table;
  table.reset(expected_pairs);
  std::vector<CollisionEvent> events;
  for (std::uint32_t i = 0; i <= h; ++i) {
    const std::uint64_t pi = pw[i];
    for (std::uint32_t j = i; j <= h; ++j) {
      const auto* prev = table.insert(pi + pw[j], i, j);
      if (prev) events.push_back({prev->lo, prev->hi, i, j});
    }
  }
  return events;
}

// Collision collection with big-integer sums: sort all pair sums and walk
// equal runs. Same canonical-representation convention as the fast path.
std::vector<CollisionEvent> collide_mpz(int k, const Nat& N, std::uint32_t h,
                                        std::uint64_t expected_pairs) {
  std::vector<Nat> pw(h + 1);
  for (std::uint32_t i = 0; i <= h; ++i) pw[i] = ipow(Nat(N + i), k);
  struct Keyed {
    Nat sum;
    std::uint32_t lo, hi;
  };
  std::vector<Keyed> keys;
  keys.reserve(expected_pairs);
  for (std::uint32_t i = 0; i <= h; ++i)
    for (std::uint32_t j = i; j <= h; ++j)
      keys.push_back({Nat(pw[i] + pw[j]), i, j});
  std::sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) {
    int c = cmp(a.sum, b.sum);
    if (c != 0) return c < 0;
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  std::vector<CollisionEvent> events;
  std::size_t run = 0;
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i].sum == keys[run].sum)
      events.push_back({keys[run].lo, keys[run].hi, keys[i].lo, keys[i].hi});
    else
      run = i;
  }
  return events;
}

std::vector<PowerQuadruple> events_to_witnesses(
    int k, const Nat& N, std::vector<CollisionEvent> events,
    std::size_t witness_cap) {
  std::vector<PowerQuadruple> out;
  out.reserve(events.size());
  for (const auto& e : events) {
    PowerQuadruple q = PowerQuadruple::from_pairs(
        k, Nat(N + e.hi1), Nat(N + e.lo1), Nat(N + e.hi2), Nat(N + e.lo2));
    // Soundness: every emitted witness is re-checked with exact arithmetic,
    // independently of the collision path that produced it.
    if (!q.valid())
      throw std::logic_error("collision search produced an invalid witness");
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), quadruple_less);
  if (out.size() > witness_cap) out.resize(witness_cap);
  return out;
}

}  // namespace

SidonReport verify_interval(int k, const Nat& N, const Nat& H,
                            const VerifyOptions& opts) {
  const auto start = Clock::now();
  check_power(k);
  if (N < 1) throw std::invalid_argument("verify_interval: N must be >= 1");
  if (H < 1) throw std::invalid_argument("verify_interval: H must be >= 1");
  if (opts.witness_cap < 1)
    throw std::invalid_argument("verify_interval: witness cap must be >= 1");
  const std::uint64_t pairs = guarded_pair_count(H, opts);
  const std::uint32_t h = static_cast<std::uint32_t>(to_u64(H));

  SidonReport rep;
  rep.k = k;
  rep.N = N;
  rep.H = H;
  rep.pairs_examined = pairs;

  const Nat n_max = N + H;
  std::vector<CollisionEvent> events;
  if (fits_u64(n_max) && to_u64(n_max) <= u64_power_limit(k))
    events = collide_u64(k, to_u64(N), h, pairs);
  else
    events = collide_mpz(k, N, h, pairs);

  rep.witnesses = events_to_witnesses(k, N, std::move(events),
                                      opts.witness_cap);
  rep.verdict = rep.witnesses.empty() ? Verdict::sidon : Verdict::not_sidon;
  rep.elapsed = since(start);
  return rep;
}

SidonReport verify_theorem_interval(const IntervalSpec& spec,
                                    const VerifyOptions& opts) {
  Nat H = max_admissible(spec) - spec.N;
  return verify_interval(spec.k, spec.N, H, opts);
}

std::optional<Nat> min_violation(int k, const Nat& N, const Nat& H_max,
                                 const VerifyOptions& opts) {
  check_power(k);
  if (N < 1) throw std::invalid_argument("min_violation: N must be >= 1");
  if (H_max < 1) throw std::invalid_argument("min_violation: H_max >= 1");
  const std::uint64_t pairs = guarded_pair_count(H_max, opts);
  const std::uint32_t hmax = static_cast<std::uint32_t>(to_u64(H_max));
  const Nat n_max = N + H_max;

  if (fits_u64(n_max) && to_u64(n_max) <= u64_power_limit(k)) {
    const std::uint64_t n0 = to_u64(N);
    std::vector<std::uint64_t> pw(hmax + 1);
    for (std::uint32_t i = 0; i <= hmax; ++i) {
      std::uint64_t v = n0 + i;
      std::uint64_t p = v * v;
      if (k >= 3) p *= v;
      if (k == 4) p *= v;
      pw[i] = p;
    }
    SumTableU64 table;
    table.reset(pairs);
    table.insert(pw[0] + pw[0], 0, 0);
    for (std::uint32_t hh = 1; hh <= hmax; ++hh) {
      const std::uint64_t pe = pw[hh];
      for (std::uint32_t i = 0; i <= hh; ++i)
        if (table.insert(pw[i] + pe, i, hh)) return Nat(hh);
    }
    return std::nullopt;
  }

  // Big-integer regime: ordered map keyed by the exact sum.
  std::vector<Nat> pw(hmax + 1);
  for (std::uint32_t i = 0; i <= hmax; ++i) pw[i] = ipow(Nat(N + i), k);
  std::map<Nat, std::pair<std::uint32_t, std::uint32_t>> sums;
  sums.emplace(Nat(pw[0] + pw[0]), std::make_pair(0u, 0u));
  for (std::uint32_t hh = 1; hh <= hmax; ++hh) {
    for (std::uint32_t i = 0; i <= hh; ++i) {
      auto [it, fresh] = sums.emplace(Nat(pw[i] + pw[hh]),
                                      std::make_pair(i, hh));
      if (!fresh) return Nat(hh);
    }
  }
  return std::nullopt;
}

ScanReport scan(int k, const ThresholdKind& kind, const Nat& from,
                const Nat& to, unsigned jobs, const VerifyOptions& opts) {
  const auto start = Clock::now();
  check_power(k);
  if (from < 1 || from > to)
    throw std::invalid_argument("scan: need 1 <= from <= to");
  Nat count_n = to - from + 1;
  if (!fits_u64(count_n))
    throw std::invalid_argument("scan: range too large");
  const std::uint64_t total = to_u64(count_n);
  if (jobs < 1) jobs = 1;
  if (jobs > total) jobs = static_cast<unsigned>(total);

  ScanReport rep;
  rep.k = k;
  rep.kind = kind;
  rep.from = from;
  rep.to = to;
  rep.intervals = total;

  std::atomic<std::uint64_t> cursor{0};
  std::mutex merge_mutex;
  std::uint64_t pairs_total = 0;
  std::exception_ptr first_error;

  auto worker = [&]() {
    std::vector<ScanFailure> local;
    std::uint64_t local_pairs = 0;
    try {
      for (;;) {
        std::uint64_t i = cursor.fetch_add(1);
        if (i >= total) break;
        IntervalSpec sp{k, Nat(from + i), kind};
        SidonReport r = verify_theorem_interval(sp, opts);
        local_pairs += r.pairs_examined;
        if (r.verdict == Verdict::not_sidon)
          local.push_back({sp.N, r.H, r.witnesses.front()});
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      pairs_total += local_pairs;
      rep.failures.insert(rep.failures.end(), local.begin(), local.end());
    } catch (...) {
      std::lock_guard<std::mutex> lock(merge_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const ScanFailure& a, const ScanFailure& b) {
              return a.N < b.N;
            });
  rep.pairs_examined = pairs_total;
  rep.elapsed = since(start);
  return rep;
}

DensityScanReport density_scan(const Nat& M, const Nat& T,
                               const VerifyOptions& opts) {
  const auto start = Clock::now();
  if (T < 1) throw std::invalid_argument("density_scan: T must be >= 1");
  if (M < 2) throw std::invalid_argument("density_scan: M must be >= 2");
  if (T * T * T >= M)
    throw std::invalid_argument("density_scan: requires T^3 < M");

  DensityScanReport rep;
  rep.M = M;
  rep.T = T;
  rep.subintervals = isqrt(Nat(M / (4 * T)));  // floor(0.5 sqrt(M/T))
  rep.sublength = isqrt(Nat(M * T));           // floor(sqrt(M T))
  if (rep.subintervals < 1)
    throw std::invalid_argument("density_scan: no subintervals at this M, T");

  const std::uint64_t S = to_u64(rep.subintervals);
  for (std::uint64_t i = 0; i < S; ++i) {
    Nat Ni = M + Nat(i) * (rep.sublength + 1);
    SidonReport r = verify_interval(3, Ni, rep.sublength, opts);
    rep.pairs_examined += r.pairs_examined;
    if (r.verdict == Verdict::not_sidon) {
      ++rep.non_sidon;
      rep.failures.push_back({Ni, r.H, r.witnesses.front()});
    }
  }
  rep.elapsed = since(start);
  return rep;
}

}  // namespace sidon
