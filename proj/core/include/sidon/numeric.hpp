#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace sidon {

// Exact arbitrary-precision arithmetic, GMP-backed. Nat values are
// non-negative by convention; every operation below is exact -- no floating
// point is used anywhere in the library.
using Nat = mpz_class;
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an operation would exceed the configured pair-count budget.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Floor square root: the r with r^2 <= n < (r+1)^2. Requires n >= 0.
Nat isqrt(const Nat& n);

// Floor k-th root: the r with r^k <= n < (r+1)^k. Requires n >= 0, k >= 1.
Nat iroot(const Nat& n, unsigned k);

Nat ipow(const Nat& base, unsigned exp);

// Saturating subtraction on Nat: a - b, clamped at zero.
Nat monus(const Nat& a, const Nat& b);

bool is_odd(const Nat& n);

// Strict decimal integer parse; throws std::invalid_argument on junk.
Int parse_int(const std::string& text);
Nat parse_nat(const std::string& text);  // additionally rejects negatives

// Parses "p/q" or a plain integer into a canonical rational.
Rat parse_rat(const std::string& text);

// num/den in lowest terms (den != 0). The two-argument mpq constructor does
// not reduce, so building rationals goes through here.
Rat make_rat(const Int& num, const Int& den);

bool fits_u64(const Nat& n);
std::uint64_t to_u64(const Nat& n);

// Largest n such that 2 * n^k still fits in uint64_t; interval scans switch
// to big-integer sums above this.
std::uint64_t u64_power_limit(int k);

// floor(10^digits * (num/den)^(1/root)) rendered as a decimal string with
// `digits` fractional places. Used to report measured ratios exactly.
std::string fixed_point_root(const Nat& num, const Nat& den, unsigned root,
                             unsigned digits);

// Deterministic PRNG. Uses raw mt19937_64 draws plus rejection sampling, so
// the value stream does not depend on the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform draws over inclusive ranges.
  std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi);
  std::int64_t uniform_i64(std::int64_t lo, std::int64_t hi);
  Nat uniform_nat(const Nat& lo, const Nat& hi);

 private:
  std::mt19937_64 eng_;
};

}  // namespace sidon
