#pragma once

#include <utility>

#include "sidon/numeric.hpp"

namespace sidon {

// Interval-length rules for {n^k : N <= n <= ...}. Each rule is decided by a
// one-line exact integer comparison; with d = n - N:
//
//   squares_open       n < N + sqrt(8N+8) + 2    <=>  d <= 2 or (d-2)^2 < 8N+8
//   squares_cor_open   n < N + sqrt(8N) + 2      <=>  d <= 2 or (d-2)^2 < 8N
//   squares_eps        n <= N + sqrt((8+e)N)     <=>  d^2 q <= (8q+p) N,  e = p/q
//   cubes_open         n < N + sqrt(38N/3 + 1297/36) + 19/6
//                                                <=>  6d <= 19 or (6d-19)^2 < 456N + 1297
//   cubes_cor_closed   n <= N + sqrt(38N/3) + 19/6
//                                                <=>  6d <= 19 or (6d-19)^2 <= 456N
//   cubes_pow          n <= N + c N^(2/3)        <=>  d^3 q^3 <= p^3 N^2,  c = p/q
//   quartic_sidon      n <= N + c N^(3/5)        <=>  d^5 q^5 <= p^5 N^3
//   quartic_pow        n <= N + c N^(12/13)      <=>  d^13 q^13 <= p^13 N^12
//   custom             n <= N + H
enum class ThresholdTag {
  squares_open,
  squares_cor_open,
  squares_eps,
  cubes_open,
  cubes_cor_closed,
  cubes_pow,
  quartic_sidon,
  quartic_pow,
  custom,
};

struct ThresholdKind {
  ThresholdTag tag = ThresholdTag::custom;
  Rat c;  // epsilon for squares_eps, the constant for the power-law kinds
  Nat H;  // custom length

  static ThresholdKind squares_open();
  static ThresholdKind squares_cor_open();
  static ThresholdKind squares_eps(const Rat& eps);  // requires eps > 0
  static ThresholdKind cubes_open();
  static ThresholdKind cubes_cor_closed();
  static ThresholdKind cubes_pow(const Rat& c);  // requires c > 0
  static ThresholdKind quartic_sidon(const Rat& c);
  static ThresholdKind quartic_pow(const Rat& c);
  static ThresholdKind custom(const Nat& H);
};

// Power the kind speaks about (2, 3 or 4); 0 for custom.
int implied_power(ThresholdTag tag);

// Exponent e = num/den for the power-law kinds; throws for the others.
std::pair<unsigned, unsigned> power_exponent(ThresholdTag tag);

// Defaults for the constants left configurable.
Rat default_c_cubes();          // 13
Rat default_c_quartic_sidon();  // 1
Rat default_c_quartic_pow();    // 40

// Human-readable tag names ("squares-open", ...), used by the CLI and in
// reports; parse is strict and throws on unknown names.
std::string threshold_tag_name(ThresholdTag tag);
ThresholdTag threshold_tag_from_name(const std::string& name);

struct IntervalSpec {
  int k = 2;  // power exponent: 2, 3 or 4
  Nat N;      // interval base point
  ThresholdKind kind;
};

// Exact truth of the kind's inequality at n. Requires n >= N.
bool threshold_allows(const IntervalSpec& spec, const Nat& n);

// Largest n with threshold_allows(spec, n) true. The predicate is
// downward-closed in n, so this pins the whole admissible range.
Nat max_admissible(const IntervalSpec& spec);

}  // namespace sidon
