#include "sidon/thresholds.hpp"

namespace sidon {

namespace {

Rat require_positive(Rat v, const char* what) {
  v.canonicalize();
  if (v <= 0) throw std::invalid_argument(std::string(what) + " must be > 0");
  return v;
}

// Largest r >= 0 with r^2 < m (0 when m <= 1).
Nat largest_sqrt_below(const Nat& m) {
  if (m <= 1) return 0;
  return isqrt(Nat(m - 1));
}

}  // namespace

ThresholdKind ThresholdKind::squares_open() {
  return {ThresholdTag::squares_open, Rat(), Nat()};
}
ThresholdKind ThresholdKind::squares_cor_open() {
  return {ThresholdTag::squares_cor_open, Rat(), Nat()};
}
ThresholdKind ThresholdKind::squares_eps(const Rat& eps) {
  return {ThresholdTag::squares_eps, require_positive(eps, "epsilon"), Nat()};
}
ThresholdKind ThresholdKind::cubes_open() {
  return {ThresholdTag::cubes_open, Rat(), Nat()};
}
ThresholdKind ThresholdKind::cubes_cor_closed() {
  return {ThresholdTag::cubes_cor_closed, Rat(), Nat()};
}
ThresholdKind ThresholdKind::cubes_pow(const Rat& c) {
  return {ThresholdTag::cubes_pow, require_positive(c, "c"), Nat()};
}
ThresholdKind ThresholdKind::quartic_sidon(const Rat& c) {
  return {ThresholdTag::quartic_sidon, require_positive(c, "c"), Nat()};
}
ThresholdKind ThresholdKind::quartic_pow(const Rat& c) {
  return {ThresholdTag::quartic_pow, require_positive(c, "c"), Nat()};
}
ThresholdKind ThresholdKind::custom(const Nat& H) {
  if (H < 0) throw std::invalid_argument("custom length must be >= 0");
  return {ThresholdTag::custom, Rat(), H};
}

int implied_power(ThresholdTag tag) {
  switch (tag) {
    case ThresholdTag::squares_open:
    case ThresholdTag::squares_cor_open:
    case ThresholdTag::squares_eps:
      return 2;
    case ThresholdTag::cubes_open:
    case ThresholdTag::cubes_cor_closed:
    case ThresholdTag::cubes_pow:
      return 3;
    case ThresholdTag::quartic_sidon:
    case ThresholdTag::quartic_pow:
      return 4;
    case ThresholdTag::custom:
      return 0;
  }
  return 0;
}

std::pair<unsigned, unsigned> power_exponent(ThresholdTag tag) {
  switch (tag) {
    case ThresholdTag::cubes_pow:
      return {2, 3};
    case ThresholdTag::quartic_sidon:
      return {3, 5};
    case ThresholdTag::quartic_pow:
      return {12, 13};
    default:
      throw std::invalid_argument("power_exponent: not a power-law kind");
  }
}

Rat default_c_cubes() { return Rat(13); }
Rat default_c_quartic_sidon() { return Rat(1); }
Rat default_c_quartic_pow() { return Rat(40); }

std::string threshold_tag_name(ThresholdTag tag) {
  switch (tag) {
    case ThresholdTag::squares_open:
      return "squares-open";
    case ThresholdTag::squares_cor_open:
      return "squares-cor-open";
    case ThresholdTag::squares_eps:
      return "squares-eps";
    case ThresholdTag::cubes_open:
      return "cubes-open";
    case ThresholdTag::cubes_cor_closed:
      return "cubes-cor-closed";
    case ThresholdTag::cubes_pow:
      return "cubes-pow";
    case ThresholdTag::quartic_sidon:
      return "quartic-sidon";
    case ThresholdTag::quartic_pow:
      return "quartic-pow";
    case ThresholdTag::custom:
      return "custom";
  }
  return "custom";
}

ThresholdTag threshold_tag_from_name(const std::string& name) {
  if (name == "squares-open") return ThresholdTag::squares_open;
  if (name == "squares-cor-open") return ThresholdTag::squares_cor_open;
  if (name == "squares-eps") return ThresholdTag::squares_eps;
  if (name == "cubes-open") return ThresholdTag::cubes_open;
  if (name == "cubes-cor-closed") return ThresholdTag::cubes_cor_closed;
  if (name == "cubes-pow") return ThresholdTag::cubes_pow;
  if (name == "quartic-sidon") return ThresholdTag::quartic_sidon;
  if (name == "quartic-pow") return ThresholdTag::quartic_pow;
  if (name == "custom") return ThresholdTag::custom;
  throw std::invalid_argument("unknown threshold kind '" + name + "'");
}

bool threshold_allows(const IntervalSpec& spec, const Nat& n) {
  if (n < spec.N) throw std::invalid_argument("threshold_allows: n < N");
  const Nat& N = spec.N;
  const Nat d = n - N;
  switch (spec.kind.tag) {
    case ThresholdTag::squares_open: {
      if (d <= 2) return true;
      Nat e = d - 2;
      return e * e < 8 * N + 8;
    }
    case ThresholdTag::squares_cor_open: {
      if (d <= 2) return true;
      Nat e = d - 2;
      return e * e < 8 * N;
    }
    case ThresholdTag::squares_eps: {
      const Nat p = spec.kind.c.get_num();
      const Nat q = spec.kind.c.get_den();
      return d * d * q <= (8 * q + p) * N;
    }
    case ThresholdTag::cubes_open: {
      Nat sd = 6 * d;
      if (sd <= 19) return true;
      Nat e = sd - 19;
      return e * e < 456 * N + 1297;
    }
    case ThresholdTag::cubes_cor_closed: {
      Nat sd = 6 * d;
      if (sd <= 19) return true;
      Nat e = sd - 19;
      return e * e <= 456 * N;
    }
    case ThresholdTag::cubes_pow:
    case ThresholdTag::quartic_sidon:
    case ThresholdTag::quartic_pow: {
      auto [u, v] = power_exponent(spec.kind.tag);
      const Nat p = spec.kind.c.get_num();
      const Nat q = spec.kind.c.get_den();
      return ipow(d, v) * ipow(q, v) <= ipow(p, v) * ipow(N, u);
    }
    case ThresholdTag::custom:
      return d <= spec.kind.H;
  }
  throw std::logic_error("threshold_allows: bad tag");
}

Nat max_admissible(const IntervalSpec& spec) {
  const Nat& N = spec.N;
  Nat d;
  switch (spec.kind.tag) {
    case ThresholdTag::squares_open:
      d = 2 + largest_sqrt_below(Nat(8 * N + 8));
      break;
    case ThresholdTag::squares_cor_open:
      d = 2 + largest_sqrt_below(Nat(8 * N));
      break;
    case ThresholdTag::squares_eps: {
      const Nat p = spec.kind.c.get_num();
      const Nat q = spec.kind.c.get_den();
      d = isqrt(Nat((8 * q + p) * N / q));
      break;
    }
    case ThresholdTag::cubes_open: {
      Nat K = largest_sqrt_below(Nat(456 * N + 1297));
      d = (K + 19) / 6;
      break;
    }
    case ThresholdTag::cubes_cor_closed: {
      Nat K = isqrt(Nat(456 * N));
      d = (K + 19) / 6;
      break;
    }
    case ThresholdTag::cubes_pow:
    case ThresholdTag::quartic_sidon:
    case ThresholdTag::quartic_pow: {
      auto [u, v] = power_exponent(spec.kind.tag);
      const Nat p = spec.kind.c.get_num();
      const Nat q = spec.kind.c.get_den();
      d = iroot(Nat(ipow(p, v) * ipow(N, u) / ipow(q, v)), v);
      break;
    }
    case ThresholdTag::custom:
      d = spec.kind.H;
      break;
  }
  return Nat(N + d);
}

}  // namespace sidon
