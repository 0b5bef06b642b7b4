#pragma once

// Directed-rounding (MPFR) evaluation of the real threshold expressions.
// Completely independent of the library's integer predicate algebra: the
// expression is evaluated twice, once rounding every step down and once up,
// and the precision escalates until the bracket separates the integer.

#include <mpfr.h>

#include <stdexcept>

#include "sidon/numeric.hpp"

namespace oracle {

enum class Cmp { below, above };  // n strictly below / at-or-above the value

namespace detail {

// expr = N + sqrt(arg) + add, with arg and add exact rationals.
//
// When arg is the square of a rational the expression is rational and can
// equal n exactly (that is precisely what happens at the sharp base points),
// so no bracket would ever separate; that case is decided exactly first.
inline Cmp cmp_sqrt_affine(const sidon::Nat& n, const sidon::Nat& N,
                           const sidon::Rat& arg, const sidon::Rat& add) {
  {
    sidon::Nat num = arg.get_num();
    sidon::Nat den = arg.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) &&
        mpz_perfect_square_p(den.get_mpz_t())) {
      sidon::Rat expr =
          sidon::Rat(N) + sidon::make_rat(sidon::isqrt(num),
                                          sidon::isqrt(den)) + add;
      return sidon::Rat(n) < expr ? Cmp::below : Cmp::above;
    }
  }
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_set_q(lo, arg.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, arg.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_add_z(lo, lo, N.get_mpz_t(), MPFR_RNDD);
    mpfr_add_z(hi, hi, N.get_mpz_t(), MPFR_RNDU);
    mpfr_add_q(lo, lo, add.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(hi, hi, add.get_mpq_t(), MPFR_RNDU);
    bool below = mpfr_cmp_z(lo, n.get_mpz_t()) > 0;   // n < lo <= expr
    bool above = mpfr_cmp_z(hi, n.get_mpz_t()) <= 0;  // expr <= hi <= n
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (below) return Cmp::below;
    if (above) return Cmp::above;
  }
  throw std::runtime_error("interval oracle: bracket failed to separate");
}

}  // namespace detail

// Truth of n < N + sqrt(8N+8) + 2.
inline bool squares_open_allows(const sidon::Nat& N, const sidon::Nat& n) {
  sidon::Rat arg(sidon::Nat(8 * N + 8));
  return detail::cmp_sqrt_affine(n, N, arg, sidon::Rat(2)) == Cmp::below;
}

// Truth of n < N + sqrt(38N/3 + 1297/36) + 19/6.
inline bool cubes_open_allows(const sidon::Nat& N, const sidon::Nat& n) {
  sidon::Rat arg = sidon::Rat(38) / 3 * sidon::Rat(N) + sidon::Rat(1297) / 36;
  return detail::cmp_sqrt_affine(n, N, arg, sidon::Rat(19) / 6) == Cmp::below;
}

// Truth of d < sqrt(8N) + 5 N^(1/4).
inline bool below_sqrt_plus_fourth_root(const sidon::Nat& d,
                                        const sidon::Nat& N) {
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    mpfr_t lo, hi, r;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(r, prec);
    sidon::Nat eight = 8 * N;

    mpfr_set_z(lo, eight.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_set_z(r, N.get_mpz_t(), MPFR_RNDD);
    mpfr_rootn_ui(r, r, 4, MPFR_RNDD);
    mpfr_mul_ui(r, r, 5, MPFR_RNDD);
    mpfr_add(lo, lo, r, MPFR_RNDD);

    mpfr_set_z(hi, eight.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_set_z(r, N.get_mpz_t(), MPFR_RNDU);
    mpfr_rootn_ui(r, r, 4, MPFR_RNDU);
    mpfr_mul_ui(r, r, 5, MPFR_RNDU);
    mpfr_add(hi, hi, r, MPFR_RNDU);

    bool below = mpfr_cmp_z(lo, d.get_mpz_t()) > 0;
    bool above = mpfr_cmp_z(hi, d.get_mpz_t()) <= 0;
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(r);
    if (below) return true;
    if (above) return false;
  }
  throw std::runtime_error("interval oracle: bracket failed to separate");
}

}  // namespace oracle
