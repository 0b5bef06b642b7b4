#pragma once

#include <array>

#include "sidon/pell.hpp"
#include "sidon/quadruples.hpp"

namespace sidon {

// ---------------------------------------------------------------------------
// Squares: for N >= 4 builds an equal-sum-of-two-squares quadruple whose
// elements all lie in [N, l+u-1], with
//
//   u = ceil(sqrt(2N-3)) + 1   (bumped by 1 when no admissible s exists)
//   s = largest integer of parity opposite to u with l := (1+u^2-s^2)/2
//       satisfying l >= N+u+1
//   (l-u-1)^2 + (l+u-1)^2 = (l-s)^2 + (l+s)^2.
// ---------------------------------------------------------------------------
struct SquaresTrace {
  Nat N;
  Nat u, s, l;
  bool retried = false;  // u had to be bumped past the initial choice
  PowerQuadruple quadruple;
};

SquaresTrace squares_quadruple(const Nat& N);  // requires N >= 4

// ---------------------------------------------------------------------------
// Cubes from the solution chain of D^2 - 19 B^2 = 254: the quadruple
//
//   x = (3B^2+B+42)/2, y = (3B^2-B+42)/2, z = (3B^2+36+D)/2, t = (3B^2+36-D)/2
//
// has equal cube sums, satisfies z > x > y > t = N with N = t, and sits
// exactly on the closed cubic threshold: (6D-19)^2 = 456 N + 1297.
// ---------------------------------------------------------------------------
struct CubesPellTrace {
  unsigned m = 0;
  Nat D, B;
  Nat C, A;  // C = 3B^2+36 = z+t, A = 3B^2+42 = x+y
  Nat N;     // = t
  PowerQuadruple quadruple;
};

CubesPellTrace cubes_pell_quadruple(unsigned m);

// Two-parameter rational family with x^3 + y^3 = z^3 + t^3 (exact, signs
// allowed):
//   x = 1-(p-3q)(p^2+3q^2),  y = -1+(p+3q)(p^2+3q^2),
//   z = p+3q-(p^2+3q^2)^2,   t = -(p-3q)+(p^2+3q^2)^2.
std::array<Rat, 4> euler_binet(const Rat& p, const Rat& q);

// Integer specialization: x = n^3-n^2+3n, y = n^3+n^2+3n, z = n^3-2n^2-3,
// t = n^3+2n^2+3. Requires n >= 3 (so z > 0). Spread is 4n^2 + 6.
PowerQuadruple cubes_poly_quadruple(const Nat& n);

// Smallest n >= ceil(N^(1/3))+1 whose cubes_poly_quadruple has minimum
// element >= N. Requires N >= 1.
PowerQuadruple cubes_short_interval(const Nat& N);

// Scales the chain quadruple at the smallest index m whose base point
// N_m reaches ceil(N^(2/3)) by the factor ceil(N / N_m): all elements end
// up >= N and the gcd of the four elements is divisible by the factor.
struct ScaledCubesTrace {
  unsigned m = 0;     // chain index used
  Nat base_point;     // N_m of the base quadruple
  Nat factor;         // ceil(N / N_m)
  PowerQuadruple quadruple;
};

ScaledCubesTrace cubes_scaled_quadruple(const Nat& N, unsigned index_cap = 64);

// ---------------------------------------------------------------------------
// Quartics: rational two-parameter family with A^4 + B^4 = C^4 + D^4.
// ---------------------------------------------------------------------------
struct QuarticParams {
  Rat a, b;
  Rat f, g, zpar;
  Rat p, q, r, s;

  // Derives every field from (a, b); rejects b^2 = 1 and b^2 + g^2 = 0.
  static QuarticParams from(const Rat& a, const Rat& b);
};

// (A, B, C, D) = (p+q, r-s, r+s, p-q); fourth-power identity is exact.
std::array<Rat, 4> euler_quartic(const QuarticParams& params);

// The degree-13 integer specialization of the quartic family. Values can be
// negative below n = 2; quartic_poly_values exposes the signed evaluation.
std::array<Int, 4> quartic_poly_values(const Nat& n);

// Requires n >= 2 (all four values positive from there on).
PowerQuadruple quartic_poly_quadruple(const Nat& n);

// Smallest n >= max(2, ceil(N^(1/13))) whose poly quadruple has minimum
// element >= N. Requires N >= 2^13.
PowerQuadruple quartic_short_interval(const Nat& N);

}  // namespace sidon
