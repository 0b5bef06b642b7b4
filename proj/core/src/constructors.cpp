#include "sidon/constructors.hpp"

namespace sidon {

namespace {

// ceil(sqrt(v)) for v >= 0.
Nat ceil_sqrt(const Nat& v) {
  Nat r = isqrt(v);
  if (r * r < v) ++r;
  return r;
}

// ceil(root_k(v)) for v >= 0.
Nat ceil_root(const Nat& v, unsigned k) {
  Nat r = iroot(v, k);
  if (ipow(r, k) < v) ++r;
  return r;
}

// ceil(a / b) for a >= 0, b >= 1.
Nat ceil_div(const Nat& a, const Nat& b) {
  Nat q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SquaresTrace squares_quadruple(const Nat& N) {
  if (N < 4) throw std::invalid_argument("squares_quadruple: N must be >= 4");
  SquaresTrace tr;
  tr.N = N;
  Nat u = ceil_sqrt(Nat(2 * N - 3)) + 1;
  const Nat u_initial = u;
  for (;;) {
    // Largest s >= 0 of parity opposite to u with (1+u^2-s^2)/2 >= N+u+1,
    // i.e. s^2 <= u^2 - 2u - 2N - 1.
    Nat cap = u * u - 2 * u - 2 * N - 1;
    if (cap >= 0) {
      Nat s = isqrt(cap);
      if (is_odd(s) == is_odd(u)) s -= 1;
      if (s >= 0) {
        tr.u = u;
        tr.s = s;
        tr.l = (1 + u * u - s * s) / 2;
        tr.retried = (u != u_initial);
        break;
      }
    }
    ++u;
  }
  const Nat& l = tr.l;
  tr.quadruple = PowerQuadruple::from_pairs(2, Nat(l - tr.u - 1),
                                            Nat(l + tr.u - 1), Nat(l - tr.s),
                                            Nat(l + tr.s));
  return tr;
}

CubesPellTrace cubes_pell_quadruple(unsigned m) {
  CubesPellTrace tr;
  PellSolution sol = pell_at(m);
  tr.m = m;
  tr.D = sol.D;
  tr.B = sol.B;
  Nat b2 = 3 * sol.B * sol.B;
  tr.C = b2 + 36;
  tr.A = b2 + 42;
  tr.N = (tr.C - sol.D) / 2;
  Nat x = (b2 + sol.B + 42) / 2;
  Nat y = (b2 - sol.B + 42) / 2;
  Nat z = (tr.C + sol.D) / 2;
  Nat t = (tr.C - sol.D) / 2;
  tr.quadruple = PowerQuadruple::from_pairs(3, x, y, z, t);
  return tr;
}

std::array<Rat, 4> euler_binet(const Rat& p_in, const Rat& q_in) {
  // Inputs may arrive non-canonical (the raw mpq constructor does not
  // reduce); comparisons and gcd-based ops need lowest terms.
  Rat p = p_in, q = q_in;
  p.canonicalize();
  q.canonicalize();
  Rat w = p * p + 3 * q * q;
  Rat x = 1 - (p - 3 * q) * w;
  Rat y = (p + 3 * q) * w - 1;
  Rat z = p + 3 * q - w * w;
  Rat t = w * w - (p - 3 * q);
  return {x, y, z, t};
}

PowerQuadruple cubes_poly_quadruple(const Nat& n) {
  if (n < 3)
    throw std::invalid_argument("cubes_poly_quadruple: n must be >= 3");
  Nat n2 = n * n;
  Nat n3 = n2 * n;
  Nat x = n3 - n2 + 3 * n;
  Nat y = n3 + n2 + 3 * n;
  Nat z = n3 - 2 * n2 - 3;
  Nat t = n3 + 2 * n2 + 3;
  return PowerQuadruple::from_pairs(3, x, y, z, t);
}

PowerQuadruple cubes_short_interval(const Nat& N) {
  if (N < 1)
    throw std::invalid_argument("cubes_short_interval: N must be >= 1");
  Nat n = ceil_root(N, 3) + 1;
  if (n < 3) n = 3;
  // Minimum element is n^3 - 2n^2 - 3; bump n until it clears N. The bump
  // never exceeds ceil(N^(1/3)) + 2.
  while (n * n * n - 2 * n * n - 3 < N) ++n;
  return cubes_poly_quadruple(n);
}

ScaledCubesTrace cubes_scaled_quadruple(const Nat& N, unsigned index_cap) {
  if (N < 1)
    throw std::invalid_argument("cubes_scaled_quadruple: N must be >= 1");
  const Nat target = ceil_root(Nat(N * N), 3);  // ceil(N^(2/3))
  for (unsigned m = 0; m <= index_cap; ++m) {
    CubesPellTrace base = cubes_pell_quadruple(m);
    if (base.N < target) continue;
    ScaledCubesTrace tr;
    tr.m = m;
    tr.base_point = base.N;
    tr.factor = ceil_div(N, base.N);
    const Nat& k = tr.factor;
    tr.quadruple = PowerQuadruple::from_pairs(
        3, Nat(k * base.quadruple.x), Nat(k * base.quadruple.y),
        Nat(k * base.quadruple.z), Nat(k * base.quadruple.t));
    return tr;
  }
  throw std::invalid_argument(
      "cubes_scaled_quadruple: no chain index <= cap reaches ceil(N^(2/3))");
}

QuarticParams QuarticParams::from(const Rat& a_in, const Rat& b_in) {
  QuarticParams par;
  par.a = a_in;
  par.b = b_in;
  par.a.canonicalize();
  par.b.canonicalize();
  const Rat& a = par.a;
  const Rat& b = par.b;
  Rat b2 = b * b;
  if (b2 == 1)
    throw std::invalid_argument("euler_quartic: b^2 = 1 is degenerate");
  par.f = (3 * b2 - 1) / 2;
  par.g = (3 * b2 * b2 - 18 * b2 - 1) / (8 * (b2 - 1));
  Rat den = b2 + par.g * par.g;
  if (den == 0)
    throw std::invalid_argument("euler_quartic: b^2 + g^2 = 0 is degenerate");
  par.zpar = (b2 * (b2 - 4) - 2 * par.f * par.g) / den;
  const Rat& z = par.zpar;
  par.p = a * (b2 - 1 - z);
  par.q = a * b * (b2 - 1 + par.f * z + par.g * z * z);
  par.r = a * b * (1 + z) * (b2 - 1 - z);
  par.s = a * (b2 - 1 + par.f * z + par.g * z * z);
  return par;
}

std::array<Rat, 4> euler_quartic(const QuarticParams& par) {
  return {Rat(par.p + par.q), Rat(par.r - par.s), Rat(par.r + par.s),
          Rat(par.p - par.q)};
}

std::array<Int, 4> quartic_poly_values(const Nat& n) {
  // Degree-13 coefficient rows, leading coefficient first.
  static const long coeffs[4][14] = {
      {1, 14, 92, 370, 1002, 1908, 2611, 2609, 1944, 1101, 458, 115, 7, -1},
      {1, 12, 65, 204, 384, 360, -122, -867, -1266, -1023, -493, -135, -20,
       -3},
      {1, 12, 68, 246, 642, 1272, 1939, 2265, 1992, 1263, 530, 129, 19, 3},
      {1, 14, 89, 346, 924, 1776, 2470, 2423, 1578, 591, 59, -47, -20, -1},
  };
  std::array<Int, 4> out;
  for (int i = 0; i < 4; ++i) {
    Int acc = 0;
    for (int j = 0; j < 14; ++j) acc = acc * n + coeffs[i][j];
    out[i] = acc;
  }
  return out;
}

PowerQuadruple quartic_poly_quadruple(const Nat& n) {
  if (n < 2)
    throw std::invalid_argument("quartic_poly_quadruple: n must be >= 2");
  auto [a, b, c, d] = quartic_poly_values(n);
  // All four are positive for n >= 2; pairs are (A, B) and (C, D).
  return PowerQuadruple::from_pairs(4, a, b, c, d);
}

PowerQuadruple quartic_short_interval(const Nat& N) {
  if (N < 8192)
    throw std::invalid_argument("quartic_short_interval: N must be >= 2^13");
  Nat n = ceil_root(N, 13);
  if (n < 2) n = 2;
  for (;;) {
    auto vals = quartic_poly_values(n);
    Int mn = vals[0];
    for (const Int& v : vals)
      if (v < mn) mn = v;
    if (mn >= N) break;
    ++n;
  }
  return quartic_poly_quadruple(n);
}

}  // namespace sidon
