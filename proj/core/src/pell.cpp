#include "sidon/pell.hpp"

namespace sidon {

bool PellSolution::satisfies_norm() const {
  if (D <= 0 || B <= 0) return false;
  if (!is_odd(D) || !is_odd(B)) return false;
  return D * D - 19 * B * B == 254;
}

PellSolution pell_seed() { return PellSolution{0, Nat(27), Nat(5)}; }

PellSolution pell_next(const PellSolution& s) {
  // (D + B sqrt(19)) * (170 + 39 sqrt(19)); 19 * 39 = 741.
  PellSolution out;
  out.m = s.m + 1;
  out.D = 170 * s.D + 741 * s.B;
  out.B = 39 * s.D + 170 * s.B;
  return out;
}

PellSolution pell_at(unsigned m) {
  PellSolution s = pell_seed();
  for (unsigned i = 0; i < m; ++i) s = pell_next(s);
  return s;
}

std::pair<unsigned long, unsigned long> pell_unit() { return {170ul, 39ul}; }

Nat GenPellInstance::rhs() const {
  Nat av(a);
  return 2 * av * av + 36 * av + 216;
}

std::vector<std::pair<Nat, Nat>> gen_pell_solutions_bounded(
    const GenPellInstance& inst, const Nat& bound) {
  if (inst.a < 1) throw std::invalid_argument("gen_pell: a must be >= 1");
  if (bound < 1) throw std::invalid_argument("gen_pell: bound must be >= 1");
  std::vector<std::pair<Nat, Nat>> out;
  const Nat rhs = inst.rhs();
  const Nat coef(inst.a + 18);
  for (Nat y = 0; y <= bound; ++y) {
    Nat num = rhs + coef * y * y;  // a X^2
    if (num % inst.a != 0) continue;
    Nat x2 = num / inst.a;
    Nat x = isqrt(x2);
    if (x * x != x2) continue;
    if (x > bound) continue;        // x >= y is automatic here
    if (is_odd(x) != is_odd(y)) continue;
    out.emplace_back(x, y);
  }
  return out;
}

std::optional<unsigned> local_obstruction(const GenPellInstance& inst,
                                          unsigned modulus_limit) {
  if (inst.a < 1) throw std::invalid_argument("local_obstruction: a >= 1");
  if (modulus_limit < 2)
    throw std::invalid_argument("local_obstruction: limit must be >= 2");
  const Nat rhs = inst.rhs();
  for (unsigned q = 2; q <= modulus_limit; ++q) {
    const unsigned long rq = mpz_fdiv_ui(rhs.get_mpz_t(), q);
    const unsigned long aq = inst.a % q;
    const unsigned long bq = (inst.a + 18) % q;
    // Squares mod q, then all residue pairs.
    std::vector<char> is_sq(q, 0);
    for (unsigned x = 0; x < q; ++x)
      is_sq[static_cast<unsigned>((1ull * x * x) % q)] = 1;
    const unsigned long neg_bq = (q - bq % q) % q;
    bool solvable = false;
    for (unsigned x2 = 0; x2 < q && !solvable; ++x2) {
      if (!is_sq[x2]) continue;
      for (unsigned y2 = 0; y2 < q; ++y2) {
        if (!is_sq[y2]) continue;
        if ((aq * x2 + neg_bq * y2) % q == rq) {
          solvable = true;
          break;
        }
      }
    }
    if (!solvable) return q;
  }
  return std::nullopt;
}

}  // namespace sidon
