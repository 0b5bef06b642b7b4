#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sidon/numeric.hpp"

namespace sidon {

// One point on the hyperbola D^2 - 19 B^2 = 254, indexed along the chain
// generated from the seed (27, 5) by the unit (170, 39) of u^2 - 19 v^2 = 1.
struct PellSolution {
  unsigned m = 0;
  Nat D;
  Nat B;

  bool satisfies_norm() const;  // D^2 - 19 B^2 == 254, both odd
};

PellSolution pell_seed();                      // (m=0, D=27, B=5)
PellSolution pell_next(const PellSolution&);   // multiply by the unit
PellSolution pell_at(unsigned m);              // m-fold pell_next of the seed

// The hard-coded unit (u, v) = (170, 39) driving pell_next.
std::pair<unsigned long, unsigned long> pell_unit();

// The family a X^2 - (a+18) Y^2 = 2a^2 + 36a + 216 over same-parity X, Y.
struct GenPellInstance {
  unsigned long a = 1;  // must be >= 1

  Nat rhs() const;  // 2a^2 + 36a + 216
};

// All pairs 0 <= Y <= X <= bound satisfying the instance, found by scanning Y
// and exact-square-testing the solved-for X^2. Sorted by Y.
std::vector<std::pair<Nat, Nat>> gen_pell_solutions_bounded(
    const GenPellInstance& inst, const Nat& bound);

// Smallest modulus q <= modulus_limit at which the instance has no solution
// over residue pairs, or nullopt if every modulus admits one. A returned
// modulus certifies the equation has no integer solutions at all.
std::optional<unsigned> local_obstruction(const GenPellInstance& inst,
                                          unsigned modulus_limit);

}  // namespace sidon
