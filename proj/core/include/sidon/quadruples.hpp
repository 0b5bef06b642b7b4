#pragma once

#include <compare>
#include <string>

#include "sidon/numeric.hpp"

namespace sidon {

// A witness (k; x,y,z,t) of x^k + y^k = z^k + t^k with {x,y} != {z,t},
// normalized so that x >= y, z >= t and x+y >= z+t. For a non-trivial
// quadruple of equal k-th power sums the pair sums always differ, so the
// normalization is unambiguous.
struct PowerQuadruple {
  int k = 0;
  Nat x, y, z, t;

  // Builds the normalized quadruple from two unordered pairs.
  static PowerQuadruple from_pairs(int k, const Nat& a1, const Nat& a2,
                                   const Nat& b1, const Nat& b2);

  bool identity_holds() const;  // x^k + y^k == z^k + t^k, exactly
  bool non_trivial() const;     // {x,y} != {z,t}
  bool normalized() const;
  bool valid() const;  // all of the above

  Nat power_sum() const;  // x^k + y^k
  const Nat& max_element() const;
  const Nat& min_element() const;

  std::string to_string() const;  // "(x, y, z, t)"

  friend bool operator==(const PowerQuadruple&,
                         const PowerQuadruple&) = default;
};

// Orders by (power sum, x, y, z, t); used to keep witness lists stable.
bool quadruple_less(const PowerQuadruple& a, const PowerQuadruple& b);

}  // namespace sidon
