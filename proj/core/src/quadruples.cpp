#include "sidon/quadruples.hpp"

#include <algorithm>
#include <tuple>

namespace sidon {

PowerQuadruple PowerQuadruple::from_pairs(int k, const Nat& a1, const Nat& a2,
                                          const Nat& b1, const Nat& b2) {
  PowerQuadruple q;
  q.k = k;
  const Nat* ahi = &a1;
  const Nat* alo = &a2;
  if (*ahi < *alo) std::swap(ahi, alo);
  const Nat* bhi = &b1;
  const Nat* blo = &b2;
  if (*bhi < *blo) std::swap(bhi, blo);
  if (a1 + a2 >= b1 + b2) {
    q.x = *ahi;
    q.y = *alo;
    q.z = *bhi;
    q.t = *blo;
  } else {
    q.x = *bhi;
    q.y = *blo;
    q.z = *ahi;
    q.t = *alo;
  }
  return q;
}

bool PowerQuadruple::identity_holds() const {
  if (k < 1) return false;
  return ipow(x, k) + ipow(y, k) == ipow(z, k) + ipow(t, k);
}

bool PowerQuadruple::non_trivial() const { return !(x == z && y == t); }

bool PowerQuadruple::normalized() const {
  return x >= y && z >= t && x + y >= z + t;
}

bool PowerQuadruple::valid() const {
  return identity_holds() && non_trivial() && normalized();
}

Nat PowerQuadruple::power_sum() const { return ipow(x, k) + ipow(y, k); }

const Nat& PowerQuadruple::max_element() const {
  // normalized: x >= y and z >= t
  return x >= z ? x : z;
}

const Nat& PowerQuadruple::min_element() const {
  return y <= t ? y : t;
}

std::string PowerQuadruple::to_string() const {
  return "(" + x.get_str() + ", " + y.get_str() + ", " + z.get_str() + ", " +
         t.get_str() + ")";
}

bool quadruple_less(const PowerQuadruple& a, const PowerQuadruple& b) {
  Nat sa = a.power_sum();
  Nat sb = b.power_sum();
  if (sa != sb) return sa < sb;
  return std::tie(a.x, a.y, a.z, a.t) < std::tie(b.x, b.y, b.z, b.t);
}

}  // namespace sidon
