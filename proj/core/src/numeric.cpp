#include "sidon/numeric.hpp"

#include <cctype>
#include <limits>

namespace sidon {

Nat isqrt(const Nat& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  Nat r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Nat iroot(const Nat& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("iroot: negative argument");
  if (k == 0) throw std::invalid_argument("iroot: k must be >= 1");
  Nat r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Nat ipow(const Nat& base, unsigned exp) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Nat monus(const Nat& a, const Nat& b) {
  if (a <= b) return 0;
  return Nat(a - b);
}

bool is_odd(const Nat& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

Int parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_int: empty string");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw std::invalid_argument("parse_int: no digits in '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("parse_int: bad integer '" + text + "'");
  return Int(text, 10);
}

Nat parse_nat(const std::string& text) {
  Int v = parse_int(text);
  if (v < 0)
    throw std::invalid_argument("parse_nat: negative value '" + text + "'");
  return v;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  return make_rat(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool fits_u64(const Nat& n) {
  if (n < 0) return false;
  return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Nat& n) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  if (!fits_u64(n)) throw std::overflow_error("to_u64: value out of range");
  return mpz_get_ui(n.get_mpz_t());
}

std::uint64_t u64_power_limit(int k) {
  const unsigned __int128 cap = (~static_cast<unsigned __int128>(0)) >> 65;
  // cap = floor((2^64 - 1) / 2) expressed in 128 bits, i.e. 2^63 - 1.
  std::uint64_t n = 1;
  auto pw = [&](std::uint64_t v) {
    unsigned __int128 p = 1;
    for (int i = 0; i < k; ++i) p *= v;
    return p;
  };
  // Double then binary-refine; k is tiny so this is instant.
  while (pw(n * 2) <= cap) n *= 2;
  std::uint64_t step = n / 2;
  while (step > 0) {
    if (pw(n + step) <= cap) n += step;
    step /= 2;
  }
  return n;
}

std::string fixed_point_root(const Nat& num, const Nat& den, unsigned root,
                             unsigned digits) {
  if (den <= 0) throw std::invalid_argument("fixed_point_root: den <= 0");
  if (num < 0) throw std::invalid_argument("fixed_point_root: num < 0");
  // floor((10^(digits*root) * num / den)^(1/root))
  Nat scale = ipow(10, digits * root);
  Nat scaled = scale * num / den;
  Nat r = iroot(scaled, root);
  Nat base = ipow(10, digits);
  Nat whole = r / base;
  Nat frac = r % base;
  std::string f = frac.get_str();
  f.insert(f.begin(), digits - f.size(), '0');
  return whole.get_str() + "." + f;
}

std::uint64_t Rng::uniform_u64(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_u64: empty range");
  std::uint64_t range = hi - lo;  // inclusive width - 1
  if (range == std::numeric_limits<std::uint64_t>::max()) return next();
  ++range;
  std::uint64_t reject_above =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  for (;;) {
    std::uint64_t draw = next();
    if (draw <= reject_above) return lo + draw % range;
  }
}

std::int64_t Rng::uniform_i64(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_i64: empty range");
  std::uint64_t width = static_cast<std::uint64_t>(hi) -
                        static_cast<std::uint64_t>(lo);
  std::uint64_t draw = uniform_u64(0, width);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw);
}

Nat Rng::uniform_nat(const Nat& lo, const Nat& hi) {
  if (lo > hi) throw std::invalid_argument("uniform_nat: empty range");
  Nat width = hi - lo;  // draws uniform in [0, width]
  if (fits_u64(width)) return Nat(lo + Nat(uniform_u64(0, to_u64(width))));
  const std::size_t bits = mpz_sizeinbase(width.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    Nat v = 0;
    for (std::size_t i = 0; i < words; ++i) {
      v <<= 64;
      v += Nat(next());
    }
    v >>= (words * 64 - bits);  // keep exactly `bits` random bits
    if (v <= width) return Nat(lo + v);
  }
}

}  // namespace sidon
