#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pie2d {

using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PIE2D_CHECK(cond, msg)                                  \
  do {                                                          \
    if (!(cond)) throw ::pie2d::Error(std::string("pie2d: ") + (msg)); \
  } while (0)

inline double to_double(const Rat& r) { return r.get_d(); }

// mpq_class(n, d) stores the pair as-is; this canonicalizes.
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat r(1);
  Rat b = base;
  unsigned k = e;
  while (k > 0) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1u;
  }
  return r;
}

// Parses "3", "-1/2", "0.25", "1e-3" into an exact rational.
Rat parse_rat(const std::string& s);

std::string rat_to_string(const Rat& r);

}  // namespace pie2d
