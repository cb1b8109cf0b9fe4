#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rrps {

// Canonical string form of a rational: "n" or "n/d" with d > 0, gcd(n,d) = 1.
inline std::string rat_str(const mpq_class &q) { return q.get_str(); }

// Parse a rational from its string form.  Accepts anything mpq accepts and
// canonicalizes, so "2/4" reads back as 1/2.  Throws std::invalid_argument on
// garbage (mpq_class's string ctor does).
inline mpq_class rat_parse(const std::string &s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

// mpq_class(n, d) does not reduce; this does.
inline mpq_class rat(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpq_class rat_pow(const mpq_class &base, unsigned long e) {
  mpq_class r(1);
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

// Floor division for possibly negative numerators (C++ / truncates toward 0).
inline int floor_div(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace rrps
