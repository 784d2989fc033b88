#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace casc {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "p" / "p/q" form, q > 0, gcd(p,q) = 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) {
  if (!is_integral(q)) throw std::logic_error("rational is not an integer: " + rat_str(q));
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer out of long range");
  return q.get_num().get_si();
}

using RatVec = std::vector<Rat>;

inline RatVec rvec(size_t n) { return RatVec(n, Rat(0)); }

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline RatVec operator*(const Rat& c, const RatVec& v) {
  RatVec r(v);
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace casc
