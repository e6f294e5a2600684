#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hser {

// Arbitrary-precision integers and rationals.  mpq_class already maintains the
// canonical form we need (coprime, positive denominator), so BigRational is an
// alias rather than a wrapper.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "p" or "p/q"
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

}  // namespace hser
