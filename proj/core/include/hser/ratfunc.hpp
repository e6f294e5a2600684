#pragma once

#include <string>
#include <vector>

#include "hser/poly.hpp"

namespace hser {

// Reduced fraction of integer-coefficient polynomials.  Canonical form:
// gcd(num, den) = 1, both have integer coefficients of joint content 1, and
// the lowest-degree nonzero coefficient of den is positive.  Equality of
// values is then structural equality.
class RatFunc {
 public:
  RatFunc() : den_(Poly::one()) {}                  // zero
  explicit RatFunc(const Rat& c) : RatFunc(Poly(c), Poly::one()) {}
  explicit RatFunc(long c) : RatFunc(Rat(c)) {}
  explicit RatFunc(Poly p) : RatFunc(std::move(p), Poly::one()) {}
  RatFunc(Poly num, Poly den);                      // reduces; throws on den = 0

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;        // throws on zero divisor
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  Rat eval(const Rat& x) const;                     // throws if den(x) = 0

  // Maclaurin coefficients c_0..c_N; requires den(0) != 0.
  std::vector<Rat> series(long N) const;

  std::string str(const std::string& var = "t") const;

 private:
  Poly num_, den_;
  struct coprime_tag {};
  RatFunc(Poly num, Poly den, coprime_tag);         // skips the gcd step
  void normalize_scale();
};

// Laurent data of f at t = 1: coefficients[m] multiplies (1-t)^(m - pole_order).
struct LaurentExpansion {
  long pole_order = 0;
  std::vector<Rat> coefficients;
};

// Expand f around t = 1 (order + 1 coefficients, leading first).  Clears the
// common power of (1-t) by exact division first; no limits involved.
LaurentExpansion laurent_at_one(const RatFunc& f, long order);

// true iff f(1/t) = (-t)^d f(t) identically
bool functional_eq_check(const RatFunc& f, long d);

// Multisection: the rational function whose n-th series coefficient is the
// (n*a)-th coefficient of f.  Reconstructs num/den against the certified
// denominator multiple Res_z(den(z), z^a - t), so no root-of-unity arithmetic.
RatFunc u_a(const RatFunc& f, long a);

}  // namespace hser
