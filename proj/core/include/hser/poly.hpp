#pragma once

#include <string>
#include <vector>

#include "hser/rational.hpp"

namespace hser {

// Dense univariate polynomial over Q.  Coefficient index = exponent; the
// highest-index coefficient is nonzero unless the polynomial is zero (empty
// vector).  Degrees stay in the hundreds for everything we compute, so dense
// storage wins over sparse bookkeeping.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit Poly(long c) : Poly(Rat(c)) {}
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const Rat& c, long k);
  static Poly one() { return Poly(1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 if zero
  // lowest exponent with nonzero coefficient; -1 for the zero polynomial
  long order() const;
  const Rat& coeff(long k) const;
  const Rat& leading() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // q,r with a = q*b + r, deg r < deg b.  Throws on zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // exact quotient; throws if the division leaves a remainder
  static Poly div_exact(const Poly& a, const Poly& b);
  // monic gcd
  static Poly gcd(const Poly& a, const Poly& b);
  // monic g = u*a + v*b
  static Poly xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v);

  Rat eval(const Rat& x) const;
  // multiply by t^k
  Poly shifted(long k) const;
  // divide by t^k (requires the low k coefficients to vanish)
  Poly unshifted(long k) const;
  // t^n * p(1/t); requires n >= degree
  Poly reversed(long n) const;
  bool is_palindromic() const { return !is_zero() && reversed(degree()) == *this; }
  // p(1 - u) as a polynomial in u
  Poly at_one_minus() const;

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rat> c_;
  void trim();
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

}  // namespace hser
