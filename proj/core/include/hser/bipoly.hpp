#pragma once

#include <vector>

#include "hser/poly.hpp"

namespace hser {

// Polynomial in z whose coefficients are polynomials in the series variable.
// Dense in z; leading z-coefficient nonzero unless the whole thing is zero.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Poly p) {
    if (!p.is_zero()) c_.push_back(std::move(p));
  }
  static BiPoly z_monomial(Poly coeff, long k) {
    BiPoly b;
    if (coeff.is_zero()) return b;
    b.c_.assign(k + 1, Poly());
    b.c_[k] = std::move(coeff);
    return b;
  }

  bool is_zero() const { return c_.empty(); }
  long z_degree() const { return static_cast<long>(c_.size()) - 1; }
  const Poly& z_coeff(long k) const {
    static const Poly kZero;
    if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
    return c_[k];
  }

  BiPoly operator+(const BiPoly& o) const {
    BiPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.trim();
    return r;
  }

  BiPoly operator*(const BiPoly& o) const {
    BiPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Poly());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        if (!o.c_[j].is_zero()) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
  }

  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

 private:
  std::vector<Poly> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

}  // namespace hser
