#include "hser/render.hpp"

#include <sstream>
#include <stdexcept>

namespace hser {

std::string render_palindromic(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no degree");
  long n = p.degree();
  if (!(p.reversed(n) == p)) throw std::invalid_argument("polynomial is not palindromic");
  std::ostringstream out;
  out << "{";
  for (long i = 0; i <= n / 2; ++i) {
    if (i) out << ", ";
    out << rat_str(p.coeff(i));
  }
  out << "; " << n << "}";
  return out.str();
}

std::string coeff_list(const Poly& p) {
  std::ostringstream out;
  const auto& c = p.coeffs();
  if (c.empty()) return "0";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out << " ";
    out << rat_str(c[i]);
  }
  return out.str();
}

namespace {

std::string latex_poly(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i <= p.degree(); ++i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0 || !unit) {
      if (a.get_den() == 1)
        out << a.get_num().get_str();
      else
        out << "\\tfrac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
    }
    if (i > 0) {
      out << var;
      if (i > 1) out << "^{" << i << "}";
    }
  }
  return out.str();
}

}  // namespace

std::string latex(const RatFunc& f, const std::string& var) {
  if (f.is_zero()) return "0";
  if (f.den() == Poly::one()) return latex_poly(f.num(), var);
  return "\\frac{" + latex_poly(f.num(), var) + "}{" + latex_poly(f.den(), var) + "}";
}

}  // namespace hser
