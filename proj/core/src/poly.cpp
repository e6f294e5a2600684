#include "hser/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hser {

namespace {

const Rat kZero = 0;

// ---- integer-polynomial helpers (used by the gcd machinery) ----

using ZPoly = std::vector<Int>;  // dense, trailing entry nonzero unless empty

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

Int zcontent(const ZPoly& p) {
  Int g = 0;
  for (const Int& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zdiv_scalar(ZPoly& p, const Int& s) {
  for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
}

ZPoly zprimitive(ZPoly p) {
  Int g = zcontent(p);
  if (g > 1) zdiv_scalar(p, g);
  if (!p.empty() && p.back() < 0)
    for (Int& c : p) c = -c;
  return p;
}

// exact division in Z[t]; returns false (and leaves q unspecified) if b does
// not divide a over Z
bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) {
    q.clear();
    return true;
  }
  if (zdeg(a) < zdeg(b)) return false;
  ZPoly r = a;
  q.assign(a.size() - b.size() + 1, Int(0));
  const Int& lb = b.back();
  for (long k = zdeg(a) - zdeg(b); k >= 0; --k) {
    Int& top = r[k + zdeg(b)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Int c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
  }
  for (const Int& c : r)
    if (c != 0) return false;
  return true;
}

Int zeval(const ZPoly& p, const Int& x) {
  Int v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Int zmaxabs(const ZPoly& p) {
  Int m = 0;
  for (const Int& c : p) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

// symmetric remainder in (-xi/2, xi/2]
Int zmods(const Int& v, const Int& xi) {
  Int r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
  if (2 * r > xi) r -= xi;
  return r;
}

// Heuristic gcd (evaluate at a large point, reconstruct balanced digits,
// certify by exact division).  Returns false if no candidate verified.
bool zgcd_heuristic(const ZPoly& a, const ZPoly& b, ZPoly& g) {
  Int xi = 2 * std::min(zmaxabs(a), zmaxabs(b)) + 2;
  for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 4 + 3) {
    Int ga = zeval(a, xi), gb = zeval(b, xi), gv;
    mpz_gcd(gv.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    ZPoly h;
    while (gv != 0) {
      Int d = zmods(gv, xi);
      h.push_back(d);
      gv = (gv - d) / xi;
    }
    ztrim(h);
    if (h.empty()) continue;
    h = zprimitive(std::move(h));
    ZPoly q;
    if (zdivide_exact(a, h, q) && zdivide_exact(b, h, q)) {
      g = std::move(h);
      return true;
    }
  }
  return false;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const Int& lb = b.back();
  long e = zdeg(a) - zdeg(b) + 1;
  while (!a.empty() && zdeg(a) >= zdeg(b)) {
    Int top = a.back();
    long k = zdeg(a) - zdeg(b);
    for (Int& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= top * b[i];
    ztrim(a);
    --e;
  }
  for (; e > 0; --e)
    for (Int& c : a) c *= lb;
  return a;
}

// subresultant PRS; unconditional fallback
ZPoly zgcd_subresultant(ZPoly a, ZPoly b) {
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  Int g = 1, h = 1;
  while (true) {
    long delta = zdeg(a) - zdeg(b);
    ZPoly r = zprem(a, b);
    if (r.empty()) return zprimitive(std::move(b));
    if (zdeg(r) == 0) return {Int(1)};
    a = std::move(b);
    Int divisor = g;
    for (long i = 0; i < delta; ++i) divisor *= h;
    zdiv_scalar(r, divisor);
    b = std::move(r);
    g = abs(a.back());
    // h = g^delta / h^(delta-1)
    if (delta > 0) {
      Int gn = 1;
      for (long i = 0; i < delta; ++i) gn *= g;
      for (long i = 0; i < delta - 1; ++i)
        mpz_divexact(gn.get_mpz_t(), gn.get_mpz_t(), h.get_mpz_t());
      h = gn;
    }
  }
}

// clear denominators: p = zp / scale with zp primitive-free integer poly
ZPoly to_int(const Poly& p, Int& scale) {
  scale = 1;
  for (const Rat& c : p.coeffs())
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) z.push_back(Int(c.get_num() * (scale / c.get_den())));
  return z;
}

Poly from_int(const ZPoly& z) {
  std::vector<Rat> c;
  c.reserve(z.size());
  for (const Int& v : z) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, long k) {
  if (c == 0) return Poly();
  std::vector<Rat> v(k + 1, kZero);
  v[k] = c;
  Poly p;
  p.c_ = std::move(v);
  return p;
}

long Poly::order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<long>(i);
  return -1;
}

const Rat& Poly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
  return c_[k];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), kZero);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Rat& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (Rat& c : r.c_) c *= s;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  q = Poly();
  r = a;
  if (a.degree() < b.degree()) return;
  q.c_.assign(a.degree() - b.degree() + 1, kZero);
  const Rat& lb = b.leading();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    Rat c = r.coeff(k + b.degree()) / lb;
    if (c == 0) continue;
    q.c_[k] = c;
    for (long i = 0; i <= b.degree(); ++i) r.c_[k + i] -= c * b.c_[i];
  }
  q.trim();
  r.trim();
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero() || b.is_zero()) {
    const Poly& p = a.is_zero() ? b : a;
    return p * (Rat(1) / p.leading());
  }
  if (a.degree() == 0 || b.degree() == 0) return Poly::one();
  Int s;
  ZPoly za = zprimitive(to_int(a, s)), zb = zprimitive(to_int(b, s));
  ZPoly g;
  if (!zgcd_heuristic(za, zb, g)) g = zgcd_subresultant(za, zb);
  Poly r = from_int(g);
  return r * (Rat(1) / r.leading());
}

Poly Poly::xgcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
  // classical extended Euclid over Q; only used at small degrees
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(), u1, v0, v1 = Poly::one();
  while (!r1.is_zero()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (r0.is_zero()) {
    u = Poly();
    v = Poly();
    return Poly();
  }
  Rat s = Rat(1) / r0.leading();
  u = u0 * s;
  v = v0 * s;
  return r0 * s;
}

Rat Poly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly Poly::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(c_.size() + k, kZero);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Poly Poly::unshifted(long k) const {
  if (is_zero() || k == 0) return *this;
  if (order() < k) throw std::domain_error("unshift below order");
  Poly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Poly Poly::reversed(long n) const {
  if (n < degree()) throw std::domain_error("reversal degree below degree");
  Poly r;
  r.c_.assign(n + 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
  r.trim();
  return r;
}

Poly Poly::at_one_minus() const {
  Poly r;
  Poly lin(std::vector<Rat>{Rat(1), Rat(-1)});  // 1 - u
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0 || !unit) out << rat_str(a);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace hser
