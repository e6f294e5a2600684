#include "hser/ratfunc.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hser {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::div_exact(num_, g);
    den_ = Poly::div_exact(den_, g);
  }
  normalize_scale();
}

RatFunc::RatFunc(Poly num, Poly den, coprime_tag) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  normalize_scale();
}

// Scale to joint-content-1 integer coefficients with the lowest-degree nonzero
// denominator coefficient positive.
void RatFunc::normalize_scale() {
  Int l = 1;
  for (const Rat& c : num_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  for (const Rat& c : den_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Int g = 0;
  auto acc = [&](const Poly& p) {
    for (const Rat& c : p.coeffs()) {
      if (c == 0) continue;
      Int v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  };
  acc(num_);
  acc(den_);
  Rat s(l, g);
  s.canonicalize();
  if (den_.coeff(den_.order()) < 0) s = -s;
  num_ = num_ * s;
  den_ = den_ * s;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // with both sides reduced, any common factor of the naive num/den divides
  // g = gcd(den_, o.den_), so one small gcd finishes the reduction
  Poly g = Poly::gcd(den_, o.den_);
  Poly da = g.degree() > 0 ? Poly::div_exact(den_, g) : den_;
  Poly db = g.degree() > 0 ? Poly::div_exact(o.den_, g) : o.den_;
  Poly num = num_ * db + o.num_ * da;
  if (num.is_zero()) return RatFunc();
  Poly den = den_ * db;
  if (g.degree() > 0) {
    Poly h = Poly::gcd(num, g);
    if (h.degree() > 0) {
      num = Poly::div_exact(num, h);
      den = Poly::div_exact(den, h);
    }
  }
  return RatFunc(std::move(num), std::move(den), coprime_tag{});
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? Poly::div_exact(num_, g1) : num_;
  Poly d2 = g1.degree() > 0 ? Poly::div_exact(o.den_, g1) : o.den_;
  Poly n2 = g2.degree() > 0 ? Poly::div_exact(o.num_, g2) : o.num_;
  Poly d1 = g2.degree() > 0 ? Poly::div_exact(den_, g2) : den_;
  return RatFunc(n1 * n2, d1 * d2, coprime_tag{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return *this * RatFunc(o.den_, o.num_);
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("pole at evaluation point");
  return num_.eval(x) / d;
}

std::vector<Rat> RatFunc::series(long N) const {
  if (den_.coeff(0) == 0) throw std::domain_error("not a power series at 0");
  std::vector<Rat> c(N + 1, Rat(0));
  const Rat& d0 = den_.coeff(0);
  for (long n = 0; n <= N; ++n) {
    Rat v = num_.coeff(n);
    for (long k = 1; k <= std::min<long>(n, den_.degree()); ++k)
      v -= den_.coeff(k) * c[n - k];
    c[n] = v / d0;
  }
  return c;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  if (den_ == Poly::one()) {
    out << num_.str(var);
  } else {
    out << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
  }
  return out.str();
}

LaurentExpansion laurent_at_one(const RatFunc& f, long order) {
  if (f.is_zero()) throw std::domain_error("Laurent expansion of zero");
  Poly nu = f.num().at_one_minus();
  Poly du = f.den().at_one_minus();
  long on = nu.order(), od = du.order();
  nu = nu.unshifted(on);
  du = du.unshifted(od);
  long pole = od - on;  // negative means a zero at t = 1
  LaurentExpansion le;
  le.pole_order = pole > 0 ? pole : 0;
  long zeros = pole < 0 ? -pole : 0;
  long need = order - zeros;
  std::vector<Rat> s =
      need >= 0 ? RatFunc(std::move(nu), std::move(du)).series(need) : std::vector<Rat>{};
  le.coefficients.assign(zeros, Rat(0));
  for (const Rat& c : s) le.coefficients.push_back(c);
  le.coefficients.resize(order + 1, Rat(0));
  return le;
}

bool functional_eq_check(const RatFunc& f, long d) {
  if (f.is_zero()) throw std::domain_error("functional equation check on zero");
  long dn = f.num().degree(), dd = f.den().degree();
  // f(1/t) = t^(dd-dn) rev(num)/rev(den)
  Poly rn = f.num().reversed(dn), rd = f.den().reversed(dd);
  long shift = dd - dn;
  RatFunc lhs = shift >= 0 ? RatFunc(rn.shifted(shift), rd) : RatFunc(rn, rd.shifted(-shift));
  Rat sign = (d % 2 == 0) ? Rat(1) : Rat(-1);
  RatFunc rhs = d >= 0 ? RatFunc(f.num().shifted(d) * sign, f.den())
                       : RatFunc(f.num() * sign, f.den().shifted(-d));
  return lhs == rhs;
}

namespace {

// Res_z(den(z), z^a - t) as a polynomial in t, by evaluation at deg(den)+1
// points and Lagrange interpolation; this is a denominator multiple of the
// multisection without ever touching roots of unity.
Poly multisection_denominator(const Poly& den, long a) {
  long m = den.degree();
  if (m == 0) return Poly::one();
  // numeric resultant via the Euclidean algorithm over Q, using
  // Res(f,g) = (-1)^(df*dg) lc(g)^(df-dr) Res(g, f mod g)
  auto resultant_at = [&](const Rat& t0) -> Rat {
    std::vector<Rat> f(den.coeffs());
    std::vector<Rat> g(a + 1, Rat(0));
    g[0] = -t0;
    g[a] = 1;
    Rat res = 1;
    while (true) {
      long df = static_cast<long>(f.size()) - 1, dg = static_cast<long>(g.size()) - 1;
      if (dg == 0) {
        for (long i = 0; i < df; ++i) res *= g[0];
        return res;
      }
      std::vector<Rat> r = f;
      const Rat lg = g.back();
      for (long k = df - dg; k >= 0; --k) {
        Rat c = r[k + dg] / lg;
        if (c == 0) continue;
        for (long i = 0; i <= dg; ++i) r[k + i] -= c * g[i];
      }
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (r.empty()) return Rat(0);
      long dr = static_cast<long>(r.size()) - 1;
      for (long i = 0; i < df - dr; ++i) res *= lg;
      if ((df % 2) && (dg % 2)) res = -res;
      f = std::move(g);
      g = std::move(r);
    }
  };
  std::vector<Rat> xs, ys;
  for (long j = 0; xs.size() < static_cast<size_t>(m + 1); ++j) {
    Rat t0(j);
    xs.push_back(t0);
    ys.push_back(resultant_at(t0));
  }
  // Lagrange interpolation
  Poly result;
  for (long i = 0; i <= m; ++i) {
    Poly basis = Poly::one();
    Rat denom = 1;
    for (long j = 0; j <= m; ++j) {
      if (j == i) continue;
      basis = basis * Poly(std::vector<Rat>{-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    result = result + basis * (ys[i] / denom);
  }
  return result;
}

}  // namespace

RatFunc u_a(const RatFunc& f, long a) {
  if (a < 1) throw std::domain_error("u_a requires a >= 1");
  if (f.is_zero()) return RatFunc();
  if (a == 1) return f;
  Poly dm = multisection_denominator(f.den(), a);
  long degD = dm.degree();
  long bound = degD + std::max(f.num().degree(), f.den().degree()) / a + 2;
  std::vector<Rat> c = f.series((bound + degD) * a);
  std::vector<Rat> sub;
  sub.reserve(bound + degD + 1);
  for (long n = 0; n <= bound + degD; ++n) sub.push_back(c[n * a]);
  // num = (multisected series) * dm, truncated; must in fact terminate
  std::vector<Rat> numc(bound + degD + 1, Rat(0));
  for (long i = 0; i <= degD; ++i) {
    if (dm.coeff(i) == 0) continue;
    for (long j = 0; i + j <= bound + degD; ++j) numc[i + j] += dm.coeff(i) * sub[j];
  }
  for (long k = bound + 1; k <= bound + degD; ++k)
    if (numc[k] != 0) throw std::runtime_error("multisection reconstruction failed");
  numc.resize(bound + 1);
  return RatFunc(Poly(std::move(numc)), dm);
}

}  // namespace hser
