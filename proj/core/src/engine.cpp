#include "hser/engine.hpp"

#include <numeric>
#include <stdexcept>

#include "hser/cache.hpp"

namespace hser {

namespace {

// ---------------------------------------------------------------------------
// Fraction-free local-ring arithmetic.
//
// One partial-fraction block of the integrand density lives in
// Q(t)[z] / (z^a - t)^m, written in the basis { z^c u^i : c < a, i < m } with
// u = z^a - t (so z^a = t + u, u^m = 0).  Everything below keeps the digits
// polynomial in t and carries an explicit scalar denominator instead of
// reducing rational functions at every step — reduction of intermediate
// fractions is what dominates the runtime otherwise.
// ---------------------------------------------------------------------------

using PZ = std::vector<Poly>;  // dense in z, Poly coefficients in t

void pz_trim(PZ& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long pz_deg(const PZ& p) { return static_cast<long>(p.size()) - 1; }

struct PRing {
  long a, m;
};

struct PElem {
  std::vector<PZ> digit;  // digit[i]: z-degree < a
};

PElem pel_zero(const PRing& R) { return PElem{std::vector<PZ>(R.m)}; }

PElem pel_one(const PRing& R) {
  PElem x = pel_zero(R);
  x.digit[0] = {Poly::one()};
  return x;
}

// fold an arbitrary-degree z-polynomial into digits via z^a -> t + u
PElem pel_from_pz(const PRing& R, PZ p) {
  PElem x = pel_zero(R);
  for (long level = 0; level < R.m && !p.empty(); ++level) {
    PZ carry;
    while (pz_deg(p) >= R.a) {
      long e = pz_deg(p);
      Poly c = p.back();
      p.pop_back();
      pz_trim(p);
      if (static_cast<long>(p.size()) < e - R.a + 1) p.resize(e - R.a + 1);
      if (static_cast<long>(carry.size()) < e - R.a + 1) carry.resize(e - R.a + 1);
      p[e - R.a] = p[e - R.a] + c.shifted(1);  // + t*c
      carry[e - R.a] = carry[e - R.a] + c;
      pz_trim(p);
      pz_trim(carry);
    }
    x.digit[level] = std::move(p);
    p = std::move(carry);
  }
  return x;
}

PElem pel_mul(const PRing& R, const PElem& x, const PElem& y) {
  PElem r = pel_zero(R);
  auto bump = [&](PZ& d, long e, const Poly& v) {
    if (static_cast<long>(d.size()) < e + 1) d.resize(e + 1);
    d[e] = d[e] + v;
  };
  for (long i = 0; i < R.m; ++i) {
    if (x.digit[i].empty()) continue;
    for (long j = 0; i + j < R.m; ++j) {
      if (y.digit[j].empty()) continue;
      // z-degree of the product is <= 2a-2, so one carry level suffices
      for (long p = 0; p <= pz_deg(x.digit[i]); ++p) {
        if (x.digit[i][p].is_zero()) continue;
        for (long q = 0; q <= pz_deg(y.digit[j]); ++q) {
          if (y.digit[j][q].is_zero()) continue;
          Poly prod = x.digit[i][p] * y.digit[j][q];
          long e = p + q;
          if (e < R.a) {
            bump(r.digit[i + j], e, prod);
          } else {
            bump(r.digit[i + j], e - R.a, prod.shifted(1));
            if (i + j + 1 < R.m) bump(r.digit[i + j + 1], e - R.a, prod);
          }
        }
      }
    }
  }
  for (PZ& d : r.digit) pz_trim(d);
  return r;
}

// z^p = z^(p mod a) (t + u)^(p div a)
PElem pel_z_power(const PRing& R, long p) {
  long q = p / R.a, c = p % R.a;
  PElem x = pel_zero(R);
  Rat binom = 1;
  for (long i = 0; i < R.m && i <= q; ++i) {
    PZ d(c + 1);
    d[c] = Poly::monomial(binom, q - i);
    x.digit[i] = std::move(d);
    binom *= rat(q - i, i + 1);
  }
  return x;
}

// Extended subresultant PRS for A against B = z^a - t: returns (u, r) with
// u*A = r mod B, r a nonzero polynomial in t alone.  The beta-divisions are
// exact for the cofactor row too (both rows are determinant polynomials), so
// no rational coefficients ever appear.
std::pair<PZ, Poly> pz_inverse_cofactor(const PRing& R, const PZ& A) {
  PZ B(R.a + 1);
  B[0] = Poly(std::vector<Rat>{0, -1});
  B[R.a] = Poly::one();

  PZ r0 = B, r1 = A;
  PZ u0, u1{Poly::one()};  // invariant: r_i = u_i * A  (mod B)
  Poly g = Poly::one(), h = Poly::one();
  bool first = true;
  while (true) {
    if (r1.empty()) throw std::runtime_error("inside factor not invertible");  // cannot happen
    if (pz_deg(r1) == 0) {
      if (r1[0].is_zero()) throw std::runtime_error("inside factor not invertible");
      return {u1, r1[0]};
    }
    long delta = pz_deg(r0) - pz_deg(r1);
    const Poly lc = r1.back();
    // pseudo-division of (r0, u0) by (r1, u1), multiplying through by lc
    PZ Rr = r0, Ru = u0;
    long e = delta + 1;
    while (!Rr.empty() && pz_deg(Rr) >= pz_deg(r1)) {
      Poly piv = Rr.back();
      long k = pz_deg(Rr) - pz_deg(r1);
      auto step = [&](PZ& target, const PZ& sub) {
        size_t need = std::max(target.size(), sub.size() + k);
        target.resize(need);
        for (size_t i = 0; i < target.size(); ++i) target[i] = target[i] * lc;
        for (size_t i = 0; i < sub.size(); ++i) target[i + k] = target[i + k] - piv * sub[i];
        pz_trim(target);
      };
      step(Rr, r1);
      step(Ru, u1);
      --e;
    }
    for (; e > 0; --e) {
      for (Poly& c : Rr) c = c * lc;
      for (Poly& c : Ru) c = c * lc;
    }
    // divide the row by beta = g * h^delta
    Poly beta = first ? Poly::one() : g;
    if (!first)
      for (long i = 0; i < delta; ++i) beta = beta * h;
    if (beta.degree() > 0 || beta.leading() != 1) {
      for (Poly& c : Rr) c = Poly::div_exact(c, beta);
      for (Poly& c : Ru) c = Poly::div_exact(c, beta);
    }
    r0 = std::move(r1);
    u0 = std::move(u1);
    r1 = std::move(Rr);
    u1 = std::move(Ru);
    g = r0.back();
    if (first) {
      h = g;
      for (long i = 1; i < delta; ++i) h = h * g;
      first = false;
    } else {
      // h = g^delta h^(1-delta)
      Poly hn = Poly::one();
      for (long i = 0; i < delta; ++i) hn = hn * g;
      for (long i = 0; i < delta - 1; ++i) hn = Poly::div_exact(hn, h);
      if (delta == 0) hn = h;  // delta 0 cannot occur in a PRS, but keep h sane
      h = hn;
    }
  }
}

// [z^(a-1)] of digit m-1 of x*y: carries cannot reach that slot, so only the
// straight i+j = m-1 convolution contributes
Poly pel_top_coeff(const PRing& R, const PElem& x, const PElem& y) {
  Poly out;
  for (long i = 0; i < R.m; ++i) {
    long j = R.m - 1 - i;
    for (long p = 0; p <= pz_deg(x.digit[i]); ++p) {
      long q = R.a - 1 - p;
      if (q < 0 || q > pz_deg(y.digit[j])) continue;
      if (!x.digit[i][p].is_zero() && !y.digit[j][q].is_zero())
        out = out + x.digit[i][p] * y.digit[j][q];
    }
  }
  return out;
}

Poly t_power_minus(long k) {
  // 1 - t^k
  std::vector<Rat> c(k + 1, Rat(0));
  c[0] = 1;
  c[k] = -1;
  return Poly(std::move(c));
}

Poly one_minus_t_pow(long e) {
  Poly p = Poly::one();
  Poly lin(std::vector<Rat>{1, -1});
  for (long i = 0; i < e; ++i) p = p * lin;
  return p;
}

// residue-sum contribution of one distinct inside factor (z^a - t)^m
RatFunc factor_contribution(const IntegrandFactorization& f, const WeightFactor& wf) {
  PRing R{wf.a, wf.mult};
  // C = everything in the denominator except (z^a - t)^m and (1-t)^e
  PElem C = pel_one(R);
  if (f.zero_pole_order > 0) C = pel_mul(R, C, pel_z_power(R, f.zero_pole_order));
  for (const WeightFactor& other : f.factors) {
    PZ inside_factor(other.a + 1), outside_factor(other.a + 1);
    inside_factor[0] = Poly(std::vector<Rat>{0, -1});
    inside_factor[other.a] = Poly::one();
    outside_factor[0] = Poly::one();
    outside_factor[other.a] = Poly(std::vector<Rat>{0, -1});
    PElem in_r = pel_from_pz(R, std::move(inside_factor));
    PElem out_r = pel_from_pz(R, std::move(outside_factor));
    for (long i = 0; i < other.mult; ++i) {
      if (other.a != wf.a) C = pel_mul(R, C, in_r);
      C = pel_mul(R, C, out_r);
    }
  }

  // X/den = C^(-1) mod u^prec, lifted by Newton to prec >= m; on the last
  // round only the needed top coefficient of the product is formed
  auto [u_cof, r_scalar] = pz_inverse_cofactor(R, C.digit[0]);
  PElem X = pel_zero(R);
  X.digit[0] = std::move(u_cof);
  Poly den = r_scalar;
  PElem Z = pel_z_power(R, f.z_power);

  if (R.m == 1) return RatFunc(pel_top_coeff(R, Z, X), den);

  for (long prec = 1;; prec *= 2) {
    // N/den = 2 - C X / den, so X (2 den - C X) / den^2 doubles the precision
    PElem T = pel_mul(R, C, X);
    PElem N = pel_zero(R);
    for (long i = 0; i < R.m; ++i) {
      PZ d(T.digit[i].size());
      for (size_t k = 0; k < T.digit[i].size(); ++k) d[k] = -T.digit[i][k];
      if (i == 0) {
        if (d.empty()) d.resize(1);
        d[0] = d[0] + den * Poly(2);
      }
      pz_trim(d);
      N.digit[i] = std::move(d);
    }
    if (2 * prec >= R.m) {
      PElem Y = pel_mul(R, Z, X);
      return RatFunc(pel_top_coeff(R, Y, N), den * den);
    }
    X = pel_mul(R, X, N);
    den = den * den;
  }
}

// residue at z = 0: [z^(m0-1)] of the reciprocal of every other denominator
// factor, as a power series in z over Q(t).  m0 is tiny, so plain rational
// functions are fine here.
RatFunc zero_contribution(const IntegrandFactorization& f) {
  long m0 = f.zero_pole_order;
  const RatFunc minus_t(Poly(std::vector<Rat>{0, -1}));
  std::vector<RatFunc> rest(m0);
  rest[0] = RatFunc(1);
  auto mul_factor = [&](long a, const RatFunc& c0, const RatFunc& ca) {
    std::vector<RatFunc> next(m0);
    for (long i = 0; i < m0; ++i) {
      if (rest[i].is_zero()) continue;
      next[i] += rest[i] * c0;
      if (i + a < m0) next[i + a] += rest[i] * ca;
    }
    rest = std::move(next);
  };
  for (const WeightFactor& wf : f.factors)
    for (long i = 0; i < wf.mult; ++i) {
      mul_factor(wf.a, minus_t, RatFunc(1));  // z^a - t
      mul_factor(wf.a, RatFunc(1), minus_t);  // 1 - t z^a
    }
  std::vector<RatFunc> inv(m0);
  inv[0] = RatFunc(1) / rest[0];
  for (long n = 1; n < m0; ++n) {
    RatFunc acc;
    for (long k = 1; k <= n; ++k) acc += rest[k] * inv[n - k];
    inv[n] = -acc / rest[0];
  }
  return inv[m0 - 1];
}

const std::string kOnshellKind = "onshell";

}  // namespace

IntegrandFactorization build_integrand(const WeightData& w, long ell) {
  IntegrandFactorization f;
  f.ell = ell;
  f.e = w.e;
  long S = 0;
  std::map<long, long> mult;
  for (const WeightEntry& entry : w.lambda) {
    S += entry.a;
    ++mult[entry.a];
  }
  for (const auto& [a, m] : mult) {
    f.factors.push_back({a, m});
    f.M = std::lcm(f.M, a);
  }
  long p = ell - 1 + S;
  f.z_power = p > 0 ? p : 0;
  f.zero_pole_order = p < 0 ? -p : 0;

  // expanded forms (reporting/testing; the residue algorithm works with the
  // factor list)
  f.numerator = BiPoly::z_monomial(Poly::one(), f.z_power);
  f.inside = BiPoly::z_monomial(Poly::one(), f.zero_pole_order);
  f.outside = BiPoly(one_minus_t_pow(w.e));
  for (const auto& [a, m] : mult)
    for (long i = 0; i < m; ++i) {
      // inside *= z^a - t ; outside *= 1 - t z^a
      f.inside = f.inside * (BiPoly::z_monomial(Poly::one(), a) +
                             BiPoly(Poly(std::vector<Rat>{0, -1})));
      f.outside = f.outside * (BiPoly(Poly::one()) +
                               BiPoly::z_monomial(Poly(std::vector<Rat>{0, -1}), a));
    }
  return f;
}

RatFunc residue_sum_inside(const IntegrandFactorization& f) {
  RatFunc total;
  for (const WeightFactor& wf : f.factors) total += factor_contribution(f, wf);
  if (f.zero_pole_order > 0) total += zero_contribution(f);
  return total / RatFunc(one_minus_t_pow(f.e));
}

RatFunc upsilon(const ReprSpec& spec, long ell) {
  WeightData w = decompose(spec);
  IntegrandFactorization f = build_integrand(w, ell);
  // Computed directly in t: with every factor in the polynomial form
  // (z^a - t) / (1 - t z^a), all exponents of t are integral, so the
  // s = t^(1/M) refinement the pole analysis suggests has nothing left to
  // check (M is still reported in the factorization).
  return residue_sum_inside(f);
}

RatFunc covariant_hilbert(const ReprSpec& spec, long L) {
  if (L < 0) throw std::invalid_argument("negative covariant weight");
  std::string key = (L == 0 ? "invariant:" : "covariant:") + spec.str() + ":" + std::to_string(L);
  if (auto hit = cache_load(key)) return *hit;
  RatFunc h = upsilon(spec, -L) - upsilon(spec, L + 2);
  cache_store(key, h);
  return h;
}

RatFunc invariant_hilbert(const ReprSpec& spec) { return covariant_hilbert(spec, 0); }

RatFunc onshell_hilbert(const ReprSpec& spec) {
  // Shapes where the moment map components are not a regular sequence: the
  // Koszul assembly below is wrong there, but the quotients are classical
  // (a point, resp. C/±1 for both 2V1 and V2).
  const Poly one_minus_t2 = t_power_minus(2);
  if (spec.degrees == std::vector<long>{1}) return RatFunc(1);
  if (spec.degrees == std::vector<long>{1, 1} || spec.degrees == std::vector<long>{2})
    return RatFunc(Poly(std::vector<Rat>{1, 0, 1}), one_minus_t2 * one_minus_t2);

  std::string key = kOnshellKind + ":" + spec.str() + ":0";
  if (auto hit = cache_load(key)) return *hit;
  ReprSpec lifted = cotangent_lift(spec);
  RatFunc h = RatFunc(t_power_minus(6)) * invariant_hilbert(lifted) +
              RatFunc(Poly(std::vector<Rat>{0, 0, -1, 0, 1})) * covariant_hilbert(lifted, 2);
  cache_store(key, h);
  return h;
}

std::map<std::vector<long>, Int> multigraded_table(const ReprSpec& spec, long L, long N) {
  std::map<std::vector<long>, Int> out;
  long r = static_cast<long>(spec.degrees.size());
  std::vector<long> idx(r, 0);
  while (true) {
    long total = 0;
    for (long v : idx) total += v;
    if (total <= N) {
      Int d = multigraded_covariant_dim(spec, L, idx);
      if (d != 0) out[idx] = d;
    }
    long k = r - 1;
    while (k >= 0) {
      ++idx[k];
      long s = 0;
      for (long v : idx) s += v;
      if (s <= N) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace hser
