#include "hser/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hser/engine.hpp"

namespace hser {

namespace {

// determinant by fraction Gaussian elimination; destroys m
Rat determinant(std::vector<std::vector<Rat>>& m) {
  size_t n = m.size();
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// first n entries of the eventually-decreasing-to-zero staircases the closed
// formulas use; for small n the tail entries go negative, which schur_eval's
// shift convention absorbs
Partition staircase(long top, long repeat, long n) {
  Partition p;
  for (long i = 0; i < repeat && (long)p.size() < n; ++i) p.push_back(top);
  for (long v = top - 1; (long)p.size() < n; --v) p.push_back(v);
  return p;
}

Partition delta_partition(long C) { return staircase(C - 1, 1, C); }
Partition rho_partition(long C) { return staircase(C - 3, 3, C); }
Partition rho_prime_partition(long C) {
  Partition p{C - 3};
  for (long v : staircase(C - 4, 3, C - 1)) p.push_back(v);
  return p;
}

std::vector<Rat> weight_points(const WeightData& w) {
  std::vector<Rat> x;
  x.reserve(w.lambda.size());
  for (const auto& entry : w.lambda) x.emplace_back(entry.a);
  return x;
}

Rat pow_rat(const Rat& x, long k) {
  Rat r(1);
  for (long i = 0; i < k; ++i) r *= x;
  return r;
}

GammaReport extracted(Rat v) {
  return GammaReport{std::move(v), GammaSource::laurent_extraction, false};
}

Rat gamma_cov_extract(const ReprSpec& spec, long m, long L) {
  RatFunc f = L == 0 ? invariant_hilbert(spec) : covariant_hilbert(spec, L);
  return gamma_extract(f, m, decompose(spec).D);
}

}  // namespace

Rat schur_eval(const Partition& rho, const std::vector<Rat>& x) {
  long n = (long)x.size();
  Partition p(rho);
  while (!p.empty() && p.back() == 0) p.pop_back();
  if ((long)p.size() > n) {
    for (long v : p)
      if (v < 0) throw std::invalid_argument("more partition parts than evaluation points");
    return Rat(0);  // more than n nonzero rows
  }
  p.resize(n, 0);
  // negative parts: s_{p}(x) = s_{p + q}(x) / (x_1...x_n)^q
  long q = 0;
  for (long v : p) q = std::max(q, -v);
  if (q > 0)
    for (long& v : p) v += q;
  if (n == 0) return Rat(1);
  long maxk = 0;
  for (long i = 0; i < n; ++i) maxk = std::max(maxk, p[i] - i + n - 1);
  std::vector<Rat> h(maxk + 1, Rat(0));
  h[0] = 1;
  for (const Rat& xi : x)
    for (long k = 1; k <= maxk; ++k) h[k] += xi * h[k - 1];
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long k = p[i] - i + j;
      m[i][j] = (k >= 0 && k <= maxk) ? h[k] : Rat(0);
    }
  Rat det = determinant(m);
  if (q > 0) {
    Rat prod(1);
    for (const Rat& xi : x) prod *= xi;
    if (prod == 0) throw std::domain_error("negative parts need nonzero points");
    det /= pow_rat(prod, q);
  }
  return det;
}

Rat schur_alternant(const Partition& rho, const std::vector<Rat>& x) {
  long n = (long)x.size();
  Partition p(rho);
  p.resize(n, 0);
  auto alternant = [&](const std::vector<long>& expo) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        if (expo[j] < 0) throw std::domain_error("negative alternant exponent");
        m[i][j] = pow_rat(x[i], expo[j]);
      }
    return determinant(m);
  };
  std::vector<long> top(n), bot(n);
  for (long j = 0; j < n; ++j) {
    top[j] = p[j] + n - 1 - j;
    bot[j] = n - 1 - j;
  }
  Rat d = alternant(bot);
  if (d == 0) throw std::domain_error("alternant requires distinct points");
  return alternant(top) / d;
}

Rat power_sum(long k, const std::vector<Rat>& x) {
  if (k < 1) throw std::invalid_argument("power_sum needs k >= 1");
  Rat s(0);
  for (const Rat& xi : x) s += pow_rat(xi, k);
  return s;
}

Rat gamma_extract(const RatFunc& f, long m, long dimW) {
  if (f.is_zero()) return Rat(0);
  long order = m;  // enough even if the pole is full depth
  LaurentExpansion le = laurent_at_one(f, order + dimW - 3);
  long idx = m - (dimW - 3) + le.pole_order;
  if (idx < 0) return Rat(0);
  if (idx >= (long)le.coefficients.size()) return Rat(0);
  return le.coefficients[idx];
}

GammaReport gamma0_covariant(const ReprSpec& spec, long L) {
  if (L < 0) throw std::invalid_argument("L must be nonnegative");
  if (classify(spec).gamma_exception_m0) return extracted(gamma_cov_extract(spec, 0, L));
  WeightData w = decompose(spec);
  std::vector<Rat> a = weight_points(w);
  Rat base = schur_eval(rho_partition(w.C), a) / schur_eval(delta_partition(w.C), a);
  long parity = (w.sigma == 2) ? (L % 2 == 0 ? 2 : 0) : 1;
  return GammaReport{rat(parity * (L + 1)) * base, GammaSource::schur_formula, true};
}

GammaReport gamma1_covariant(const ReprSpec& spec, long L) {
  if (L < 0) throw std::invalid_argument("L must be nonnegative");
  if (classify(spec).gamma_exception_m1) return extracted(gamma_cov_extract(spec, 1, L));
  WeightData w = decompose(spec);
  std::vector<Rat> a = weight_points(w);
  Rat base = schur_eval(rho_partition(w.C), a) / schur_eval(delta_partition(w.C), a);
  long parity = (w.sigma == 2) ? (L % 2 == 0 ? 2 : 0) : 1;
  return GammaReport{rat(3 * parity * (L + 1), 2) * base, GammaSource::schur_formula, true};
}

GammaReport gamma2_covariant(const ReprSpec& spec, long L) {
  if (L < 0) throw std::invalid_argument("L must be nonnegative");
  WeightData w = decompose(spec);
  long n_odd = 0, odd_gt1 = 0;
  for (long d : spec.degrees)
    if (d % 2 == 1) {
      ++n_odd;
      if (d > 1) ++odd_gt1;
    }
  bool case1 = n_odd >= 2 || odd_gt1 >= 1;
  bool case3 = n_odd == 1 && odd_gt1 == 0;  // one V1 summand, the rest even
  if (classify(spec).gamma_exception_m2) return extracted(gamma_cov_extract(spec, 2, L));

  std::vector<Rat> a = weight_points(w);
  Rat sd = schur_eval(delta_partition(w.C), a);
  Rat srp = schur_eval(rho_prime_partition(w.C), a);
  Rat g2 = gamma_extract(invariant_hilbert(spec), 2, w.D);
  Rat val;
  if (case1) {
    val = rat(L + 1) * g2 - rat(L * (L + 1) * (L + 2), 6) * srp / sd;
  } else if (case3) {
    Rat sr = schur_eval(rho_partition(w.C), a);
    // quadratic power sum over the full weight list (positive and negative)
    Rat p2 = rat(2) * power_sum(2, a);
    std::vector<Rat> a1 = a;
    a1.erase(std::find(a1.begin(), a1.end(), Rat(1)));
    Rat alt = schur_eval(rho_partition(w.C - 1), a1) /
              schur_eval(delta_partition(w.C - 1), a1);
    Rat sign = (L % 2 == 0) ? Rat(1) : Rat(-1);
    val = rat(L + 1) * ((rat(42) * sr + srp * (p2 - rat(8) - rat(4 * L * (L + 2)))) /
                            (rat(24) * sd) +
                        sign * alt / rat(4));
  } else {  // all degrees even
    if (L % 2 == 1) return GammaReport{Rat(0), GammaSource::schur_formula, true};
    val = rat(L + 1) * g2 - rat(L * (L + 1) * (L + 2), 3) * srp / sd;
  }
  return GammaReport{val, GammaSource::schur_formula, true};
}

GammaReport gamma0_onshell(const ReprSpec& spec) {
  if (!classify(spec).gamma0_on_formula_ok) {
    LaurentExpansion le = laurent_at_one(onshell_hilbert(spec), 0);
    return extracted(le.coefficients.at(0));
  }
  WeightData w = decompose(cotangent_lift(spec));
  std::vector<Rat> a = weight_points(w);
  Rat sr = schur_eval(rho_partition(w.C), a);
  Rat srp = schur_eval(rho_prime_partition(w.C), a);
  Rat sd = schur_eval(delta_partition(w.C), a);
  return GammaReport{rat(8 * w.sigma) * (sr + srp) / sd, GammaSource::schur_formula, true};
}

bool gamma32_relation_check(const ReprSpec& spec) {
  if (!classify(spec).gamma0_on_formula_ok)
    throw std::domain_error("gamma_{3,2} relation not asserted for this representation");
  ReprSpec lifted = cotangent_lift(spec);
  WeightData w = decompose(lifted);
  RatFunc inv = invariant_hilbert(lifted);
  Rat g0 = gamma_extract(inv, 0, w.D);
  Rat g1 = gamma_extract(inv, 1, w.D);
  Rat g2 = gamma_extract(inv, 2, w.D);
  Rat g3 = gamma_extract(inv, 3, w.D);
  if (g1 != rat(3, 2) * g0) return false;
  if (g3 != rat(5, 2) * (g2 - g0)) return false;
  Rat g32 = gamma_extract(covariant_hilbert(lifted, 2), 3, w.D);
  std::vector<Rat> a = weight_points(w);
  Rat srp = schur_eval(rho_prime_partition(w.C), a);
  Rat sd = schur_eval(delta_partition(w.C), a);
  Rat rhs = rat(-15, 2) * g0 + rat(15, 2) * g2 - rat(10 * w.sigma) * srp / sd;
  return g32 == rhs;
}

}  // namespace hser
