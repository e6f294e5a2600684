#include "hser/verify.hpp"

#include <sstream>

#include "hser/engine.hpp"
#include "hser/oracle.hpp"
#include "hser/schur.hpp"
#include "hser/sweep.hpp"

namespace hser {

namespace {

struct Failure {
  std::string message;
};

void fail(const ReprSpec& spec, const std::string& what) {
  throw Failure{"spec=" + spec.str() + ": " + what};
}

void check_spec(const ReprSpec& spec, long depth) {
  Classification cls = classify(spec);
  WeightData w = decompose(spec);
  ReprSpec lifted = cotangent_lift(spec);
  WeightData wl = decompose(lifted);

  // engine vs combinatorial oracle on the doubled representation
  for (long L : {0L, 2L}) {
    RatFunc cov = covariant_hilbert(lifted, L);
    std::vector<Rat> coeffs = cov.series(depth);
    std::vector<Int> dims = covariant_dims(lifted, L, depth);
    for (long n = 0; n <= depth; ++n)
      if (coeffs[n] != Rat(dims[n])) {
        std::ostringstream msg;
        msg << "covariant series of " << lifted.str() << " (L=" << L << ") disagrees with "
            << "the dimension count at degree " << n << " (" << rat_str(coeffs[n]) << " vs "
            << dims[n].get_str() << ")";
        fail(spec, msg.str());
      }
  }

  RatFunc on = onshell_hilbert(spec);
  if (cls.onshell_formula_ok) {
    std::vector<Rat> coeffs = on.series(depth);
    std::vector<Int> dims = onshell_dim_series(spec, depth);
    for (long n = 0; n <= depth; ++n)
      if (coeffs[n] != Rat(dims[n])) {
        std::ostringstream msg;
        msg << "on-shell series disagrees with the dimension count at degree " << n;
        fail(spec, msg.str());
      }
  }

  if (cls.one_large) {
    long d = 2 * w.D - 6;
    if (!functional_eq_check(on, d)) fail(spec, "functional equation fails");
    if (laurent_at_one(on, 0).pole_order != d) fail(spec, "on-shell pole order is not 2D-6");
    if (laurent_at_one(invariant_hilbert(spec), 0).pole_order != w.D - 3)
      fail(spec, "invariant pole order is not D-3");

    LaurentExpansion le = laurent_at_one(on, 1);
    if (le.coefficients[1] != 0) fail(spec, "gamma_1^on is nonzero");

    RatFunc inv = invariant_hilbert(lifted);
    RatFunc cov2 = covariant_hilbert(lifted, 2);
    Rat g0 = gamma_extract(inv, 0, wl.D), g1 = gamma_extract(inv, 1, wl.D);
    Rat g02 = gamma_extract(cov2, 0, wl.D), g12 = gamma_extract(cov2, 1, wl.D);
    if (rat(6) * g0 - rat(2) * g02 != 0) fail(spec, "6*gamma_0 - 2*gamma_{0,2} is nonzero");
    if (rat(-15) * g0 + rat(5) * g02 + rat(6) * g1 - rat(2) * g12 != 0)
      fail(spec, "-15*gamma_0 + 5*gamma_{0,2} + 6*gamma_1 - 2*gamma_{1,2} is nonzero");
  }

  // parity vanishing
  if (w.sigma == 2 && !covariant_hilbert(spec, 1).is_zero())
    fail(spec, "odd covariants of an all-even representation are nonzero");

  // closed-form gamma coefficients vs extraction on the spec itself
  for (long L = 0; L <= 4; ++L) {
    RatFunc f = L == 0 ? invariant_hilbert(spec) : covariant_hilbert(spec, L);
    GammaReport g0 = gamma0_covariant(spec, L);
    GammaReport g1 = gamma1_covariant(spec, L);
    GammaReport g2 = gamma2_covariant(spec, L);
    if (g0.applicable && g0.value != gamma_extract(f, 0, w.D))
      fail(spec, "gamma_{0,L} formula disagrees with extraction at L=" + std::to_string(L));
    if (g1.applicable && g1.value != gamma_extract(f, 1, w.D))
      fail(spec, "gamma_{1,L} formula disagrees with extraction at L=" + std::to_string(L));
    if (g2.applicable && g2.value != gamma_extract(f, 2, w.D))
      fail(spec, "gamma_{2,L} formula disagrees with extraction at L=" + std::to_string(L));
  }

  GammaReport g0on = gamma0_onshell(spec);
  Rat lead = laurent_at_one(on, 0).coefficients.at(0);
  if (g0on.applicable && g0on.value != lead)
    fail(spec, "gamma_0^on formula disagrees with extraction");

  if (cls.gamma0_on_formula_ok && !gamma32_relation_check(spec))
    fail(spec, "gamma_{3,2} relation fails");
}

}  // namespace

VerifyResult verify_all(long max_dim, long depth) {
  try {
    for (const ReprSpec& spec : enumerate_specs(max_dim)) check_spec(spec, depth);
  } catch (const Failure& f) {
    return {false, f.message};
  }
  return {true, ""};
}

}  // namespace hser
