#pragma once

#include <map>
#include <vector>

#include "hser/bipoly.hpp"
#include "hser/oracle.hpp"
#include "hser/ratfunc.hpp"
#include "hser/repmodel.hpp"

namespace hser {

// One distinct positive weight a, appearing with multiplicity mult: the
// integrand carries (z^a - t)^mult inside the unit circle and
// (1 - t z^a)^mult outside.
struct WeightFactor {
  long a;
  long mult;
};

// The contour-integral density after clearing negative powers of z:
//
//     numerator / (inside * outside * (1-t)^e)
//
// where inside = z^zero_pole_order * prod (z^a - t)^mult collects every pole
// inside the unit circle (for small |t|) and outside = prod (1 - t z^a)^mult
// the rest.  M is the lcm of the positive weights; with the factors in this
// polynomial form every exponent of t is already integral, so the t = s^M
// variable change the pole analysis suggests is the identity bookkeeping-wise
// and everything is computed in t directly.
struct IntegrandFactorization {
  long M = 1;
  long ell = 0;
  long e = 0;
  long z_power = 0;          // numerator = z^z_power
  long zero_pole_order = 0;  // nonzero exactly when nu > 0
  std::vector<WeightFactor> factors;
  BiPoly numerator, inside, outside;  // expanded forms of the above
};

IntegrandFactorization build_integrand(const WeightData& w, long ell);

// Exact sum of residues of the density over all poles inside the unit circle
// (including z = 0 when present), divided by (1-t)^e: equals the contour
// integral for small |t|.
RatFunc residue_sum_inside(const IntegrandFactorization& f);

// Upsilon_{W,ell}(t): the Molien-Weyl integral with numerator weight ell
RatFunc upsilon(const ReprSpec& spec, long ell);

// Hilbert series of (C[W] ⊗ V_L)^{SL2} = Upsilon_{W,-L} - Upsilon_{W,L+2}
RatFunc covariant_hilbert(const ReprSpec& spec, long L);
RatFunc invariant_hilbert(const ReprSpec& spec);

// Hilbert series of the regular functions on the symplectic quotient:
// (1-t^6) inv(V⊕V*) + (t^4-t^2) cov(V⊕V*, 2) via the Koszul resolution,
// with hard-coded values for the shapes where that resolution fails
RatFunc onshell_hilbert(const ReprSpec& spec);

// truncated multigraded refinement (delegates to the combinatorial counter;
// the closed multivariate form is out of scope)
std::map<std::vector<long>, Int> multigraded_table(const ReprSpec& spec, long L, long N);

}  // namespace hser
