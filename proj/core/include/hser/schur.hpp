#pragma once

#include <vector>

#include "hser/ratfunc.hpp"
#include "hser/repmodel.hpp"

namespace hser {

// Weakly decreasing parts.  Negative parts are tolerated: the Jacobi-Trudi
// determinant below straightens them (vanishing or sign flips) exactly as the
// shorthand partitions in the closed formulas require.
using Partition = std::vector<long>;

// s_rho(x) via the Jacobi-Trudi determinant det(h_{rho_i - i + j}) over the
// complete homogeneous evaluations at x.  rho is zero-padded to |x| parts;
// repeated points are fine.
Rat schur_eval(const Partition& rho, const std::vector<Rat>& x);

// the alternant quotient det(x_i^{rho_j + n - j}) / det(x_i^{n - j});
// requires pairwise distinct x and rho_j + n - j >= 0.  Cross-check only.
Rat schur_alternant(const Partition& rho, const std::vector<Rat>& x);

// sum of k-th powers, k >= 1
Rat power_sum(long k, const std::vector<Rat>& x);

// Laurent coefficient of f at t = 1 in degree m - (dimW - 3), i.e. the
// gamma_m slot for a series whose top pole order is dimW - 3.  Zero when f
// vanishes identically or has a milder pole.
Rat gamma_extract(const RatFunc& f, long m, long dimW);

enum class GammaSource { schur_formula, laurent_extraction };

struct GammaReport {
  Rat value;
  GammaSource source = GammaSource::schur_formula;
  bool applicable = true;  // false => source == laurent_extraction
};

// Laurent coefficients gamma_{m,L} of the covariant Hilbert series, from the
// closed Schur-quotient formulas when the shape admits them, otherwise
// extracted from the rational function.
GammaReport gamma0_covariant(const ReprSpec& spec, long L);
GammaReport gamma1_covariant(const ReprSpec& spec, long L);
GammaReport gamma2_covariant(const ReprSpec& spec, long L);

// leading Laurent coefficient of the on-shell series
GammaReport gamma0_onshell(const ReprSpec& spec);

// Verifies gamma_{3,2} of V + V* against
//   -15/2 gamma_0 + 15/2 gamma_2 - 10 sigma s_rho'(a)/s_delta(a)
// (hatted partitions at width 2C), together with the inputs
// gamma_1 = 3/2 gamma_0 and gamma_3 = 5/2 (gamma_2 - gamma_0) that the
// relation rests on.  Throws std::domain_error for the shapes where the
// relation is not asserted.
bool gamma32_relation_check(const ReprSpec& spec);

}  // namespace hser
