#pragma once

#include <string>
#include <vector>

namespace hser {

// V = V_{d_1} ⊕ ... ⊕ V_{d_r}, kept as a sorted multiset of degrees d_k >= 1.
// Serialized "d1+d2+...", ascending — the canonical cache/dedup key.
struct ReprSpec {
  std::vector<long> degrees;

  static ReprSpec parse(const std::string& text);  // throws std::invalid_argument
  static ReprSpec of(std::vector<long> degrees);   // sorts and validates
  std::string str() const;

  bool operator==(const ReprSpec&) const = default;
  auto operator<=>(const ReprSpec&) const = default;
};

struct WeightEntry {
  long k;  // 1-based summand index
  long i;  // 0..d_k
  long a;  // weight 2i - d_k
};

// Weight bookkeeping: Theta = all torus weights, Lambda = the positive ones.
struct WeightData {
  std::vector<WeightEntry> theta;
  std::vector<WeightEntry> lambda;
  long D = 0;      // dim V = r + sum d_k
  long C = 0;      // |Lambda| = sum ceil(d_k/2)
  long e = 0;      // number of even d_k
  long r = 0;
  long sigma = 1;  // 2 iff every d_k is even
};

WeightData decompose(const ReprSpec& spec);

// V ⊕ V*: every degree doubled (each V_d is self-dual)
ReprSpec cotangent_lift(const ReprSpec& spec);

// nu_{W,L} = L + 1 - sum of positive weights; nu > 0 signals the extra z = 0
// pole in the contour integral
long nu(const WeightData& w, long L);

struct Classification {
  // false exactly for V1, 2V1, V2: the moment map components fail to form a
  // regular sequence there
  bool one_large = true;
  // Koszul on-shell assembly valid: additionally excludes V1+V2
  bool onshell_formula_ok = true;
  // covariant gamma_m Schur formulas not asserted for these shapes
  bool gamma_exception_m0 = false;
  bool gamma_exception_m1 = false;
  bool gamma_exception_m2 = false;
  // closed Schur form for the leading on-shell coefficient
  bool gamma0_on_formula_ok = true;
};

Classification classify(const ReprSpec& spec);

}  // namespace hser
