#pragma once

#include <map>
#include <vector>

#include "hser/rational.hpp"
#include "hser/repmodel.hpp"

namespace hser {

// Torus character of Sym^n(W) for n <= N: multiplicity of each integer weight
// among degree-n monomials.  This is the brute-force ground truth the series
// engine is verified against; it deliberately shares no rational-function code
// with the engine.
class WeightMultTable {
 public:
  WeightMultTable(std::vector<std::map<long, Int>> rows) : rows_(std::move(rows)) {}

  long max_degree() const { return static_cast<long>(rows_.size()) - 1; }
  const std::map<long, Int>& row(long n) const { return rows_.at(n); }
  Int mult(long n, long w) const {
    auto it = rows_.at(n).find(w);
    return it == rows_.at(n).end() ? Int(0) : it->second;
  }

 private:
  std::vector<std::map<long, Int>> rows_;
};

WeightMultTable sym_weight_mult(const ReprSpec& spec, long N);

// dim of the degree-n part of (C[W] ⊗ V_L)^{SL2} = mult(L) - mult(L+2)
Int covariant_dim(const ReprSpec& spec, long L, long n);
// all degrees 0..N at once (one DP pass)
std::vector<Int> covariant_dims(const ReprSpec& spec, long L, long N);

// same count restricted to a prescribed degree in each irreducible block
Int multigraded_covariant_dim(const ReprSpec& spec, long L, const std::vector<long>& multidegree);

// truncated series of (1-t^6) inv + (t^4-t^2) cov_2 on V ⊕ V*, assembled
// purely from oracle dimensions; requires a 1-large spec with the Koszul
// assembly valid
std::vector<Int> onshell_dim_series(const ReprSpec& spec, long N);

}  // namespace hser
