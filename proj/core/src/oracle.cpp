#include "hser/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hser {

namespace {

// Unbounded-knapsack DP over one variable per weight: after processing a
// variable of weight a, T[n][w] counts monomials in the variables so far.
// Stored dense with offset since the weight range is small (|w| <= n*max|a|).
struct DenseTable {
  long N;
  long span;  // weights run over [-span, span]
  std::vector<std::vector<Int>> t;  // t[n][w + span]

  DenseTable(long N_, long span_) : N(N_), span(span_) {
    t.assign(N + 1, std::vector<Int>(2 * span + 1, Int(0)));
    t[0][span] = 1;
  }

  void add_variable(long a) {
    for (long n = 1; n <= N; ++n)
      for (long w = -span; w <= span; ++w) {
        long prev = w - a;
        if (prev < -span || prev > span) continue;
        if (t[n - 1][prev + span] != 0) t[n][w + span] += t[n - 1][prev + span];
      }
  }
};

long max_abs_weight(const ReprSpec& spec) {
  long m = 0;
  for (long d : spec.degrees) m = std::max(m, d);
  return m;
}

std::map<long, Int> to_map(const std::vector<Int>& dense, long span) {
  std::map<long, Int> m;
  for (long w = -span; w <= span; ++w)
    if (dense[w + span] != 0) m[w] = dense[w + span];
  return m;
}

}  // namespace

WeightMultTable sym_weight_mult(const ReprSpec& spec, long N) {
  if (N < 0) throw std::invalid_argument("negative truncation");
  WeightData wd = decompose(spec);
  long span = std::max<long>(1, N * max_abs_weight(spec));
  DenseTable table(N, span);
  for (const WeightEntry& entry : wd.theta) table.add_variable(entry.a);
  std::vector<std::map<long, Int>> rows;
  rows.reserve(N + 1);
  for (long n = 0; n <= N; ++n) rows.push_back(to_map(table.t[n], span));
  return WeightMultTable(std::move(rows));
}

std::vector<Int> covariant_dims(const ReprSpec& spec, long L, long N) {
  WeightMultTable table = sym_weight_mult(spec, N);
  std::vector<Int> dims;
  dims.reserve(N + 1);
  for (long n = 0; n <= N; ++n) dims.push_back(table.mult(n, L) - table.mult(n, L + 2));
  return dims;
}

Int covariant_dim(const ReprSpec& spec, long L, long n) {
  return covariant_dims(spec, L, n).back();
}

Int multigraded_covariant_dim(const ReprSpec& spec, long L, const std::vector<long>& multidegree) {
  if (multidegree.size() != spec.degrees.size())
    throw std::invalid_argument("multidegree arity mismatch");
  for (long n : multidegree)
    if (n < 0) throw std::invalid_argument("negative multidegree");
  // per-block weight distribution at the prescribed degree, then convolve
  std::map<long, Int> acc{{0, Int(1)}};
  for (size_t k = 0; k < spec.degrees.size(); ++k) {
    long d = spec.degrees[k], n = multidegree[k];
    long span = std::max<long>(1, n * d);
    DenseTable table(n, span);
    for (long i = 0; i <= d; ++i) table.add_variable(2 * i - d);
    std::map<long, Int> next;
    for (const auto& [w1, c1] : acc)
      for (long w2 = -span; w2 <= span; ++w2) {
        const Int& c2 = table.t[n][w2 + span];
        if (c2 != 0) next[w1 + w2] += c1 * c2;
      }
    acc = std::move(next);
  }
  auto get = [&](long w) {
    auto it = acc.find(w);
    return it == acc.end() ? Int(0) : it->second;
  };
  return get(L) - get(L + 2);
}

std::vector<Int> onshell_dim_series(const ReprSpec& spec, long N) {
  if (!classify(spec).onshell_formula_ok)
    throw std::invalid_argument("on-shell Koszul assembly not valid for " + spec.str());
  ReprSpec lifted = cotangent_lift(spec);
  WeightMultTable table = sym_weight_mult(lifted, N);
  auto cov = [&](long L, long n) -> Int { return table.mult(n, L) - table.mult(n, L + 2); };
  std::vector<Int> out(N + 1, Int(0));
  for (long n = 0; n <= N; ++n) {
    Int v = cov(0, n);
    if (n >= 6) v -= cov(0, n - 6);
    if (n >= 4) v += cov(2, n - 4);
    if (n >= 2) v -= cov(2, n - 2);
    out[n] = v;
  }
  return out;
}

}  // namespace hser
