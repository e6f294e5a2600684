#include "hser/repmodel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hser {

ReprSpec ReprSpec::of(std::vector<long> degrees) {
  if (degrees.empty()) throw std::invalid_argument("empty representation");
  for (long d : degrees)
    if (d <= 0) throw std::invalid_argument("trivial summand not allowed");
  std::sort(degrees.begin(), degrees.end());
  return ReprSpec{std::move(degrees)};
}

ReprSpec ReprSpec::parse(const std::string& text) {
  std::vector<long> ds;
  if (text.empty() || text.back() == '+')
    throw std::invalid_argument("bad representation spec: '" + text + "'");
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, '+')) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad representation spec: '" + text + "'");
    ds.push_back(std::stol(token));
  }
  if (ds.empty()) throw std::invalid_argument("bad representation spec: '" + text + "'");
  return of(std::move(ds));
}

std::string ReprSpec::str() const {
  std::ostringstream out;
  for (size_t k = 0; k < degrees.size(); ++k) {
    if (k) out << '+';
    out << degrees[k];
  }
  return out.str();
}

WeightData decompose(const ReprSpec& spec) {
  WeightData w;
  w.r = static_cast<long>(spec.degrees.size());
  w.sigma = 2;
  for (long k = 1; k <= w.r; ++k) {
    long d = spec.degrees[k - 1];
    if (d <= 0) throw std::invalid_argument("trivial summand not allowed");
    w.D += d + 1;
    w.C += (d + 1) / 2;
    if (d % 2 == 0)
      ++w.e;
    else
      w.sigma = 1;
    for (long i = 0; i <= d; ++i) {
      WeightEntry entry{k, i, 2 * i - d};
      w.theta.push_back(entry);
      if (entry.a > 0) w.lambda.push_back(entry);
    }
  }
  return w;
}

ReprSpec cotangent_lift(const ReprSpec& spec) {
  std::vector<long> ds;
  ds.reserve(2 * spec.degrees.size());
  for (long d : spec.degrees) {
    ds.push_back(d);
    ds.push_back(d);
  }
  return ReprSpec::of(std::move(ds));
}

long nu(const WeightData& w, long L) {
  long s = 0;
  for (const WeightEntry& entry : w.lambda) s += entry.a;
  return L + 1 - s;
}

namespace {

bool is(const ReprSpec& s, std::initializer_list<long> ds) {
  return std::equal(s.degrees.begin(), s.degrees.end(), ds.begin(), ds.end());
}

bool in(const ReprSpec& s, const std::set<std::vector<long>>& list) {
  return list.count(s.degrees) > 0;
}

}  // namespace

Classification classify(const ReprSpec& spec) {
  Classification c;
  c.one_large = !(is(spec, {1}) || is(spec, {1, 1}) || is(spec, {2}));
  c.onshell_formula_ok = c.one_large && !is(spec, {1, 2});

  static const std::set<std::vector<long>> m0 = {{1}, {2}, {3}, {4}, {1, 1}};
  static const std::set<std::vector<long>> m1 = {{1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {2, 2}};
  static const std::set<std::vector<long>> m2 = {{1},    {2},    {3},    {4},    {5},    {6},
                                                {8},    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2},
                                                {2, 3}, {2, 4}, {3, 3}, {4, 4}};
  c.gamma_exception_m0 = in(spec, m0);
  c.gamma_exception_m1 = in(spec, m1);
  c.gamma_exception_m2 = in(spec, m2);

  // V_d for d <= 4, V1+V2, and 2V1 (the closed form needs 1-largeness)
  c.gamma0_on_formula_ok = !(is(spec, {1}) || is(spec, {2}) || is(spec, {3}) || is(spec, {4}) ||
                             is(spec, {1, 2}) || is(spec, {1, 1}));
  return c;
}

}  // namespace hser
