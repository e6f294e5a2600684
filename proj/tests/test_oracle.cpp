#include <doctest.h>

#include "hser/oracle.hpp"

using namespace hser;

namespace {

Int binom(long n, long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

TEST_CASE("weight multiplicity tables") {
  auto t = sym_weight_mult(ReprSpec::parse("1+1"), 2);
  CHECK(t.mult(2, 0) == 4);
  CHECK(t.mult(2, 2) == 3);

  auto t1 = sym_weight_mult(ReprSpec::parse("1"), 3);
  for (long w : {-3, -1, 1, 3}) CHECK(t1.mult(3, w) == 1);
  CHECK(t1.mult(3, 5) == 0);

  CHECK(t.row(0) == std::map<long, Int>{{0, Int(1)}});
}

TEST_CASE("table invariants") {
  for (const char* s : {"1+1", "2", "1+3", "2+2", "1+2"}) {
    ReprSpec spec = ReprSpec::parse(s);
    long D = decompose(spec).D;
    auto t = sym_weight_mult(spec, 6);
    for (long n = 0; n <= 6; ++n) {
      Int total = 0;
      for (const auto& [w, m] : t.row(n)) {
        CHECK(m == t.mult(n, -w));  // w <-> -w symmetry
        CHECK(m > 0);
        total += m;
      }
      CHECK(total == binom(D + n - 1, n));
    }
  }
}

TEST_CASE("covariant dimensions") {
  CHECK(covariant_dim(ReprSpec::parse("1+1"), 0, 2) == 1);
  CHECK(covariant_dim(ReprSpec::parse("2"), 2, 3) == 1);
  for (long n = 0; n <= 8; ++n) CHECK(covariant_dim(ReprSpec::parse("2+2"), 1, n) == 0);
  // nonnegativity
  for (long L : {0L, 1L, 2L, 3L}) {
    auto dims = covariant_dims(ReprSpec::parse("1+2"), L, 10);
    for (const Int& d : dims) CHECK(d >= 0);
  }
}

TEST_CASE("multigraded counts") {
  ReprSpec s11 = ReprSpec::parse("1+1");
  CHECK(multigraded_covariant_dim(s11, 0, {1, 1}) == 1);
  CHECK(multigraded_covariant_dim(s11, 0, {2, 0}) == 0);
  CHECK(multigraded_covariant_dim(ReprSpec::parse("2"), 2, {1}) == 1);

  // summing the multidegrees of total degree n reproduces the univariate count
  ReprSpec s = ReprSpec::parse("1+2");
  for (long n = 0; n <= 5; ++n) {
    Int total = 0;
    for (long n1 = 0; n1 <= n; ++n1) total += multigraded_covariant_dim(s, 2, {n1, n - n1});
    CHECK(total == covariant_dim(s, 2, n));
  }
}

TEST_CASE("on-shell dimension series") {
  auto s3 = onshell_dim_series(ReprSpec::parse("3"), 24);
  CHECK(s3[0] == 1);
  for (const Int& c : s3) CHECK(c >= 0);
  CHECK_THROWS(onshell_dim_series(ReprSpec::parse("1+2"), 4));
  CHECK_THROWS(onshell_dim_series(ReprSpec::parse("1+1"), 4));
}
