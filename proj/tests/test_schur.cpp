#include <doctest.h>

#include <cstdlib>
#include <random>

#include "hser/engine.hpp"
#include "hser/schur.hpp"

using namespace hser;

namespace {

struct CacheDirGuard {
  CacheDirGuard() { setenv("HSER_CACHE_DIR", ".hser-cache-test", 1); }
} cache_guard;

std::vector<Rat> pts(std::initializer_list<long> v) {
  std::vector<Rat> x;
  for (long c : v) x.emplace_back(c);
  return x;
}

}  // namespace

TEST_CASE("schur evaluation examples") {
  CHECK(schur_eval({1, 0}, pts({2, 3})) == 5);        // e_1
  CHECK(schur_eval({3, 2, 1, 0}, pts({1, 1, 1, 1})) == 64);
  CHECK(schur_eval({2, 1}, pts({2, 3})) == 30);       // xy(x+y)
  CHECK(schur_eval({1, 1, 1}, pts({1, 2, 4})) == 8);  // e_3
  CHECK(schur_eval({}, pts({5, 7})) == 1);
  CHECK(schur_eval({2}, pts({})) == 0);
  // repeated points are the normal case here
  CHECK(schur_eval({1, 1, 1, 0}, pts({1, 1, 1, 1})) == 4);
}

TEST_CASE("negative parts shift out as monomial factors") {
  // s_{p - q*(1,..,1)} = s_p / (x_1...x_n)^q
  CHECK(schur_eval({-1, -1}, pts({2, 2})) == rat(1, 4));
  CHECK(schur_eval({-1, -1}, pts({1, 2})) == rat(1, 2));
  // (0,-1,-1): e_1 / e_3
  CHECK(schur_eval({0, -1, -1}, pts({1, 2, 2})) == rat(5, 4));
  std::mt19937 rng(2024);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rat> x;
    Rat prod(1);
    for (int i = 0; i < 3; ++i) {
      x.emplace_back((long)(rng() % 7 + 1));
      prod *= x.back();
    }
    Partition p{(long)(rng() % 4), (long)(rng() % 3), (long)(rng() % 2)};
    std::sort(p.rbegin(), p.rend());
    Partition q(p);
    for (long& v : q) v -= 2;
    CHECK(schur_eval(q, x) * prod * prod == schur_eval(p, x));
  }
}

TEST_CASE("jacobi-trudi matches the alternant at distinct points") {
  std::mt19937 rng(4242);
  for (int it = 0; it < 40; ++it) {
    long n = 2 + rng() % 5;  // width <= 6
    std::vector<Rat> x;
    std::vector<long> used;
    while ((long)x.size() < n) {
      long v = 1 + rng() % 40;
      if (std::find(used.begin(), used.end(), v) != used.end()) continue;
      used.push_back(v);
      x.emplace_back(v);
    }
    Partition p;
    for (long i = 0; i < n; ++i) p.push_back(rng() % 5);
    std::sort(p.rbegin(), p.rend());
    CHECK(schur_eval(p, x) == schur_alternant(p, x));
  }
}

TEST_CASE("staircase schur factors as pair sums") {
  // s_{(n-1,...,1,0)}(x) = prod_{i<j} (x_i + x_j)
  std::mt19937 rng(77);
  for (int it = 0; it < 100; ++it) {
    long n = 1 + rng() % 6;
    std::vector<Rat> x;
    for (long i = 0; i < n; ++i) x.push_back(rat((long)(rng() % 19) - 9, 1 + rng() % 5));
    Partition delta;
    for (long v = n - 1; v >= 0; --v) delta.push_back(v);
    Rat prod(1);
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j) prod *= x[i] + x[j];
    CHECK(schur_eval(delta, x) == prod);
  }
}

TEST_CASE("power sums") {
  CHECK(power_sum(2, pts({1, 1, 3, 3})) == 20);
  CHECK(power_sum(2, pts({})) == 0);
  CHECK_THROWS_AS(power_sum(0, pts({1})), std::invalid_argument);
  // full weight lists are balanced
  for (const char* s : {"1", "3+4", "1+2+2", "2+5"}) {
    WeightData w = decompose(ReprSpec::parse(s));
    std::vector<Rat> theta;
    for (const auto& e : w.theta) theta.emplace_back(e.a);
    CHECK(power_sum(1, theta) == 0);
  }
}

TEST_CASE("gamma0 of covariants") {
  GammaReport g = gamma0_covariant(ReprSpec::parse("1+1+1+1"), 0);
  CHECK(g.applicable);
  CHECK(g.value == rat(1, 16));
  CHECK(g.value == gamma_extract(invariant_hilbert(ReprSpec::parse("1+1+1+1")), 0, 8));

  // all even, odd L: identically zero
  CHECK(gamma0_covariant(ReprSpec::parse("2+2"), 3).value == 0);
  CHECK(gamma0_covariant(ReprSpec::parse("2+2+2"), 1).value == 0);

  // odd summand present: gamma_{0,L} = (L+1) gamma_0
  GammaReport a = gamma0_covariant(ReprSpec::parse("2+3"), 2);
  GammaReport b = gamma0_covariant(ReprSpec::parse("2+3"), 0);
  CHECK(a.value == rat(3) * b.value);

  // exception shapes fall back to extraction
  GammaReport ex = gamma0_covariant(ReprSpec::parse("1+1"), 0);
  CHECK_FALSE(ex.applicable);
  CHECK(ex.source == GammaSource::laurent_extraction);
  CHECK(ex.value == rat(1, 2));  // 1/(1-t^2) at t = 1
}

TEST_CASE("gamma1 of covariants") {
  // gamma_1 = 3/2 gamma_0 whenever both formulas apply
  for (const char* s : {"1+1+1", "2+3", "5", "1+2+2"}) {
    ReprSpec spec = ReprSpec::parse(s);
    for (long L : {0L, 1L, 2L}) {
      GammaReport g0 = gamma0_covariant(spec, L);
      GammaReport g1 = gamma1_covariant(spec, L);
      REQUIRE(g0.applicable);
      REQUIRE(g1.applicable);
      CHECK(g1.value == rat(3, 2) * g0.value);
    }
  }
  GammaReport ex = gamma1_covariant(ReprSpec::parse("2+2"), 0);
  CHECK_FALSE(ex.applicable);
  CHECK(ex.value == rat(3, 16));
}

TEST_CASE("gamma2 of covariants") {
  // frozen spot values, one per parity case
  CHECK(gamma2_covariant(ReprSpec::parse("1+1+2"), 2).value == rat(-7, 72));   // two odd
  CHECK(gamma2_covariant(ReprSpec::parse("7"), 1).value == rat(61, 13824));    // odd > 1
  CHECK(gamma2_covariant(ReprSpec::parse("2+2+2"), 4).value == rat(-15, 128)); // all even
  CHECK(gamma2_covariant(ReprSpec::parse("2+2+2"), 3).value == 0);
  CHECK(gamma2_covariant(ReprSpec::parse("1+6"), 3).value == rat(479, 37800)); // mixed
  CHECK(gamma2_covariant(ReprSpec::parse("1+2+2"), 4).value == rat(-65, 216)); // mixed, width 3

  GammaReport ex = gamma2_covariant(ReprSpec::parse("5"), 2);
  CHECK_FALSE(ex.applicable);
  CHECK(ex.value == rat(5, 128));
}

TEST_CASE("gamma formulas agree with laurent extraction") {
  for (const char* s : {"1+1+1", "2+2+2", "3+4", "1+1+2", "1+2+3", "1+6", "7", "1+2+2"}) {
    ReprSpec spec = ReprSpec::parse(s);
    long D = decompose(spec).D;
    for (long L = 0; L <= 4; ++L) {
      RatFunc f = L == 0 ? invariant_hilbert(spec) : covariant_hilbert(spec, L);
      GammaReport g0 = gamma0_covariant(spec, L);
      GammaReport g1 = gamma1_covariant(spec, L);
      GammaReport g2 = gamma2_covariant(spec, L);
      REQUIRE(g0.applicable);
      REQUIRE(g1.applicable);
      REQUIRE(g2.applicable);
      CHECK(g0.value == gamma_extract(f, 0, D));
      CHECK(g1.value == gamma_extract(f, 1, D));
      CHECK(g2.value == gamma_extract(f, 2, D));
    }
  }
}

TEST_CASE("leading on-shell coefficient") {
  GammaReport ex = gamma0_onshell(ReprSpec::parse("1+1"));
  CHECK_FALSE(ex.applicable);
  CHECK(ex.value == rat(1, 2));
  GammaReport pt = gamma0_onshell(ReprSpec::parse("1"));
  CHECK_FALSE(pt.applicable);
  CHECK(pt.value == 1);

  CHECK(gamma0_onshell(ReprSpec::parse("1+1+1")).value == rat(5, 16));
  CHECK(gamma0_onshell(ReprSpec::parse("2+2")).value == rat(5, 32));
  CHECK(gamma0_onshell(ReprSpec::parse("5")).value == rat(17, 2304));

  for (const char* s : {"5", "2+2", "1+1+2", "6"}) {
    ReprSpec spec = ReprSpec::parse(s);
    GammaReport g = gamma0_onshell(spec);
    REQUIRE(g.applicable);
    Rat lead = laurent_at_one(onshell_hilbert(spec), 0).coefficients.at(0);
    CHECK(g.value == lead);
    // the two displayed forms agree: 8 gamma_0(V+V*) + 8 sigma s_rho'/s_delta
    ReprSpec lifted = cotangent_lift(spec);
    WeightData w = decompose(lifted);
    Rat g0 = gamma_extract(invariant_hilbert(lifted), 0, w.D);
    Partition rp{w.C - 3};
    for (long v = w.C - 4, k = 0; k < 3 && (long)rp.size() < w.C; ++k) rp.push_back(v);
    for (long v = w.C - 5; (long)rp.size() < w.C; --v) rp.push_back(v);
    Partition dl;
    for (long v = w.C - 1; v >= 0; --v) dl.push_back(v);
    std::vector<Rat> a;
    for (const auto& e : w.lambda) a.emplace_back(e.a);
    Rat alt = rat(8) * g0 + rat(8 * w.sigma) * schur_eval(rp, a) / schur_eval(dl, a);
    CHECK(g.value == alt);
  }
}

TEST_CASE("gamma_{3,2} relation") {
  CHECK(gamma32_relation_check(ReprSpec::parse("5")));
  CHECK(gamma32_relation_check(ReprSpec::parse("2+3")));
  CHECK(gamma32_relation_check(ReprSpec::parse("1+2+2")));
  CHECK_THROWS_AS(gamma32_relation_check(ReprSpec::parse("1+2")), std::domain_error);
  CHECK_THROWS_AS(gamma32_relation_check(ReprSpec::parse("1")), std::domain_error);
}

TEST_CASE("on-shell expansion cancellations") {
  // coefficient combinations below the pole order of the quotient series
  for (const char* s : {"3", "2+2", "1+1+2"}) {
    ReprSpec lifted = cotangent_lift(ReprSpec::parse(s));
    WeightData w = decompose(lifted);
    RatFunc inv = invariant_hilbert(lifted);
    RatFunc cov2 = covariant_hilbert(lifted, 2);
    Rat g0 = gamma_extract(inv, 0, w.D), g1 = gamma_extract(inv, 1, w.D);
    Rat g02 = gamma_extract(cov2, 0, w.D), g12 = gamma_extract(cov2, 1, w.D);
    CHECK(rat(6) * g0 - rat(2) * g02 == 0);
    CHECK(rat(-15) * g0 + rat(5) * g02 + rat(6) * g1 - rat(2) * g12 == 0);
  }
}
