#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hser/cache.hpp"
#include "hser/engine.hpp"
#include "hser/render.hpp"
#include "hser/sweep.hpp"
#include "hser/verify.hpp"

using namespace hser;

namespace {

struct CacheDirGuard {
  CacheDirGuard() { setenv("HSER_CACHE_DIR", ".hser-cache-test", 1); }
} cache_guard;

Poly P(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}

}  // namespace

TEST_CASE("palindromic abbreviation") {
  CHECK(render_palindromic(P({1, 2, 1})) == "{1, 2; 2}");
  CHECK(render_palindromic(P({1, 0, 0, 1})) == "{1, 0; 3}");
  CHECK(render_palindromic(P({1, 2, 3, 2, 1})) == "{1, 2, 3; 4}");
  CHECK(render_palindromic(P({5})) == "{5; 0}");
  CHECK_THROWS_AS(render_palindromic(P({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(render_palindromic(P({})), std::invalid_argument);
}

TEST_CASE("coefficient lists and latex") {
  CHECK(coeff_list(P({1, 0, -2, 0, 1})) == "1 0 -2 0 1");
  CHECK(coeff_list(P({})) == "0");
  CHECK(latex(RatFunc(P({1, 0, 1}), P({1, -2, 1}))) == "\\frac{1 + t^{2}}{1 - 2t + t^{2}}");
  CHECK(latex(RatFunc(P({0, 1}))) == "t");
  CHECK(latex(RatFunc()) == "0");
}

TEST_CASE("spec enumeration") {
  auto specs = enumerate_specs(2);
  REQUIRE(specs.size() == 3);
  CHECK(specs[0] == ReprSpec::parse("1+1"));
  CHECK(specs[1] == ReprSpec::parse("2"));
  CHECK(specs[2] == ReprSpec::parse("3"));

  // lexicographic by degree sequence and within the dimension window
  auto more = enumerate_specs(8);
  CHECK(std::is_sorted(more.begin(), more.end()));
  for (const ReprSpec& s : more) {
    long D = decompose(s).D;
    CHECK(2 * D - 6 >= 0);
    CHECK(2 * D - 6 <= 8);
  }
  // [1] never appears: its quotient dimension is negative
  for (const ReprSpec& s : more) CHECK(s != ReprSpec::parse("1"));
}

TEST_CASE("sweep rows and determinism") {
  auto rows1 = run_sweep(4, 1);
  auto rows2 = run_sweep(4, 3);
  std::ostringstream a, b;
  write_sweep_csv(a, rows1);
  write_sweep_csv(b, rows2);
  CHECK(a.str() == b.str());  // worker count must not affect the bytes
  CHECK(a.str().substr(0, 5) == "spec,");

  for (const SweepRow& r : rows1) {
    CHECK(r.dim_M0 % 2 == 0);
    CHECK(r.dim_M0 >= 0);
    if (classify(r.spec).one_large) {
      CHECK(r.gamma0_on > 0);
      CHECK(r.pole_order == r.dim_M0);
    }
    // the row is self-consistent: its own series reproduces gamma0_on
    RatFunc f(r.series_num, r.series_den);
    CHECK(laurent_at_one(f, 0).coefficients.at(0) == r.gamma0_on);
  }

  // the two finite-quotient rows agree
  auto find = [&](const char* s) {
    for (const SweepRow& r : rows1)
      if (r.spec == ReprSpec::parse(s)) return r;
    throw std::runtime_error("row missing");
  };
  CHECK(find("1+1").gamma0_on == rat(1, 2));
  CHECK(find("2").gamma0_on == rat(1, 2));
  CHECK(find("1+1").series_num == find("2").series_num);
}

TEST_CASE("empty cache dir disables caching") {
  setenv("HSER_CACHE_DIR", "", 1);
  cache_store("invariant:9+9+9:0", RatFunc(1));
  CHECK_FALSE(cache_load("invariant:9+9+9:0").has_value());
  setenv("HSER_CACHE_DIR", ".hser-cache-test", 1);
}

TEST_CASE("verify passes and catches a tampered cache") {
  namespace fs = std::filesystem;
  setenv("HSER_CACHE_DIR", ".hser-cache-tamper", 1);
  fs::remove_all(".hser-cache-tamper");

  VerifyResult clean = verify_all(2, 12);
  CHECK(clean.ok);

  // poison the cached invariant series of the lift of [1,1]
  cache_store("invariant:1+1+1+1:0", RatFunc(P({1}), P({1, 0, -3})));
  VerifyResult bad = verify_all(2, 12);
  CHECK_FALSE(bad.ok);
  CHECK(bad.message.find("1+1+1+1") != std::string::npos);

  fs::remove_all(".hser-cache-tamper");
  setenv("HSER_CACHE_DIR", ".hser-cache-test", 1);
}
