#include <doctest.h>

#include <random>

#include "ring.hpp"

using namespace pfz;

TEST_CASE("factorize small moduli") {
  Ideal unit(1);
  CHECK(unit.modulus() == 1);
  CHECK(unit.factors().empty());
  CHECK(unit.is_unit());

  Ideal twelve(12);
  REQUIRE(twelve.factors().size() == 2);
  CHECK(twelve.factors()[0] == std::pair<Int, unsigned>{2, 2});
  CHECK(twelve.factors()[1] == std::pair<Int, unsigned>{3, 1});

  Ideal n360(360);
  REQUIRE(n360.factors().size() == 3);
  CHECK(n360.factors()[0] == std::pair<Int, unsigned>{2, 3});
  CHECK(n360.factors()[1] == std::pair<Int, unsigned>{3, 2});
  CHECK(n360.factors()[2] == std::pair<Int, unsigned>{5, 1});

  CHECK_THROWS_AS(Ideal(0), input_error);
  CHECK_THROWS_AS(Ideal(-4), input_error);
}

TEST_CASE("ideal from caller factors is validated") {
  Ideal ok(Int(12), {{2, 2}, {3, 1}});
  CHECK(ok.exponent_of(2) == 2);
  CHECK(ok.exponent_of(5) == 0);
  CHECK(ok.radical() == 6);
  CHECK_THROWS_AS(Ideal(Int(12), {{3, 1}, {2, 2}}), input_error);  // order
  CHECK_THROWS_AS(Ideal(Int(12), {{2, 2}}), input_error);          // product
  CHECK_THROWS_AS(Ideal(Int(16), {{4, 2}}), input_error);          // non-prime

  // beyond the trial-division cap, with caller-supplied factors
  Int mersenne61("2305843009213693951");
  Int big = mersenne61 * mersenne61;
  Ideal large(big, {{mersenne61, 2}});
  CHECK(large.exponent_of(mersenne61) == 2);
  CHECK_THROWS_AS(Ideal{big}, input_error);  // no factors supplied
}

TEST_CASE("primality check at 64-bit scale") {
  CHECK(is_prime_u64(Int("2305843009213693951")));       // 2^61 - 1
  CHECK_FALSE(is_prime_u64(Int("2305843009213693953")));
  CHECK(is_prime_u64(Int("18446744073709551557")));      // largest prime below 2^64
  CHECK_FALSE(is_prime_u64(Int(3215031751)));            // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime_u64(Int(1)));
  CHECK_FALSE(is_prime_u64(Int(-7)));
}

TEST_CASE("ext_gcd certificate identity") {
  auto [g0, x0, y0] = ext_gcd(0, 0);
  CHECK(g0 == 0);
  CHECK(x0 == 0);
  CHECK(y0 == 0);

  auto e = ext_gcd(6, 10);
  CHECK(e.g == 2);
  CHECK(Int(6) * e.x + Int(10) * e.y == 2);

  auto e2 = ext_gcd(240, 46);
  CHECK(e2.g == 2);
  CHECK(Int(240) * e2.x + Int(46) * e2.y == e2.g);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int i = 0; i < 1000; ++i) {
    Int a = dist(rng), b = dist(rng);
    auto r = ext_gcd(a, b);
    CHECK(r.g >= 0);
    CHECK(a * r.x + b * r.y == r.g);
    CHECK(r.g == gcd_int(a, b));
  }
}

TEST_CASE("ext_gcd_vec spans the gcd") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(-500, 500);
  for (int i = 0; i < 500; ++i) {
    std::vector<Int> v(3 + i % 3);
    for (Int& x : v) x = dist(rng);
    auto [g, coeffs] = ext_gcd_vec(v);
    Int sum = 0;
    for (size_t j = 0; j < v.size(); ++j) sum += v[j] * coeffs[j];
    CHECK(sum == g);
    CHECK(g == gcd_vec(v));
  }
}

TEST_CASE("crt_solve frozen and scanned values") {
  // Scan oracle for the frozen cases.
  auto scan = [](const std::vector<std::pair<Int, Int>>& pairs) {
    Int total = 1;
    for (const auto& [r, m] : pairs) total *= m;
    for (Int x = 0; x < total; ++x) {
      bool ok = true;
      for (const auto& [r, m] : pairs)
        if (mod_floor(x - r, m) != 0) ok = false;
      if (ok) return x;
    }
    return Int(-1);
  };

  std::vector<std::pair<Int, Int>> a{{1, 4}, {0, 9}};
  CHECK(crt_solve(a) == 9);
  CHECK(scan(a) == 9);

  CHECK(crt_solve({{0, 1}}) == 0);

  std::vector<std::pair<Int, Int>> b{{2, 3}, {3, 5}, {2, 7}};
  CHECK(crt_solve(b) == 23);
  CHECK(scan(b) == 23);

  CHECK_THROWS_AS(crt_solve({{1, 4}, {1, 6}}), input_error);
  CHECK_THROWS_AS(crt_solve({}), input_error);
}

TEST_CASE("crt_solve reproduces residues and stays in range") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> dist(0, 1000);
  const Int mods[] = {4, 9, 25, 7};
  for (int i = 0; i < 200; ++i) {
    std::vector<std::pair<Int, Int>> pairs;
    Int total = 1;
    for (const Int& m : mods) {
      pairs.push_back({Int(dist(rng)) % m, m});
      total *= m;
    }
    Int x = crt_solve(pairs);
    CHECK(x >= 0);
    CHECK(x < total);
    for (const auto& [r, m] : pairs) CHECK(mod_floor(x, m) == mod_floor(r, m));
  }
}

TEST_CASE("coprime_shift least solution") {
  CHECK(coprime_shift(0, 1, 7) == 1);
  CHECK(coprime_shift(5, 3, 10) == 2);
  CHECK(coprime_shift(2, 3, 6) == 1);
  CHECK_THROWS_AS(coprime_shift(2, 4, 5), input_error);
  CHECK_THROWS_AS(coprime_shift(1, 1, 0), input_error);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> dist(-300, 300);
  int done = 0;
  while (done < 500) {
    Int a = dist(rng), b = dist(rng), m = dist(rng);
    if (m == 0 || gcd_int(a, b) != 1) continue;
    ++done;
    Int n0 = coprime_shift(a, b, m);
    CHECK(gcd_int(a + n0 * b, m) == 1);
    for (Int s = 0; s < n0; ++s) CHECK(gcd_int(a + s * b, m) != 1);  // minimality
  }
}

TEST_CASE("order_prescribe hits exact orders") {
  CHECK(order_prescribe(Ideal(12), {2, 3, 5}) == 12);
  CHECK(order_prescribe(Ideal(4), {2, 3}) == 4);
  CHECK(order_prescribe(Ideal(8), {2, 3, 5}) == 8);
  CHECK_THROWS_AS(order_prescribe(Ideal(12), {2, 5}), input_error);

  for (Int n : {Int(12), Int(8), Int(90), Int(1)}) {
    Ideal ideal(n);
    std::vector<Int> f{2, 3, 5, 7};
    Int v = order_prescribe(ideal, f);
    CHECK(v % n == 0);
    for (const Int& p : f) CHECK(valuation(v, p).order == ideal.exponent_of(p));
  }
}

TEST_CASE("valuation by repeated division") {
  CHECK(valuation(12, 2).order == 2);
  CHECK(valuation(12, 5).order == 0);
  CHECK(valuation(360, 3).order == 2);
  CHECK(valuation(-24, 2).order == 3);
  CHECK_THROWS_AS(valuation(0, 2), input_error);
  CHECK_THROWS_AS(valuation(8, 4), input_error);
}
