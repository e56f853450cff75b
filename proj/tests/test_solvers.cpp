#include <doctest.h>

#include <random>
#include <set>

#include "oracle_helpers.hpp"
#include "solvers.hpp"

using namespace pfz;

TEST_CASE("sigma_monoid basics") {
  CHECK(sigma_monoid({2, 3}, {}) == 1);
  CHECK(sigma_monoid({2, 3}, {{2, 3}}) == 8);
  CHECK(sigma_monoid({2, 3}, {{2, 1}, {3, 2}}) == 18);
  CHECK_THROWS_AS(sigma_monoid({2, 3}, {{5, 1}}), input_error);
  CHECK_THROWS_AS(sigma_monoid({2, 3}, {{2, 1}, {2, 2}}), input_error);
}

TEST_CASE("sigma_monoid comaximality and valuation conditions") {
  std::vector<Int> f{2, 3, 5, 7};
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    // split F into two disjoint supports: the values must be coprime
    std::vector<std::pair<Int, unsigned>> fa, fb;
    for (const Int& p : f) {
      unsigned e = static_cast<unsigned>(rng() % 3);
      if (e == 0) continue;
      if (rng() % 2)
        fa.push_back({p, e});
      else
        fb.push_back({p, e});
    }
    Int a = sigma_monoid(f, fa);
    Int b = sigma_monoid(f, fb);
    CHECK(gcd_int(a, b) == 1);
    CHECK(a * b == sigma_monoid(f, [&] {
      auto merged = fa;
      merged.insert(merged.end(), fb.begin(), fb.end());
      std::sort(merged.begin(), merged.end());
      return merged;
    }()));
    for (const auto& [p, e] : fa) CHECK(valuation(a, p).order == e);
    CHECK(a != 0);
  }
}

TEST_CASE("s_set_membership") {
  CHECK(s_set_membership(12, Ideal(12), {2, 3}));
  CHECK_FALSE(s_set_membership(24, Ideal(12), {2, 3}));
  CHECK_FALSE(s_set_membership(60, Ideal(12), {2, 3, 5}));
  CHECK(s_set_membership(-12, Ideal(12), {2, 3}));
  CHECK_THROWS_AS(s_set_membership(0, Ideal(12), {2, 3}), input_error);
}

TEST_CASE("rep_factor frozen cases") {
  FactoredRep a = rep_factor(ProjPoint(Ideal(4), {2, 3}), {2});
  CHECK(a.g == std::vector<Int>{2, 1});
  CHECK(a.v == std::vector<Int>{1, 3});

  // The naive valuation split of [4:6] is g=(1,3), v=(4,2), but (4,6) is not
  // unital over the integers; the first unit factor absorbs a shift that
  // keeps its residue class. The valuation parts and congruences are pinned.
  FactoredRep b = rep_factor(ProjPoint(Ideal(9), {4, 6}), {3});
  CHECK(b.g == std::vector<Int>{1, 3});
  CHECK(mod_floor(b.v[0], 9) == 4);
  CHECK(mod_floor(b.v[1], 3) == 2);
  CHECK(gcd_vec(b.assembled()) == 1);

  FactoredRep c = rep_factor(ProjPoint(Ideal(25), {1, 0}), {5});
  CHECK(c.g == std::vector<Int>{1, 25});
  CHECK(c.v == std::vector<Int>{1, 1});

  CHECK_THROWS_AS(rep_factor(ProjPoint(Ideal(4), {2, 3}), {3}), input_error);
}

TEST_CASE("rep_factor round trip on random points") {
  std::mt19937_64 rng(67);
  int done = 0;
  while (done < 1000) {
    Int n = rng() % 100 + 1;
    size_t len = 2 + done % 3;
    std::vector<Int> coords(len);
    Int g = n;
    for (Int& x : coords) {
      x = Int(rng() % 100);
      g = gcd_int(g, mod_floor(x, n));
    }
    if (g != 1 && n != 1) continue;
    ++done;
    ProjPoint p(Ideal(n), coords);
    std::vector<Int> f;
    for (const auto& [q, e] : p.ideal().factors()) f.push_back(q);
    if (done % 3 == 0) f.push_back(101);  // a prime outside the modulus
    FactoredRep rep = rep_factor(p, f);

    std::vector<Int> assembled = rep.assembled();
    CHECK(gcd_vec(assembled) == 1);
    CHECK(points_equal(p, ProjPoint(p.ideal(), assembled)));
    for (size_t i = 0; i < len; ++i) {
      for (const Int& q : f) {
        CHECK(rep.v[i] % q != 0);
        unsigned eq = p.ideal().exponent_of(q);
        Int x = p.coords()[i] == 0 ? n : p.coords()[i];
        unsigned want = std::min<unsigned>(eq, valuation(x, q).order);
        CHECK(valuation(rep.g[i], q).order == want);
      }
    }
  }
}

TEST_CASE("comax_bezout postconditions") {
  auto check = [](const Int& x, const Int& y, const Int& n) {
    auto [a, b] = comax_bezout(x, y, n);
    CHECK(gcd_int(a, b) == 1);
    CHECK(mod_floor(a * x + b * y, n) == mod_floor(Int(1), n));
  };
  check(1, 0, 5);
  check(2, 3, 5);
  check(2, 4, 5);
  CHECK_THROWS_AS(comax_bezout(2, 4, 6), input_error);

  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long long> dist(-100, 100);
  int done = 0;
  while (done < 1000) {
    Int x = dist(rng), y = dist(rng), n = rng() % 50 + 1;
    if (gcd_int(gcd_int(x, y), n) != 1) continue;
    ++done;
    check(x, y, n);
  }
}

TEST_CASE("unital_shift postconditions") {
  auto check = [](const std::vector<Int>& a, const Int& n) {
    std::vector<Int> t = unital_shift(a, n);
    REQUIRE(t.size() == a.size());
    std::vector<Int> shifted(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(mod_floor(t[i], n) == 0);
      shifted[i] = a[i] + t[i];
    }
    CHECK(gcd_vec(shifted) == 1);
  };
  check({1, 0}, 7);
  check({2, 4}, 5);
  check({6, 10, 15}, 7);
  check({0, 0, 1}, 1);
  check({3, 3}, 1);  // modulus one allows any shift
  CHECK_THROWS_AS(unital_shift({2, 4}, 6), input_error);

  std::mt19937_64 rng(73);
  std::uniform_int_distribution<long long> dist(-60, 60);
  int done = 0;
  while (done < 1000) {
    size_t len = 2 + done % 4;
    Int n = rng() % 40 + 1;
    std::vector<Int> a(len);
    Int g = n;
    for (Int& x : a) {
      x = dist(rng);
      g = gcd_int(g, x);
    }
    if (g != 1 && n != 1) continue;
    ++done;
    check(a, n);
  }
}

TEST_CASE("verify_certificate rejects bad certificates") {
  Ideal i2(2), i3(3);
  std::vector<ProjPoint> targets{ProjPoint(i2, {1, 0}), ProjPoint(i3, {0, 1})};
  SolveReport good = verify_certificate(Mat::identity(2), CertificateEquation::determinant,
                                        targets);
  CHECK(good.pass);
  CHECK(good.equation_value == 1);

  // wrong determinant
  SolveReport bad_det = verify_certificate(Mat({{2, 0}, {0, 1}}),
                                           CertificateEquation::determinant, targets);
  CHECK_FALSE(bad_det.pass);

  // right determinant, wrong row class
  SolveReport bad_row = verify_certificate(Mat({{0, -1}, {1, 0}}),
                                           CertificateEquation::determinant, targets);
  CHECK(bad_row.equation_value == 1);
  CHECK_FALSE(bad_row.rows[0].equal);
  CHECK_FALSE(bad_row.pass);
}

TEST_CASE("sl2_preimage frozen and exhaustive cases") {
  Ideal i2(2), i3(3);
  SolveReport trivial = sl2_preimage(ProjPoint(i2, {1, 0}), ProjPoint(i3, {0, 1}));
  CHECK(trivial.pass);

  SolveReport ones = sl2_preimage(ProjPoint(i2, {1, 1}), ProjPoint(i3, {1, 1}));
  CHECK(ones.pass);
  CHECK(determinant(ones.certificate) == 1);

  CHECK_THROWS_AS(sl2_preimage(ProjPoint(Ideal(4), {1, 0}), ProjPoint(Ideal(6), {1, 0})),
                  input_error);

  Ideal i4(4), i9(9);
  for (const auto& a : enumerate_space(i4, 1))
    for (const auto& b : enumerate_space(i9, 1)) {
      SolveReport r = sl2_preimage(ProjPoint(i4, a.coords), ProjPoint(i9, b.coords));
      CHECK(r.pass);
    }
}

TEST_CASE("sl2_preimage with unit ideals") {
  CHECK(sl2_preimage(ProjPoint(Ideal(1), {0, 0}), ProjPoint(Ideal(5), {2, 3})).pass);
  CHECK(sl2_preimage(ProjPoint(Ideal(5), {2, 3}), ProjPoint(Ideal(1), {0, 0})).pass);
  CHECK(sl2_preimage(ProjPoint(Ideal(1), {0, 0}), ProjPoint(Ideal(1), {0, 0})).pass);
}

TEST_CASE("sigma_preimage base cases and exhaustive pairs") {
  Ideal i2(2), i3(3);
  SolveReport id_case = sigma_preimage({ProjPoint(i2, {1, 0}), ProjPoint(i3, {0, 1})});
  CHECK(id_case.pass);
  CHECK(id_case.certificate == Mat::identity(2));

  SolveReport ones = sigma_preimage({ProjPoint(i2, {1, 1}), ProjPoint(i3, {1, 1})});
  CHECK(ones.pass);

  Ideal i4(4), i9(9);
  for (const auto& a : enumerate_space(i4, 1))
    for (const auto& b : enumerate_space(i9, 1)) {
      SolveReport r = sigma_preimage({ProjPoint(i4, a.coords), ProjPoint(i9, b.coords)});
      CHECK(r.pass);
    }

  CHECK_THROWS_AS(sigma_preimage({ProjPoint(i2, {1, 0, 0}), ProjPoint(i3, {1, 0, 0})}),
                  input_error);  // dim mismatch: k=2 needs dim 1
  CHECK_THROWS_AS(sigma_preimage({ProjPoint(i2, {1, 0})}), input_error);
}

TEST_CASE("sigma_preimage random triples k=3") {
  std::mt19937_64 rng(79);
  std::vector<Ideal> moduli{Ideal(2), Ideal(3), Ideal(5)};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ProjPoint> targets;
    for (const Ideal& ideal : moduli) {
      const Int& n = ideal.modulus();
      while (true) {
        std::vector<Int> coords(3);
        Int g = n;
        for (Int& c : coords) {
          c = Int(rng() % 30);
          g = gcd_int(g, mod_floor(c, n));
        }
        if (g == 1) {
          targets.emplace_back(ideal, coords);
          break;
        }
      }
    }
    SolveReport r = sigma_preimage(targets);
    CHECK(r.pass);
  }
}

TEST_CASE("sigma_preimage with composite moduli and k=4") {
  std::mt19937_64 rng(97);
  auto random_target = [&](const Ideal& ideal, size_t len) {
    const Int& n = ideal.modulus();
    while (true) {
      std::vector<Int> coords(len);
      Int g = n;
      for (Int& c : coords) {
        c = Int(rng() % 50);
        g = gcd_int(g, mod_floor(c, n));
      }
      if (g == 1) return ProjPoint(ideal, coords);
    }
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ProjPoint> pair{random_target(Ideal(6), 2), random_target(Ideal(35), 2)};
    CHECK(sigma_preimage(pair).pass);
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ProjPoint> quad{random_target(Ideal(2), 4), random_target(Ideal(3), 4),
                                random_target(Ideal(5), 4), random_target(Ideal(49), 4)};
    CHECK(sigma_preimage(quad).pass);
  }
}

TEST_CASE("sigma invariance under the group action") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<long long> dist(-2, 2);
  Ideal i2(2), i3(3), i5(5);
  auto random_sl3 = [&] {
    Mat m = Mat::identity(3);
    for (int ops = 0; ops < 5; ++ops) {
      size_t i = rng() % 3, j = rng() % 3;
      if (i == j) continue;
      Mat e = Mat::identity(3);
      e.at(i, j) = dist(rng);
      m = m * e;
    }
    return UnimodularMatrix(m);
  };
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ProjPoint> targets{ProjPoint(i2, {1, 0, 1}), ProjPoint(i3, {1, 2, 0}),
                                   ProjPoint(i5, {2, 3, 1})};
    UnimodularMatrix g = random_sl3();
    SolveReport direct = sigma_preimage(targets);
    std::vector<ProjPoint> acted;
    for (const ProjPoint& t : targets) acted.push_back(act_on_point(g, t));
    SolveReport moved = sigma_preimage(acted);
    REQUIRE(direct.pass);
    REQUIRE(moved.pass);
    // certificate * g^-1 solves the acted instance row by row
    Mat shifted = direct.certificate * g.inverse().entries();
    for (size_t i = 0; i < 3; ++i) {
      ProjPoint row(acted[i].ideal(), shifted.row(i));
      CHECK(points_equal(row, acted[i]));
    }
  }
}

TEST_CASE("grassmann_preimage shapes") {
  Ideal i2(2), i3(3);
  // r = k degenerates to the square solver
  SolveReport square = grassmann_preimage({ProjPoint(i2, {1, 1}), ProjPoint(i3, {1, 2})}, 2);
  CHECK(square.pass);

  SolveReport single = grassmann_preimage({ProjPoint(i2, {1, 1})}, 2);
  CHECK(single.pass);
  CHECK(single.certificate.rows() == 1);
  CHECK(single.certificate.cols() == 2);

  SolveReport wide = grassmann_preimage({ProjPoint(i2, {1, 0, 1}), ProjPoint(i3, {1, 2, 2})}, 3);
  CHECK(wide.pass);
  CHECK(wide.equation_value == 1);  // gcd of the 2x2 minors

  CHECK_THROWS_AS(grassmann_preimage({ProjPoint(i2, {1, 1}), ProjPoint(i3, {1, 1})}, 1),
                  input_error);
}

TEST_CASE("sumproduct_preimage base and exhaustive cases") {
  Ideal i3(3), i5(5);
  SolveReport frozen = sumproduct_preimage({ProjPoint(i3, {1, 0}), ProjPoint(i5, {0, 1})});
  CHECK(frozen.pass);

  SolveReport same = sumproduct_preimage({ProjPoint(i3, {1, 0}), ProjPoint(i5, {1, 0})});
  CHECK(same.pass);

  for (const auto& a : enumerate_space(i3, 1))
    for (const auto& b : enumerate_space(i5, 1)) {
      SolveReport r = sumproduct_preimage({ProjPoint(i3, a.coords), ProjPoint(i5, b.coords)});
      CHECK(r.pass);
      CHECK(r.equation_value == 1);
    }

  CHECK_THROWS_AS(sumproduct_preimage({ProjPoint(i3, {1, 0})}), input_error);  // r = 1
}

TEST_CASE("sumproduct_preimage r=3 random cases") {
  std::mt19937_64 rng(89);
  std::vector<Ideal> moduli{Ideal(2), Ideal(3), Ideal(5)};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ProjPoint> targets;
    for (const Ideal& ideal : moduli) {
      const Int& n = ideal.modulus();
      while (true) {
        std::vector<Int> coords(2 + trial % 2);
        Int g = n;
        for (Int& c : coords) {
          c = Int(rng() % 30);
          g = gcd_int(g, mod_floor(c, n));
        }
        if (g == 1) {
          targets.emplace_back(ideal, coords);
          break;
        }
      }
    }
    SolveReport r = sumproduct_preimage(targets);
    CHECK(r.pass);
  }
}

TEST_CASE("sumproduct_preimage r=4 and composite moduli") {
  std::mt19937_64 rng(101);
  auto random_target = [&](const Ideal& ideal, size_t len) {
    const Int& n = ideal.modulus();
    while (true) {
      std::vector<Int> coords(len);
      Int g = n;
      for (Int& c : coords) {
        c = Int(rng() % 50);
        g = gcd_int(g, mod_floor(c, n));
      }
      if (g == 1) return ProjPoint(ideal, coords);
    }
  };
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<ProjPoint> targets{random_target(Ideal(2), 2), random_target(Ideal(3), 2),
                                   random_target(Ideal(5), 2), random_target(Ideal(7), 2)};
    SolveReport r = sumproduct_preimage(targets);
    CHECK(r.pass);
  }
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<ProjPoint> targets{random_target(Ideal(12), 3), random_target(Ideal(35), 3)};
    SolveReport r = sumproduct_preimage(targets);
    CHECK(r.pass);
  }
}

TEST_CASE("solver certificates stay modest after size reduction") {
  Ideal i4(4), i9(9);
  for (const auto& a : enumerate_space(i4, 1)) {
    SolveReport r = sl2_preimage(ProjPoint(i4, a.coords), ProjPoint(i9, {4, 7}));
    REQUIRE(r.pass);
    for (const auto& row : r.certificate.to_rows())
      for (const Int& e : row) CHECK(abs_int(e) < 10000);
  }
}
