#include "verify.hpp"

#include <random>
#include <set>

#include "lifting.hpp"
#include "oracle.hpp"
#include "solvers.hpp"

namespace pfz {

namespace {

std::vector<Ideal> prime_power_split(const Ideal& ideal) {
  std::vector<Ideal> out;
  for (const auto& [p, e] : ideal.factors()) {
    Int q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    out.emplace_back(q, std::vector<std::pair<Int, unsigned>>{{p, e}});
  }
  return out;
}

ProjPoint random_point(const Ideal& ideal, unsigned dim, std::mt19937_64& rng) {
  const Int& n = ideal.modulus();
  std::uniform_int_distribution<std::uint64_t> dist(0, static_cast<std::uint64_t>(n) - 1);
  while (true) {
    std::vector<Int> coords(dim + 1);
    Int g = n;
    for (Int& c : coords) {
      c = Int(dist(rng));
      g = gcd_int(g, c);
    }
    if (g == 1 || n == 1) return ProjPoint(ideal, coords);
  }
}

void crt_suite(SuiteResult& out, const Int& max_modulus, std::uint64_t budget) {
  for (Int n : {Int(12), Int(36)}) {
    if (n > max_modulus) continue;
    Ideal ideal(n);
    std::vector<Ideal> split = prime_power_split(ideal);
    std::vector<std::vector<CanonicalForm>> spaces;
    for (const Ideal& q : split) spaces.push_back(enumerate_space(q, 1, budget));
    std::vector<size_t> pick(split.size(), 0);
    while (true) {
      std::vector<ProjPoint> targets;
      for (size_t i = 0; i < split.size(); ++i)
        targets.emplace_back(split[i], spaces[i][pick[i]].coords);
      ++out.cases;
      try {
        ProjPoint lifted = crt_lift_point(targets);
        std::vector<ProjPoint> reduced = crt_reduce(lifted, split);
        for (size_t i = 0; i < targets.size(); ++i)
          if (!points_equal(reduced[i], targets[i]))
            throw input_error("reduction mismatch");
      } catch (const std::exception& e) {
        ++out.failures;
        out.notes.push_back("crt n=" + n.str() + ": " + e.what());
      }
      size_t pos = 0;
      while (pos < pick.size()) {
        if (++pick[pos] < spaces[pos].size()) break;
        pick[pos] = 0;
        ++pos;
      }
      if (pos == pick.size()) break;
    }
  }
}

void sl_suite(SuiteResult& out, const Int& max_modulus, std::uint64_t budget) {
  Int cap = max_modulus < 8 ? max_modulus : Int(8);
  for (Int n = 2; n <= cap; ++n) {
    Ideal ideal(n);
    for (const ResidueMatrix& m : enumerate_sl(2, ideal, budget)) {
      ++out.cases;
      try {
        UnimodularMatrix lift = sl_lift(m);
        if (lift.entries().reduced_mod(n) != m.entries())
          throw input_error("reduction mismatch");
      } catch (const std::exception& e) {
        ++out.failures;
        out.notes.push_back("sl n=" + n.str() + ": " + e.what());
      }
    }
  }
}

void sigma_suite(SuiteResult& out, const Int& max_modulus, std::uint64_t seed,
                 std::uint64_t budget) {
  if (max_modulus >= 36) {
    Ideal i4(4), i9(9);
    for (const CanonicalForm& a : enumerate_space(i4, 1, budget)) {
      for (const CanonicalForm& b : enumerate_space(i9, 1, budget)) {
        ++out.cases;
        SolveReport report =
            sigma_preimage({ProjPoint(i4, a.coords), ProjPoint(i9, b.coords)});
        if (!report.pass) {
          ++out.failures;
          out.notes.push_back("sigma pair failed");
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<Ideal> moduli{Ideal(2), Ideal(3), Ideal(5)};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ProjPoint> targets;
    for (const Ideal& ideal : moduli) targets.push_back(random_point(ideal, 2, rng));
    ++out.cases;
    SolveReport report = sigma_preimage(targets);
    if (!report.pass) {
      ++out.failures;
      out.notes.push_back("sigma random triple failed");
    }
  }
}

void sumproduct_suite(SuiteResult& out, const Int& max_modulus, std::uint64_t budget) {
  if (max_modulus >= 15) {
    Ideal i3(3), i5(5);
    for (const CanonicalForm& a : enumerate_space(i3, 1, budget)) {
      for (const CanonicalForm& b : enumerate_space(i5, 1, budget)) {
        ++out.cases;
        SolveReport report =
            sumproduct_preimage({ProjPoint(i3, a.coords), ProjPoint(i5, b.coords)});
        if (!report.pass) {
          ++out.failures;
          out.notes.push_back("sumproduct pair failed");
        }
      }
    }
  }
  // One-row maps miss [1:-1]: the image deficit must be exactly that class.
  ++out.cases;
  ImageReport image = sumproduct_image(1, 2, {Ideal(3)}, budget);
  CanonicalForm missing_point = canonicalize(ProjPoint(Ideal(3), {1, -1}));
  bool exact = image.missing.size() == 1 && !image.missing_truncated &&
               image.missing[0].size() == 1 && image.missing[0][0] == missing_point;
  if (!exact) {
    ++out.failures;
    out.notes.push_back("sumproduct r=1 deficit is not exactly [1:-1] mod 3");
  }
}

void fixedpoint_suite(SuiteResult& out, const Int& max_modulus, std::uint64_t budget) {
  const std::pair<int, int> cases[] = {{2, 3}, {3, 5}};
  for (auto [p, q] : cases) {
    if (Int(p) * q > max_modulus) continue;
    ++out.cases;
    ImageReport image = fixed_point_image(p, q);
    CanonicalForm bad_p = canonicalize(ProjPoint(Ideal(p), {1, -1}));
    CanonicalForm bad_q = canonicalize(ProjPoint(Ideal(q), {1, -1}));
    std::set<std::vector<CanonicalForm>> expected;
    for (const CanonicalForm& a : enumerate_space(Ideal(p), 1, budget))
      expected.insert({a, bad_q});
    for (const CanonicalForm& b : enumerate_space(Ideal(q), 1, budget))
      expected.insert({bad_p, b});
    std::set<std::vector<CanonicalForm>> got(image.missing.begin(), image.missing.end());
    if (image.missing_truncated || got != expected) {
      ++out.failures;
      out.notes.push_back("fixedpoint p=" + std::to_string(p) + " q=" + std::to_string(q) +
                          ": missing set is not the two lines");
    }
  }
}

}  // namespace

SuiteResult run_suite(const std::string& name, const Int& max_modulus, std::uint64_t seed,
                      std::uint64_t budget) {
  SuiteResult out;
  out.suite = name;
  out.seed = seed;
  if (name == "crt") {
    crt_suite(out, max_modulus, budget);
  } else if (name == "sl") {
    sl_suite(out, max_modulus, budget);
  } else if (name == "sigma") {
    sigma_suite(out, max_modulus, seed, budget);
  } else if (name == "sumproduct") {
    sumproduct_suite(out, max_modulus, budget);
  } else if (name == "fixedpoint") {
    fixedpoint_suite(out, max_modulus, budget);
  } else {
    throw input_error("run_suite: unknown suite " + name);
  }
  return out;
}

Json suite_to_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  j["notes"] = r.notes;
  return j;
}

}  // namespace pfz
