#include "ring.hpp"

#include <algorithm>

namespace pfz {

namespace {

const Int kFactorizeCap = Int(1) << 64;

std::vector<std::pair<Int, unsigned>> trial_division(Int n) {
  std::vector<std::pair<Int, unsigned>> factors;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  strip(2);
  for (Int p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

}  // namespace

Ideal::Ideal(const Int& n) : modulus_(n) {
  if (n <= 0) throw input_error("Ideal: modulus must be positive");
  if (n >= kFactorizeCap)
    throw input_error("Ideal: modulus exceeds the trial-division cap, supply factors");
  factors_ = trial_division(n);
}

Ideal::Ideal(const Int& n, std::vector<std::pair<Int, unsigned>> factors)
    : modulus_(n), factors_(std::move(factors)) {
  if (n <= 0) throw input_error("Ideal: modulus must be positive");
  Int prod = 1;
  Int prev = 1;
  for (const auto& [p, e] : factors_) {
    if (p <= prev) throw input_error("Ideal: primes must be strictly increasing");
    if (e == 0) throw input_error("Ideal: exponents must be positive");
    if (p >= kFactorizeCap)
      throw input_error("Ideal: prime factors above 2^64 are not supported");
    if (!is_prime_u64(p)) throw input_error("Ideal: factor is not prime");
    prev = p;
    for (unsigned i = 0; i < e; ++i) prod *= p;
  }
  if (prod != modulus_) throw input_error("Ideal: factors do not multiply to the modulus");
}

unsigned Ideal::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors_)
    if (q == p) return e;
  return 0;
}

Int Ideal::radical() const {
  Int r = 1;
  for (const auto& [p, e] : factors_) r *= p;
  return r;
}

bool is_prime_u64(const Int& p) {
  if (p < 2 || p >= kFactorizeCap) return false;
  for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  // Deterministic Miller-Rabin below 2^64 with the first twelve primes.
  Int d = p - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = boost::multiprecision::powm(Int(a), d, p);
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (unsigned i = 0; i + 1 < r; ++i) {
      x = x * x % p;
      if (x == p - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  // Iterative Euclid on the values themselves; signs come out of the
  // recurrence, so the certificate holds for negative inputs too.
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

std::pair<Int, std::vector<Int>> ext_gcd_vec(const std::vector<Int>& v) {
  std::vector<Int> coeffs(v.size(), 0);
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (g == 0) {
      g = abs_int(v[i]);
      coeffs[i] = v[i] < 0 ? -1 : 1;
      continue;
    }
    ExtGcd e = ext_gcd(g, v[i]);
    for (size_t j = 0; j < i; ++j) coeffs[j] *= e.x;
    coeffs[i] = e.y;
    g = e.g;
  }
  return {g, coeffs};
}

Int crt_solve(const std::vector<std::pair<Int, Int>>& pairs) {
  if (pairs.empty()) throw input_error("crt_solve: empty system");
  Int x = 0;
  Int m = 1;
  for (const auto& [r, mi] : pairs) {
    if (mi < 1) throw input_error("crt_solve: moduli must be >= 1");
    ExtGcd e = ext_gcd(m, mi);
    if (e.g != 1) throw input_error("crt_solve: moduli are not pairwise coprime");
    // x' = x mod m, x' = r mod mi: x' = x + m * ((r - x) * m^-1 mod mi)
    Int t = mod_floor((r - x) * e.x, mi);
    x += m * t;
    m *= mi;
    x = mod_floor(x, m);
  }
  return x;
}

Int coprime_shift(const Int& a, const Int& b, const Int& m) {
  if (m == 0) throw input_error("coprime_shift: m must be nonzero");
  if (gcd_int(a, b) != 1) throw input_error("coprime_shift: gcd(a, b) must be 1");
  // Least solution by scan. A solution exists within one period of the
  // progression: primes of m dividing b never divide a + n0*b, the others
  // exclude one residue class of n0 each.
  Int n0 = 0;
  Int val = a;
  while (gcd_int(val, m) != 1) {
    ++n0;
    val += b;
  }
  return n0;
}

Int order_prescribe(const Ideal& ideal, const std::vector<Int>& primes) {
  for (const auto& [p, e] : ideal.factors()) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end())
      throw input_error("order_prescribe: prime set must contain every prime of the ideal");
  }
  for (const Int& p : primes) {
    if (!is_prime_u64(p)) throw input_error("order_prescribe: set contains a non-prime");
  }
  // Over the integers the modulus itself already has the exact order at each
  // of its primes and order zero at the rest of F.
  return ideal.modulus();
}

Valuation valuation(const Int& x, const Int& p) {
  if (x == 0) throw input_error("valuation: undefined at 0");
  if (!is_prime_u64(p)) throw input_error("valuation: p must be prime");
  Valuation v{p, 0};
  Int y = abs_int(x);
  while (y % p == 0) {
    y /= p;
    ++v.order;
  }
  return v;
}

}  // namespace pfz
