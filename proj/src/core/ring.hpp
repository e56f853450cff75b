#ifndef PFZ_RING_HPP
#define PFZ_RING_HPP

#include <utility>
#include <vector>

#include "bigint.hpp"

namespace pfz {

// An ideal (n) of the integers, carried together with the prime-power
// factorization n = prod p_i^e_i. The unit ideal is n = 1 with no factors.
class Ideal {
 public:
  // Factorizes n by trial division. Rejects n <= 0 and n >= 2^64.
  explicit Ideal(const Int& n);

  // Builds the ideal from a caller-supplied factorization (for moduli beyond
  // the trial-division cap). The list is validated against the invariants.
  Ideal(const Int& n, std::vector<std::pair<Int, unsigned>> factors);

  const Int& modulus() const { return modulus_; }
  const std::vector<std::pair<Int, unsigned>>& factors() const { return factors_; }

  bool is_unit() const { return modulus_ == 1; }
  // Exponent of p in the factorization, 0 if absent.
  unsigned exponent_of(const Int& p) const;
  // Product of the distinct primes dividing the modulus.
  Int radical() const;

  bool operator==(const Ideal& other) const { return modulus_ == other.modulus_; }
  bool operator!=(const Ideal& other) const { return modulus_ != other.modulus_; }

 private:
  Int modulus_;
  std::vector<std::pair<Int, unsigned>> factors_;
};

// Order of a prime in an integer.
struct Valuation {
  Int prime;
  unsigned order = 0;
};

struct ExtGcd {
  Int g;  // gcd(a, b) >= 0; gcd(0, 0) = 0
  Int x;
  Int y;  // a*x + b*y = g
};

ExtGcd ext_gcd(const Int& a, const Int& b);

// Bezout certificate for a whole vector: g = gcd(v), sum v_i * c_i = g.
// For the zero vector g = 0 and all coefficients are 0.
std::pair<Int, std::vector<Int>> ext_gcd_vec(const std::vector<Int>& v);

// Solves x = r_i mod m_i for pairwise coprime m_i >= 1; the result is the
// unique solution in [0, prod m_i). Rejects non-coprime moduli.
Int crt_solve(const std::vector<std::pair<Int, Int>>& pairs);

// Smallest n0 >= 0 with gcd(a + n0*b, m) = 1. Requires gcd(a, b) = 1, m != 0.
Int coprime_shift(const Int& a, const Int& b, const Int& m);

// An element f of (n) whose order at every prime of F equals the exponent of
// that prime in the ideal (zero for primes outside the factorization).
// F must contain every prime of the ideal.
Int order_prescribe(const Ideal& ideal, const std::vector<Int>& primes);

// Largest e with p^e dividing x. Rejects x = 0.
Valuation valuation(const Int& x, const Int& p);

bool is_prime_u64(const Int& p);

}  // namespace pfz

#endif
